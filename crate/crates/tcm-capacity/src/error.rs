use std::fmt;

/// Errors produced by the numerical engine.
#[derive(Debug, Clone)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// A root-finding bracket did not straddle a sign change.
    NoSignChange { f_lo: f64, f_hi: f64 },
    /// Adaptive quadrature ran out of refinement levels before meeting the
    /// requested tolerance.
    QuadratureNonConvergence {
        estimate: f64,
        err_bound: f64,
        tol: f64,
    },
    /// Input data is degenerate (duplicated, antipodal or rank-deficient
    /// points) and a feasibility decision would be unreliable.
    DegenerateData(String),
    /// A matrix shape does not match the declared network shape.
    ShapeMismatch { expected: usize, got: usize },
    /// The capacity root bracket could not be sign-separated even after
    /// geometric extension; carries the evaluated endpoint values.
    RootBracket {
        alpha_lo: f64,
        f_lo: f64,
        alpha_hi: f64,
        f_hi: f64,
    },
    /// Failure of one element of a sweep, tagged with the offending `d`.
    SweepElement { d: u64, source: Box<Error> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NoSignChange { f_lo, f_hi } => {
                write!(f, "bracket has no sign change: f(lo)={f_lo:e}, f(hi)={f_hi:e}")
            }
            Error::QuadratureNonConvergence {
                estimate,
                err_bound,
                tol,
            } => write!(
                f,
                "quadrature did not converge: estimate={estimate:e}, error bound={err_bound:e}, tolerance={tol:e}"
            ),
            Error::DegenerateData(msg) => write!(f, "degenerate data: {msg}"),
            Error::ShapeMismatch { expected, got } => {
                write!(f, "shape mismatch: expected {expected} columns, got {got}")
            }
            Error::RootBracket {
                alpha_lo,
                f_lo,
                alpha_hi,
                f_hi,
            } => write!(
                f,
                "capacity bracket not sign-separated: f({alpha_lo})={f_lo:e}, f({alpha_hi})={f_hi:e}"
            ),
            Error::SweepElement { d, source } => write!(f, "sweep element d={d} failed: {source}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::SweepElement { source, .. } => Some(source),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
