//! Memory-capacity upper bounds for 1-hidden-layer treelike committee
//! machines (TCM) of sign perceptrons.
//!
//! The crate computes, cross-validates and reports the `n`-scaled capacity
//! bounds of such networks as a function of the (odd) hidden-layer width `d`:
//!
//! * [`plain_rdt`] — the plain dual bound `c_hat(d)` built from Gaussian
//!   order-statistic expectations `phi1(l; d)`,
//! * [`lifted_rdt`] — the partially lifted dual bound `c_bar(d)` obtained by
//!   max–min saddle evaluation and root finding,
//! * [`asymptotics`] — the large-`d` machinery (`c_hat(d)/sqrt(d) -> 6 sqrt(2/pi)`),
//! * [`order_stats_oracle`] — seeded Monte-Carlo estimators used as
//!   independent oracles against the deterministic quadratures,
//! * [`memorization_sim`] — an exact memorization-feasibility simulator at
//!   desk scale,
//! * [`special_math`] — the shared numerical kernels,
//! * [`cli_report`] — the `tcmcap` command-line surface.

pub mod asymptotics;
pub mod cli_report;
mod error;
pub mod lifted_rdt;
pub mod memorization_sim;
pub mod order_stats_oracle;
pub mod plain_rdt;
pub mod special_math;

pub use error::{Error, Result};
pub use plain_rdt::{CapacityResult, Method};
