//! Error type shared by all solvers and samplers in this crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// The variants map onto distinct failure classes so that callers (in
/// particular the CLI) can translate them into exit codes without string
/// matching.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter lies outside the mathematical domain of an operation,
    /// e.g. a stability index outside (0, 2) or an invalid grid.
    #[error("domain error: {0}")]
    Domain(String),

    /// An analytic threshold is violated: the requested quantity does not
    /// exist for these parameters (e.g. the stationary density requires
    /// lambda < sqrt(2); above it the normalization integral diverges).
    #[error("threshold error: {0}")]
    Threshold(String),

    /// A linear solve or quadrature failed numerically.
    #[error("solver error: {0}")]
    Solver(String),

    /// A truncated series failed to reach the requested tolerance within
    /// the configured term cap.
    #[error("series did not converge: {0}")]
    NonConvergence(String),

    /// Every Monte Carlo path hit the time horizon without exiting, so no
    /// exit-time estimate can be formed.
    #[error("monte carlo: all {0} paths were censored at t_max")]
    AllCensored(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
