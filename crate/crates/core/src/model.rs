//! Model parameterization and the deterministic logistic baseline.
//!
//! The SDE under study is
//!
//! ```text
//! dX = r X (1 - X/K) dt + lambda X dB(t) + sigma X dL_t^alpha
//! ```
//!
//! with growth rate `r`, carrying capacity `K`, Gaussian intensity `lambda`,
//! jump intensity `sigma` and stability index `alpha`. The pure-Gaussian
//! solvers set `sigma = 0`, the pure-Levy solvers set `lambda = 0`.

use crate::error::{Error, Result};

/// Parameter quintuple of the stochastic logistic model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Intrinsic growth rate (1/time), > 0.
    pub r: f64,
    /// Carrying capacity (population), > 0.
    pub k: f64,
    /// Gaussian noise intensity, >= 0.
    pub lambda: f64,
    /// Levy noise intensity, >= 0.
    pub sigma: f64,
    /// Stability index; must lie in (0, 2) whenever sigma > 0.
    pub alpha: f64,
}

impl ModelParams {
    pub fn new(r: f64, k: f64, lambda: f64, sigma: f64, alpha: f64) -> Result<Self> {
        let p = Self { r, k, lambda, sigma, alpha };
        p.validate()?;
        Ok(p)
    }

    /// Pure-Gaussian parameter set (sigma = 0).
    pub fn gaussian(r: f64, k: f64, lambda: f64) -> Result<Self> {
        Self::new(r, k, lambda, 0.0, 0.0)
    }

    /// Pure-Levy parameter set (lambda = 0).
    pub fn levy(r: f64, k: f64, sigma: f64, alpha: f64) -> Result<Self> {
        Self::new(r, k, 0.0, sigma, alpha)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r > 0.0) || !self.r.is_finite() {
            return Err(Error::Domain(format!("growth rate r must be > 0, got {}", self.r)));
        }
        if !(self.k > 0.0) || !self.k.is_finite() {
            return Err(Error::Domain(format!("carrying capacity K must be > 0, got {}", self.k)));
        }
        if self.lambda < 0.0 || !self.lambda.is_finite() {
            return Err(Error::Domain(format!("lambda must be >= 0, got {}", self.lambda)));
        }
        if self.sigma < 0.0 || !self.sigma.is_finite() {
            return Err(Error::Domain(format!("sigma must be >= 0, got {}", self.sigma)));
        }
        if self.sigma > 0.0 && !(self.alpha > 0.0 && self.alpha < 2.0) {
            return Err(Error::Domain(format!(
                "alpha must lie in (0, 2) when sigma > 0, got {}",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// A parameter set rescaled to dimensionless form, together with the factors
/// needed to map results back to physical units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledModel {
    pub params: ModelParams,
    /// Scaled time = `time_scale` * physical time. Gaussian scaling uses
    /// t = r * t_phys, so mean exit times in scaled units divide by `r`
    /// to recover physical time. The Levy scaling leaves time untouched.
    pub time_scale: f64,
    /// Scaled population = physical population / `population_scale` (= K).
    pub population_scale: f64,
}

/// Rescales the model so that the carrying capacity becomes 1.
///
/// In the pure-Gaussian case the time unit is additionally rescaled by `r`,
/// which maps (r, K, lambda) onto (1, 1, lambda / sqrt(r)). In the Levy case
/// only the population is scaled; `r` stays in the drift.
pub fn nondimensionalize(params: &ModelParams) -> Result<ScaledModel> {
    params.validate()?;
    if params.sigma == 0.0 {
        Ok(ScaledModel {
            params: ModelParams {
                r: 1.0,
                k: 1.0,
                lambda: params.lambda / params.r.sqrt(),
                sigma: 0.0,
                alpha: params.alpha,
            },
            time_scale: params.r,
            population_scale: params.k,
        })
    } else {
        Ok(ScaledModel {
            params: ModelParams { k: 1.0, ..*params },
            time_scale: 1.0,
            population_scale: params.k,
        })
    }
}

/// Closed-form solution of the deterministic logistic equation,
/// `x0 K / (x0 + (K - x0) e^{-rt})`.
pub fn deterministic_solution(x0: f64, t: f64, r: f64, k: f64) -> f64 {
    x0 * k / (x0 + (k - x0) * (-r * t).exp())
}

/// Potential function `U(x) = -(1/2) r x^2 + (1/3) (r/K) x^3` whose negative
/// gradient is the logistic drift. Local maximum at 0, local minimum at K.
pub fn potential(x: f64, r: f64, k: f64) -> f64 {
    -0.5 * r * x * x + (r / k) * x * x * x / 3.0
}
