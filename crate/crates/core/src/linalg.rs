//! Direct linear solvers: Thomas algorithm for the tridiagonal boundary-value
//! problems and dense LU (partial pivoting, via nalgebra) for the nonlocal
//! generator systems.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// Solves a tridiagonal system by LU without pivoting (Thomas algorithm).
///
/// `sub[i] = A[i+1][i]`, `diag[i] = A[i][i]`, `sup[i] = A[i][i+1]`.
pub fn solve_tridiagonal(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::Solver("empty tridiagonal system".into()));
    }
    if rhs.len() != n || (n > 1 && (sub.len() != n - 1 || sup.len() != n - 1)) {
        return Err(Error::Solver("tridiagonal band length mismatch".into()));
    }
    let mut c = vec![0.0; n.saturating_sub(1)];
    let mut d = vec![0.0; n];
    let mut pivot = diag[0];
    if !pivot.is_finite() || pivot.abs() < f64::MIN_POSITIVE {
        return Err(Error::Solver("tridiagonal solve hit a zero pivot at row 0".into()));
    }
    if n > 1 {
        c[0] = sup[0] / pivot;
    }
    d[0] = rhs[0] / pivot;
    for i in 1..n {
        pivot = diag[i] - sub[i - 1] * c[i - 1];
        if !pivot.is_finite() || pivot.abs() < f64::MIN_POSITIVE {
            return Err(Error::Solver(format!("tridiagonal solve hit a zero pivot at row {i}")));
        }
        if i < n - 1 {
            c[i] = sup[i] / pivot;
        }
        d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / pivot;
    }
    let mut x = d;
    for i in (0..n - 1).rev() {
        x[i] -= c[i] * x[i + 1];
    }
    Ok(x)
}

/// Dense LU factorization with partial pivoting, reusable across right-hand
/// sides (the Crank-Nicolson stepper factors once per run).
pub struct DenseLu {
    lu: nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    norm_one: f64,
    n: usize,
}

impl DenseLu {
    pub fn factor(a: &DMatrix<f64>) -> Result<Self> {
        let n = a.nrows();
        if n == 0 || a.ncols() != n {
            return Err(Error::Solver(format!(
                "dense LU needs a square nonempty matrix, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        let norm_one = matrix_norm_one(a);
        Ok(Self { lu: a.clone().lu(), norm_one, n })
    }

    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        if rhs.len() != self.n {
            return Err(Error::Solver("right-hand side length mismatch".into()));
        }
        let b = DVector::from_column_slice(rhs);
        match self.lu.solve(&b) {
            Some(x) => Ok(x.data.into()),
            None => Err(Error::Solver(format!(
                "dense LU solve failed: matrix numerically singular (1-norm {:.3e}, condition estimate unavailable)",
                self.norm_one
            ))),
        }
    }

    /// 1-norm condition estimate, `||A||_1 * ||A^{-1}||_1`. Costs an extra
    /// O(n^3) inversion, so it is computed on demand for diagnostics only.
    pub fn condition_estimate(&self) -> Option<f64> {
        self.lu.try_inverse().map(|inv| self.norm_one * matrix_norm_one(&inv))
    }
}

fn matrix_norm_one(a: &DMatrix<f64>) -> f64 {
    (0..a.ncols())
        .map(|j| a.column(j).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Convenience single-shot dense solve.
pub fn solve_dense(a: &DMatrix<f64>, rhs: &[f64]) -> Result<Vec<f64>> {
    DenseLu::factor(a)?.solve(rhs)
}
