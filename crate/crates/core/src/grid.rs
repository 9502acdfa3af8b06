//! Interior grids, grid-sampled fields and density snapshots.

use crate::error::{Error, Result};

/// Uniform discretization of the open interval (r1, r2) by `n` interior
/// nodes `x_i = r1 + i h`, `i = 1..=n`, `h = (r2 - r1)/(n + 1)`.
///
/// The endpoints are excluded: they belong to the exterior, where the
/// nonlocal killing coefficient diverges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub r1: f64,
    pub r2: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(r1: f64, r2: f64, n: usize) -> Result<Self> {
        if !(r1.is_finite() && r2.is_finite() && r1 < r2) {
            return Err(Error::Domain(format!("grid needs r1 < r2, got ({r1}, {r2})")));
        }
        if n == 0 {
            return Err(Error::Domain("grid needs at least one interior node".into()));
        }
        Ok(Self { r1, r2, n })
    }

    pub fn spacing(&self) -> f64 {
        (self.r2 - self.r1) / (self.n as f64 + 1.0)
    }

    /// Interior node `x_i`, `i` in `1..=n`.
    pub fn node(&self, i: usize) -> f64 {
        self.r1 + i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (1..=self.n).map(|i| self.node(i)).collect()
    }

    pub fn contains(&self, x: f64) -> bool {
        x > self.r1 && x < self.r2
    }

    /// Grid refined to half the spacing; coarse node i coincides with fine
    /// node 2i exactly, which convergence studies rely on.
    pub fn refined(&self) -> Self {
        Self { r1: self.r1, r2: self.r2, n: 2 * self.n + 1 }
    }
}

/// Values of a scalar quantity on the interior nodes of a [`Grid1D`], plus
/// the constant Dirichlet data carried by the two exterior half-lines.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub grid: Grid1D,
    pub values: Vec<f64>,
    pub exterior_left: f64,
    pub exterior_right: f64,
}

impl ScalarField {
    pub fn new(grid: Grid1D, values: Vec<f64>, exterior_left: f64, exterior_right: f64) -> Result<Self> {
        if values.len() != grid.n {
            return Err(Error::Domain(format!(
                "field length {} does not match grid size {}",
                values.len(),
                grid.n
            )));
        }
        Ok(Self { grid, values, exterior_left, exterior_right })
    }

    /// Value at interior node index `i` in `1..=n`.
    pub fn at_node(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Cubic Lagrange interpolation at `x` inside the closed domain, using
    /// the exterior data at the endpoints. Interpolation error is O(h^4),
    /// far below the solver truncation error it is combined with.
    pub fn interpolate(&self, x: f64) -> f64 {
        let g = &self.grid;
        let h = g.spacing();
        // Extended node index 0..=n+1 with boundary values.
        let value = |j: i64| -> f64 {
            if j <= 0 {
                self.exterior_left
            } else if j >= g.n as i64 + 1 {
                self.exterior_right
            } else {
                self.values[(j - 1) as usize]
            }
        };
        let t = (x - g.r1) / h; // position in node units
        let j0 = (t.floor() as i64 - 1).clamp(0, g.n as i64 - 2);
        let mut acc = 0.0;
        for a in 0..4 {
            let ja = j0 + a;
            let xa = ja as f64;
            let mut l = 1.0;
            for b in 0..4 {
                if b != a {
                    let xb = (j0 + b) as f64;
                    l *= (t - xb) / (xa - xb);
                }
            }
            acc += l * value(ja);
        }
        acc
    }

    /// Trapezoid integral over [r1, r2] including the exterior endpoint data.
    pub fn trapezoid_mass(&self) -> f64 {
        let h = self.grid.spacing();
        let interior: f64 = self.values.iter().sum();
        h * (interior + 0.5 * (self.exterior_left + self.exterior_right))
    }
}

/// A probability density at one instant, with mass bookkeeping.
#[derive(Debug, Clone)]
pub struct DensitySnapshot {
    pub field: ScalarField,
    pub time: f64,
    /// Trapezoid mass currently inside the domain.
    pub mass: f64,
    /// 1 - mass: probability already absorbed by the exterior.
    pub leaked_mass: f64,
}

impl DensitySnapshot {
    /// Wraps a raw density field, clipping undershoot no larger than 1e-10
    /// in magnitude to zero. Larger negative values are a solver defect and
    /// are reported as an error.
    pub fn from_field(mut field: ScalarField, time: f64) -> Result<Self> {
        for v in &mut field.values {
            if *v < 0.0 {
                if *v < -1e-10 {
                    return Err(Error::Solver(format!(
                        "density undershoot {v:.3e} at t = {time} exceeds the 1e-10 tolerance"
                    )));
                }
                *v = 0.0;
            }
        }
        let mass = field.trapezoid_mass();
        if !((-1e-12..=1.0 + 1e-6).contains(&mass)) {
            return Err(Error::Solver(format!(
                "density mass {mass} at t = {time} outside [0, 1 + 1e-6]"
            )));
        }
        Ok(Self { field, time, mass, leaked_mass: 1.0 - mass })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn nodes_exclude_boundaries() {
        let g = Grid1D::new(0.0, 1.0, 9).unwrap();
        assert_relative_eq!(g.spacing(), 0.1);
        assert_relative_eq!(g.node(1), 0.1);
        assert_relative_eq!(g.node(9), 0.9);
        assert!(g.contains(0.5) && !g.contains(0.0) && !g.contains(1.0));
    }

    #[test]
    fn degenerate_grids_rejected() {
        assert!(Grid1D::new(0.0, 1.0, 0).is_err());
        assert!(Grid1D::new(1.0, 0.0, 100).is_err());
        assert!(Grid1D::new(0.0, 0.0, 10).is_err());
    }

    #[test]
    fn refinement_shares_nodes() {
        let g = Grid1D::new(0.0, 1.0, 100).unwrap();
        let f = g.refined();
        assert_eq!(f.n, 201);
        for i in (1..=g.n).step_by(7) {
            assert_abs_diff_eq!(g.node(i), f.node(2 * i), epsilon = 1e-15);
        }
    }

    #[test]
    fn interpolation_reproduces_cubics() {
        let g = Grid1D::new(0.0, 1.0, 19).unwrap();
        let cubic = |x: f64| 1.0 + x - 2.0 * x * x + 0.5 * x * x * x;
        let f = ScalarField::new(g, g.nodes().iter().map(|&x| cubic(x)).collect(), cubic(0.0), cubic(1.0)).unwrap();
        for &x in &[0.03, 0.25, 0.5, 0.77, 0.97] {
            assert_abs_diff_eq!(f.interpolate(x), cubic(x), epsilon = 1e-12);
        }
        // Exact at nodes.
        assert_abs_diff_eq!(f.interpolate(g.node(7)), cubic(g.node(7)), epsilon = 1e-13);
    }

    #[test]
    fn snapshot_clips_tiny_undershoot_and_rejects_large() {
        let g = Grid1D::new(0.0, 1.0, 9).unwrap();
        let mut v = vec![0.1; 9];
        v[4] = -5e-11;
        let f = ScalarField::new(g, v, 0.0, 0.0).unwrap();
        let snap = DensitySnapshot::from_field(f, 1.0).unwrap();
        assert_eq!(snap.field.values[4], 0.0);

        let mut bad = vec![0.1; 9];
        bad[2] = -1e-6;
        let f = ScalarField::new(g, bad, 0.0, 0.0).unwrap();
        assert!(DensitySnapshot::from_field(f, 1.0).is_err());
    }
}
