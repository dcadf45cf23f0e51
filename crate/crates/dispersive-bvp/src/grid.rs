//! Uniform grids on `[0, L]` and discrete functionals.
//!
//! All pairings use the composite trapezoid rule, which is second-order
//! accurate and therefore consistent with the finite-difference operators in
//! [`crate::stencil`]. The sup norm is the nodal maximum; no reconstruction
//! between nodes is attempted.

use crate::{Error, Result};

/// Smallest admissible number of intervals. High-order stencils need room;
/// assembling an operator with `l` dispersive terms additionally requires
/// `N >= 4l + 8` (checked at assembly time).
pub const MIN_INTERVALS: usize = 12;

/// A uniform mesh on `[0, L]` with `intervals` cells and `intervals + 1`
/// nodes `x_i = i * spacing`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    length: f64,
    intervals: usize,
}

impl Grid {
    /// Builds a uniform grid on `[0, length]` with `intervals` cells.
    pub fn new(length: f64, intervals: usize) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::validation(format!(
                "grid length must be positive and finite, got {length}"
            )));
        }
        if intervals < MIN_INTERVALS {
            return Err(Error::GridTooSmall(format!(
                "need at least {MIN_INTERVALS} intervals, got {intervals}"
            )));
        }
        Ok(Grid { length, intervals })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Number of cells `N`; the grid has `N + 1` nodes.
    pub fn intervals(&self) -> usize {
        self.intervals
    }

    pub fn node_count(&self) -> usize {
        self.intervals + 1
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.intervals as f64
    }

    /// Coordinate of node `i`. The endpoints are exact: `node(0) == 0` and
    /// `node(N) == length`.
    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i <= self.intervals);
        if i == self.intervals {
            self.length
        } else {
            i as f64 * self.spacing()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.node_count()).map(move |i| self.node(i))
    }
}

/// Nodal values of a function on a [`Grid`].
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl GridFunction {
    /// Wraps nodal values; the vector length must equal `grid.node_count()`.
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.node_count() {
            return Err(Error::GridMismatch(format!(
                "expected {} nodal values, got {}",
                grid.node_count(),
                values.len()
            )));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        GridFunction {
            grid,
            values: vec![0.0; grid.node_count()],
        }
    }

    /// Samples `f` at the grid nodes.
    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.nodes().map(f).collect();
        GridFunction { grid, values }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `self - other`, node-wise.
    pub fn difference(&self, other: &GridFunction) -> Result<GridFunction> {
        same_grid(self, other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        Ok(GridFunction {
            grid: self.grid,
            values,
        })
    }

    /// Node-wise scaling by `c`.
    pub fn scaled(&self, c: f64) -> GridFunction {
        GridFunction {
            grid: self.grid,
            values: self.values.iter().map(|v| c * v).collect(),
        }
    }
}

fn same_grid(u: &GridFunction, v: &GridFunction) -> Result<()> {
    if u.grid != v.grid {
        return Err(Error::GridMismatch(format!(
            "left grid (L = {}, N = {}) differs from right grid (L = {}, N = {})",
            u.grid.length,
            u.grid.intervals,
            v.grid.length,
            v.grid.intervals
        )));
    }
    Ok(())
}

/// Trapezoid approximation of the `L^2(0, L)` inner product `(u, v)`.
///
/// Exact for piecewise-linear integrands, symmetric, and positive
/// semidefinite on nodal values.
pub fn l2_inner(u: &GridFunction, v: &GridFunction) -> Result<f64> {
    same_grid(u, v)?;
    Ok(trapezoid_inner(u.values(), v.values(), u.grid.spacing()))
}

/// `||u|| = (u, u)^{1/2}` with the trapezoid pairing.
pub fn l2_norm(u: &GridFunction) -> f64 {
    trapezoid_inner(u.values(), u.values(), u.grid.spacing())
        .max(0.0)
        .sqrt()
}

/// `||u - v||` in the discrete `L^2` norm.
pub fn l2_distance(u: &GridFunction, v: &GridFunction) -> Result<f64> {
    same_grid(u, v)?;
    let dx = u.grid.spacing();
    let mut acc = 0.0;
    let n = u.len();
    for i in 0..n {
        let d = u.values[i] - v.values[i];
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += w * d * d;
    }
    Ok((acc * dx).max(0.0).sqrt())
}

/// Trapezoid approximation of the weighted pairing `((1 + x), f^2)`.
///
/// Since the weight satisfies `1 + x >= 1` node-wise, the result is never
/// smaller than the plain `(f, f)` pairing on the same grid.
pub fn weighted_f2(f: &GridFunction) -> f64 {
    let dx = f.grid.spacing();
    let n = f.len();
    let mut acc = 0.0;
    for i in 0..n {
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        let x = f.grid.node(i);
        acc += w * (1.0 + x) * f.values[i] * f.values[i];
    }
    acc * dx
}

/// Nodal maximum of `|u|`.
pub fn sup_norm(u: &GridFunction) -> f64 {
    u.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

fn trapezoid_inner(u: &[f64], v: &[f64], dx: f64) -> f64 {
    let n = u.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += u[i] * v[i];
    }
    acc -= 0.5 * (u[0] * v[0] + u[n - 1] * v[n - 1]);
    acc * dx
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn grid_nodes_and_spacing() {
        let g = Grid::new(1.0, 80).unwrap();
        assert_relative_eq!(g.spacing(), 0.0125, max_relative = 1e-15);
        assert_relative_eq!(g.node(40), 0.5, max_relative = 1e-15);
        assert_eq!(g.node(0), 0.0);
        assert_eq!(g.node(80), 1.0);

        let g = Grid::new(2.0, 16).unwrap();
        let nodes: Vec<f64> = g.nodes().collect();
        assert_eq!(nodes.len(), 17);
        assert_relative_eq!(nodes[4], 0.5, max_relative = 1e-15);
        // strictly increasing, constant spacing
        for w in nodes.windows(2) {
            assert_relative_eq!(w[1] - w[0], g.spacing(), max_relative = 1e-12);
        }
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(Grid::new(0.0, 64).is_err());
        assert!(Grid::new(-1.0, 64).is_err());
        assert!(Grid::new(f64::NAN, 64).is_err());
        assert!(matches!(Grid::new(1.0, 3), Err(Error::GridTooSmall(_))));
    }

    #[test]
    fn inner_product_exact_on_linears() {
        let g = Grid::new(1.0, 20).unwrap();
        let one = GridFunction::from_fn(g, |_| 1.0);
        let x = GridFunction::from_fn(g, |x| x);
        assert_relative_eq!(l2_inner(&one, &one).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(l2_inner(&one, &x).unwrap(), 0.5, max_relative = 1e-14);

        let g = Grid::new(3.0, 30).unwrap();
        let one = GridFunction::from_fn(g, |_| 1.0);
        assert_relative_eq!(l2_inner(&one, &one).unwrap(), 3.0, max_relative = 1e-14);
    }

    #[test]
    fn inner_product_sine_squared() {
        let g = Grid::new(1.0, 64).unwrap();
        let s = GridFunction::from_fn(g, |x| (PI * x).sin());
        // closed form: integral of sin^2(pi x) over (0,1) is 1/2
        assert!((l2_inner(&s, &s).unwrap() - 0.5).abs() < 1e-3);
    }

    #[test]
    fn inner_product_rejects_grid_mismatch() {
        let u = GridFunction::zeros(Grid::new(1.0, 16).unwrap());
        let v = GridFunction::zeros(Grid::new(1.0, 32).unwrap());
        assert!(matches!(l2_inner(&u, &v), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn weighted_pairing_values() {
        let g = Grid::new(2.0, 64).unwrap();
        let one = GridFunction::from_fn(g, |_| 1.0);
        // integral of (1+x) over (0,L) = L + L^2/2; exact for trapezoid
        assert_relative_eq!(weighted_f2(&one), 4.0, max_relative = 1e-13);

        let zero = GridFunction::zeros(g);
        assert_eq!(weighted_f2(&zero), 0.0);

        let g = Grid::new(1.0, 128).unwrap();
        let f = GridFunction::from_fn(g, |x| x);
        // integral of (1+x) x^2 = 1/3 + 1/4 = 7/12
        assert!((weighted_f2(&f) - 7.0 / 12.0).abs() < 1e-4);
    }

    #[test]
    fn weighted_dominates_plain_norm() {
        let g = Grid::new(1.5, 48).unwrap();
        let f = GridFunction::from_fn(g, |x| (3.0 * x).cos() - 0.3 * x);
        assert!(weighted_f2(&f) >= l2_inner(&f, &f).unwrap());
    }

    #[test]
    fn sup_norm_values() {
        let g = Grid::new(1.0, 64).unwrap();
        assert_eq!(sup_norm(&GridFunction::from_fn(g, |_| -3.0)), 3.0);
        assert_eq!(sup_norm(&GridFunction::zeros(g)), 0.0);
        // max of x(1-x) sits at the midpoint node when N is even
        let u = GridFunction::from_fn(g, |x| x * (1.0 - x));
        assert_eq!(sup_norm(&u), 0.25);
    }

    #[test]
    fn quadrature_error_halves_at_second_order() {
        // smooth non-polynomial integrand
        let exact = 0.5; // integral of sin^2(pi x)
        let err = |n: usize| {
            let g = Grid::new(1.0, n).unwrap();
            let s = GridFunction::from_fn(g, |x| (PI * x).sin());
            (l2_inner(&s, &s).unwrap() - exact).abs()
        };
        let ratio = err(64) / err(128);
        assert!(
            (3.5..=4.5).contains(&ratio),
            "quadrature refinement ratio {ratio} outside [3.5, 4.5]"
        );
    }

    #[test]
    fn cauchy_schwarz_and_symmetry_spot_check() {
        let g = Grid::new(1.0, 40).unwrap();
        let u = GridFunction::from_fn(g, |x| (5.0 * x).sin() + 0.2);
        let v = GridFunction::from_fn(g, |x| x * x - 0.7 * x);
        let uv = l2_inner(&u, &v).unwrap();
        let vu = l2_inner(&v, &u).unwrap();
        assert_relative_eq!(uv, vu, max_relative = 1e-15);
        assert!(uv * uv <= l2_inner(&u, &u).unwrap() * l2_inner(&v, &v).unwrap() * (1.0 + 1e-14));
    }
}
