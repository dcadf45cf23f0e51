//! Solver and verification workbench for stationary higher-order dispersive
//! equations on a bounded interval.
//!
//! The equation addressed is
//!
//! ```text
//! a u + sum_{j=1}^{l} (-1)^{j+1} D^{2j+1} u + u^k Du = f   on (0, L)
//! ```
//!
//! with the boundary conditions
//!
//! ```text
//! D^i u(0) = D^i u(L) = 0  for i = 0..l-1,   D^l u(L) = 0.
//! ```
//!
//! For `l = 1` this is the stationary generalized Korteweg-de Vries equation,
//! for `l = 2` the stationary generalized Kawahara equation. The convective
//! exponent `k` is admissible for `1 <= k <= 4l`; the problem is called
//! *regular* for `k < 4l` and *critical* for `k = 4l`, where existence
//! additionally requires a smallness condition on `||f||`.
//!
//! The crate provides:
//!
//! - a uniform-grid discretization with banded second-order finite-difference
//!   operators ([`grid`], [`stencil`], [`banded`]);
//! - the assembled linear operator and its factorized solve ([`operator`]);
//! - Picard fixed-point iteration, damped Newton, and homotopy continuation in
//!   the convection strength for the full nonlinear problem ([`solver`]);
//! - numerical verification of the a priori energy estimates, interpolation
//!   inequalities, and smallness thresholds that govern existence and
//!   uniqueness, plus lower-bound estimation of the interpolation constants
//!   ([`analysis`]);
//! - implicit time marching of the associated evolution equation, one
//!   stationary solve per step ([`evolution`]);
//! - config parsing, CSV/SVG emission, and a small CLI ([`config`], [`output`],
//!   [`cli`]).
//!
//! Everything is deterministic: randomized constant estimation takes an
//! explicit seed, and identical inputs produce identical outputs and files.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod analysis;
pub mod banded;
pub mod cli;
pub mod config;
mod error;
pub mod evolution;
pub mod forcing;
pub mod grid;
pub mod operator;
pub mod output;
pub mod poly;
pub mod solver;
pub mod stencil;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

pub use banded::{BandedLu, BandedMatrix};
pub use forcing::Forcing;
pub use grid::{Grid, GridFunction};
pub use operator::{DiscreteProblem, LinearSolveReport, ProblemSpec, Regularity};
pub use solver::{SolveReport, SolverKind};
