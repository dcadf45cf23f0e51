use thiserror::Error;

/// Errors reported across the crate.
///
/// Solver *non-convergence* is not an error: iterative drivers return a
/// report with `converged = false`. Errors are reserved for invalid input,
/// structurally impossible requests (stencil does not fit), singular
/// matrices, and I/O failures.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid user input: bad config value, inadmissible parameter range,
    /// malformed descriptor.
    #[error("{0}")]
    Validation(String),

    /// Two grid functions living on different grids were combined.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// The grid has too few nodes for the requested stencil or operator.
    #[error("grid too small: {0}")]
    GridTooSmall(String),

    /// A generated stencil failed its moment-condition post-check.
    #[error("stencil of order {order} on {points} points failed moment verification (residual {residual:.3e})")]
    StencilMoment {
        order: usize,
        points: usize,
        residual: f64,
    },

    /// Exactly singular matrix encountered during factorization.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// The Newton linearization is singular at the current iterate; reducing
    /// the convection strength via `continuation_solve` usually gets past the
    /// fold.
    #[error("singular Jacobian at lambda = {lambda}: {detail}; try continuation_solve with more steps")]
    SingularJacobian { lambda: f64, detail: String },

    /// A check whose precondition does not hold for the supplied function.
    #[error("check {check} not applicable: {reason}")]
    Inapplicable { check: String, reason: String },

    /// Constants required for a threshold formula were not supplied.
    #[error("missing constants: {0}")]
    MissingConstants(String),

    /// A time-marching step failed; carries how far the stationary solver got.
    #[error("march step {step} failed (largest convection fraction reached: {lambda_reached}): {detail}")]
    StepFailed {
        step: usize,
        lambda_reached: f64,
        detail: String,
    },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
