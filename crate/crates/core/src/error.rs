//! Error type shared by the numerical modules.

use thiserror::Error;

/// Errors raised by the numerical pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    /// Adaptive quadrature hit its recursion limit before meeting the tolerance.
    #[error("quadrature did not converge on [{a}, {b}]")]
    QuadratureNotConverged {
        /// Left end of the offending sub-interval.
        a: f64,
        /// Right end of the offending sub-interval.
        b: f64,
    },

    /// The adaptive integrator could not take a step large enough to make progress.
    #[error("step size underflow at x = {x}")]
    StepSizeUnderflow {
        /// Abscissa where the integrator stalled.
        x: f64,
    },

    /// The inward boundary condition has no decaying branch at the truncation radius.
    #[error("no decaying branch at x = {x}: Re sqrt(W - z) = {decay}")]
    NonDecayingBranch {
        /// Truncation radius.
        x: f64,
        /// Real part of the principal root of `W(X) - z`.
        decay: f64,
    },

    /// One of the shooting solutions vanishes at the matching point.
    #[error("solution vanishes at matching point x = {x}")]
    ZeroAtMatch {
        /// Matching abscissa.
        x: f64,
    },

    /// The secant iteration exhausted its iteration budget.
    #[error("secant iteration did not converge after {iterations} iterations (|miss| = {miss})")]
    NotConverged {
        /// Number of iterations performed.
        iterations: usize,
        /// Last miss-distance magnitude.
        miss: f64,
    },

    /// The secant iteration wandered outside the caller's trust radius.
    #[error("root left the trust region: |z - seed| = {distance} > {radius}")]
    RootCollapse {
        /// Distance between the iterate and the seed.
        distance: f64,
        /// Trust radius supplied by the caller.
        radius: f64,
    },

    /// A continuation step failed.
    #[error("continuation failed at step {step} for index {index}: {message}")]
    Continuation {
        /// Angle step index (0 = starting angle).
        step: usize,
        /// Eigenvalue index being tracked.
        index: usize,
        /// Underlying failure.
        message: alloc::string::String,
    },

    /// Two tracked eigenvalues came within the collision distance.
    #[error("eigenvalues {first} and {second} collided at step {step}")]
    Collision {
        /// First index.
        first: usize,
        /// Second index.
        second: usize,
        /// Angle step index.
        step: usize,
    },

    /// The square root of the eikonal integrand is ambiguous (integrand near zero).
    #[error("branch ambiguity: |phi| = {modulus} at s = {s}")]
    BranchAmbiguity {
        /// Offset from the mode center.
        s: f64,
        /// Modulus of the integrand.
        modulus: f64,
    },

    /// A principal square root would cross its branch cut.
    #[error("branch cut crossed at s = {s}")]
    BranchCut {
        /// Offset from the mode center.
        s: f64,
    },

    /// A cut-off point whose frozen log-derivative does not decay outward.
    #[error("cut-off at s = {s} does not decay (Re y'/y = {real_part})")]
    NonDecayingCutoff {
        /// Cut-off position.
        s: f64,
        /// Real part of the frozen log-derivative.
        real_part: f64,
    },

    /// Two sampled functions are not on compatible grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(&'static str),

    /// The Gram matrix is singular or too badly conditioned to trust.
    #[error("ill-conditioned Gram matrix (condition estimate {condition:e})")]
    IllConditioned {
        /// 1-norm condition estimate.
        condition: f64,
    },

    /// A computed quantity is not finite.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;
