//! Crate-wide error type.

/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("disk radius {radius} not below the injectivity radius {injectivity_radius}")]
    RadiusTooLarge { radius: f64, injectivity_radius: f64 },

    #[error("count must be at least {min}, got {got}")]
    InvalidCount { min: usize, got: usize },

    #[error("eigenvalue level {level} outside the precomputed range (cap {cap})")]
    LevelOutOfRange { level: usize, cap: usize },

    #[error("point belongs to {point:?} but the function lives on {expected:?}")]
    SurfaceMismatch {
        expected: crate::surface::Surface,
        point: crate::surface::Surface,
    },

    #[error("finite-difference step {0} out of range (need 0 < h < 1e-2)")]
    StepTooLarge(f64),

    #[error("point too close to a sphere pole for the finite-difference stencil (theta = {0})")]
    PoleProximity(f64),

    #[error("grid spacing {spacing} exceeds the injectivity radius {injectivity_radius}")]
    ResolutionTooCoarse { spacing: f64, injectivity_radius: f64 },

    #[error("inner L^q norm degenerate (inner {inner}, outer {outer})")]
    DegenerateInnerNorm { inner: f64, outer: f64 },

    #[error("{flagged} of {total} growth records were degenerate (limit 1%)")]
    TooManyDegenerate { flagged: usize, total: usize },

    #[error("Green kernel evaluated at coincident points (|z - zeta| = {0:.3e})")]
    CoincidentPoints(f64),

    #[error("invalid radii: need 0 < r_minus < r_plus, got ({r_minus}, {r_plus})")]
    InvalidRadii { r_minus: f64, r_plus: f64 },

    #[error("invalid exponent q = {0}; need q in (1, infinity)")]
    InvalidExponent(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("potential bound {bound} not below the admissible epsilon0 {admissible}")]
    PotentialTooLarge { bound: f64, admissible: f64 },

    #[error("quadrature did not converge: doubling resolution moved the result by {delta:.3e}")]
    QuadratureNotConverged { delta: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
