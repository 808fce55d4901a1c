use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("truncation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("vanishing constant term: |c0| = {abs:.3e} <= {eps:.3e} (degenerate map, f'(0) = 0)")]
    VanishingConstantTerm { abs: f64, eps: f64 },

    #[error("grid too small: M = {m} < 4(N+1) = {required} for series degree N = {n}")]
    GridTooSmall { m: usize, n: usize, required: usize },

    #[error("grid size mismatch: {0} vs {1}")]
    GridMismatch(usize, usize),

    #[error("grid size {0} is not a power of two")]
    GridNotPowerOfTwo(usize),

    #[error("boundary data declared real has max |Im| = {0:.3e}")]
    NonRealInput(f64),

    #[error("cusp proximity: min |f'| = {min_fprime:.3e} below threshold {threshold:.3e}")]
    CuspProximity { min_fprime: f64, threshold: f64 },

    #[error("complex velocity is singular at the origin")]
    OriginSingularity,

    #[error("driver is not in the Herglotz class: min Re p = {0:.3e} on the grid")]
    NonHerglotzDriver(f64),

    #[error("evaluation point too close to the boundary: |zeta| = {0:.6} > {1}")]
    EvaluationTooCloseToBoundary(f64, f64),

    #[error("quadratic map reaches a cusp before t = {0}")]
    CuspReached(f64),

    #[error("central charge mismatch: {0} vs {1}")]
    ChargeMismatch(f64, f64),

    #[error("unsupported generator index k = {0} (closed forms exist for k >= -2)")]
    UnsupportedGenerator(i64),

    #[error("invalid map state: {0}")]
    InvalidMap(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("finite difference stencil at t = {t} with h = {h} falls outside the trajectory")]
    FdOutOfRange { t: f64, h: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
