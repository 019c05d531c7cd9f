use thiserror::Error;

/// Errors produced by flow construction and the verification suites.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("rotation number must lie strictly inside (0,1), got {0}")]
    AlphaOutOfRange(f64),

    #[error("precision exhausted: cannot certify partial quotient a_{index} from the given representation")]
    PrecisionExhausted { index: usize },

    #[error("continued fraction of a rational terminates at depth {available}, requested {requested}")]
    ExpansionTerminates { available: usize, requested: usize },

    #[error("denominator table overflows u64 at index {index}")]
    DenominatorOverflow { index: usize },

    #[error("depth insufficient: N={n} is not below the last tabulated denominator {q_last}")]
    DepthInsufficient { n: u64, q_last: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("roof positivity violated: inf f̄ = {min:.6} ≤ 0 (gamma={gamma}, a={a})")]
    RoofPositivity { min: f64, gamma: f64, a: f64 },

    #[error("evaluation at a roof singularity (theta = {theta})")]
    Singularity { theta: f64 },

    #[error("orbit hits a singularity at step {step} (theta = {theta}, distance {dist:.3e})")]
    OrbitSingularity { step: u64, theta: f64, dist: f64 },

    #[error("bisection found no sign change on interval [{lo}, {hi}]")]
    BisectionFailure { lo: f64, hi: f64 },

    #[error("G(c,n) needs level n ≥ 3 (q_n ≥ 2), got n = {n}")]
    LevelTooSmall { n: usize },

    #[error("cocycle geometry: {0}")]
    CocycleGeometry(String),

    #[error("interpolation system rank-deficient or infeasible at degree {degree} (residual {residual:.3e})")]
    RankDeficient { degree: usize, residual: f64 },

    #[error("S3 window empty: C*delta = {lo:.3e} >= (C*delta)^(-1/m) = {hi:.3e}")]
    WindowEmpty { lo: f64, hi: f64 },

    #[error("case-1 construction failed: no tested point achieved N(x,w,T) < T^(1-eps)")]
    ConstructionFailure,

    #[error("evolution horizon exceeded: |t| = {t} beyond configured horizon {horizon}")]
    HorizonExceeded { t: f64, horizon: f64 },

    #[error("degenerate variance: sample variance {var:.3e} below Monte Carlo floor")]
    DegenerateVariance { var: f64 },
}
