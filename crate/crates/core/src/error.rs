use thiserror::Error;

/// Errors produced by state construction, channel builders and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A matrix failed one of the density-operator invariants. `invariant`
    /// names the check that failed, `deviation` is how far it was off.
    #[error("not a density operator: {invariant} violated by {deviation:.3e}")]
    InvalidDensity {
        invariant: &'static str,
        deviation: f64,
    },

    /// State amplitudes are not unit norm.
    #[error("state vector not normalized: |x0|^2 + |x1|^2 = {norm}")]
    NotNormalized { norm: f64 },

    /// A scalar argument lies outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The extremal-channel parameters do not satisfy the trace-preservation
    /// identities |a00|^2 + |b10|^2 = |a11|^2 + |b01|^2 = 1.
    #[error("extremal parameters not normalized: deviation {deviation:.3e}")]
    ExtremalNormalization { deviation: f64 },

    /// The Kraus operators span more than two dimensions, so no anti-linear
    /// θ reproduces det T(π).
    #[error(
        "Kraus span dimension {span_dim} exceeds 2 (smallest retained singular value {smallest_sv:.3e})"
    )]
    SpanTooLarge { span_dim: usize, smallest_sv: f64 },

    /// A channel output violated a density-operator invariant beyond
    /// tolerance (non-CPTP input or corrupted data).
    #[error("channel output invalid: {invariant} violated by {deviation:.3e}")]
    InvariantViolation {
        invariant: &'static str,
        deviation: f64,
    },

    /// An operation's structural precondition was not met.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An invalid solver configuration.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Channels must carry at least one Kraus operator with finite entries.
    #[error("invalid Kraus list: {0}")]
    InvalidKraus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
