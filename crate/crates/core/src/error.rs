use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator and halfspace representations describe different wedges")]
    InconsistentRepresentations,

    #[error("empty family")]
    EmptyFamily,

    #[error("family is not multi-bounded above")]
    NotMultiBoundedAbove,

    #[error("family is not multi-bounded below")]
    NotMultiBoundedBelow,

    #[error("point is not in the sum of the domain wedges")]
    NotInSumWedge,

    #[error("value set has no multi-supremum in the codomain wedge")]
    NoMultiSupremum,

    #[error("domain or codomain is the zero space")]
    ZeroSpace,

    #[error("values are not the restriction of a linear map")]
    InconsistentValues,

    #[error("values do not cover the span of the domain wedge")]
    InsufficientValues,

    #[error("generator values are not additive; the Riesz decomposition hypothesis fails for this family")]
    RdpViolated,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::Parse(_) => "parse_error",
            Error::InconsistentRepresentations => "inconsistent_representations",
            Error::EmptyFamily => "empty_family",
            Error::NotMultiBoundedAbove => "not_multi_bounded_above",
            Error::NotMultiBoundedBelow => "not_multi_bounded_below",
            Error::NotInSumWedge => "not_in_sum_wedge",
            Error::NoMultiSupremum => "no_multi_supremum",
            Error::ZeroSpace => "zero_space",
            Error::InconsistentValues => "inconsistent_values",
            Error::InsufficientValues => "insufficient_values",
            Error::RdpViolated => "rdp_violated",
            Error::InvalidInstance(_) => "invalid_instance",
        }
    }

    /// Input that could not be decoded, as opposed to a mathematical outcome.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::DimensionMismatch { .. } | Error::InconsistentRepresentations | Error::EmptyFamily
        )
    }
}
