use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-invertible series: constant term is {0}")]
    NonInvertible(BigInt),

    #[error("insufficient terms: order {order} cannot test {m}-convolutivity")]
    InsufficientTerms { order: usize, m: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid eta-product token `{token}`: {reason}")]
    EtaSpecParse { token: String, reason: String },

    #[error("invalid eta-product: {0}")]
    InvalidEtaSpec(String),

    #[error("not a unit series: constant term is {0}")]
    NotUnitSeries(BigInt),

    #[error("{map}: {reason}")]
    Domain { map: &'static str, reason: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown bijection `{0}`")]
    UnknownBijection(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(map: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            map,
            reason: reason.into(),
        }
    }
}
