use thiserror::Error;

use crate::ladder::{Series, TrigKind};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("ladder depth must be at least 2, got {0}")]
    LadderTooShort(u32),

    #[error("{op} needs a {expected} rung, got {found}")]
    KindMismatch {
        op: &'static str,
        expected: TrigKind,
        found: TrigKind,
    },

    #[error("expected a {expected} value, got {found}")]
    SeriesMismatch { expected: Series, found: Series },

    #[error("{series}(s) is only produced for {parity} s, got s = {s}")]
    Parity {
        series: Series,
        parity: &'static str,
        s: u32,
    },

    #[error("cannot differentiate a polynomial of x-degree 0")]
    DegreeZero,

    #[error("sample point q = {0} lies outside [0, 1/2]")]
    PointOutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("quadrature gives {quadrature}, closed form gives {closed_form}")]
    Disagreement { quadrature: f64, closed_form: f64 },

    #[error(transparent)]
    Quadrature(#[from] crate::quadrature::QuadratureError),
}
