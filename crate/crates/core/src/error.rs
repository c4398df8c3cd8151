use alloc::string::String;

/// Failures reported by the algebra, ideal and deformation routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("truncation mismatch: {left} vs {right}")]
    TruncMismatch { left: usize, right: usize },
    #[error("algebra spec mismatch")]
    SpecMismatch,
    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("subspace does not contain the top truncation degree; colength is not certified")]
    NotSaturated,
    #[error("precision budget {budget} is below the required {required}")]
    PrecisionExhausted { budget: usize, required: usize },
    #[error("inner and outer ideals are equal")]
    EqualIdeals,
    #[error("inner ideal is not contained in outer ideal")]
    NotNested,
    #[error("ideal is the unit ideal")]
    IdealIsUnitIdeal,
    #[error("operation requires kind {expected}, got {found}")]
    UnsupportedKind { expected: &'static str, found: &'static str },
    #[error("entry ({row}, {col}) violates the order pattern (must be divisible by x)")]
    PatternViolation { row: usize, col: usize },
    #[error("subspace is not a left ideal")]
    NotLeftIdeal,
    #[error("ideal is not two-sided")]
    NotTwoSided,
    #[error("dual containment I*A^dual in A^dual*I fails")]
    DualContainmentFails,
    #[error("entry ideals at {first:?} and {second:?} differ; not of circulant chain shape")]
    NotCirculant { first: (usize, usize), second: (usize, usize) },
    #[error("chain invariant violated: {0}")]
    ChainInvariantViolated(String),
    #[error("ideal is not of the form M_f(J)")]
    NotBlockConstant,
    #[error("algebra dimension {dim} exceeds the enumeration bound {bound}")]
    DimensionBound { dim: usize, bound: usize },
    #[error("requires f > 1")]
    RequiresFGreaterOne,
    #[error("ideal is not proper or has colength zero")]
    ImproperIdeal,
    #[error("point (0, 0) does not lie on the projective line")]
    ZeroPoint,
    #[error("the two quotients are not isomorphic one-dimensional simple modules")]
    NotCosimple,
    #[error("eigenvalues outside the base field; cannot split")]
    UnsupportedSplitting,
    #[error("quotient family is not isolated (joint eigenspace of dimension {0})")]
    NonIsolatedQuotient(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::TruncMismatch { .. } => "TruncMismatch",
            Error::SpecMismatch => "SpecMismatch",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotSaturated => "NotSaturated",
            Error::PrecisionExhausted { .. } => "PrecisionExhausted",
            Error::EqualIdeals => "EqualIdeals",
            Error::NotNested => "NotNested",
            Error::IdealIsUnitIdeal => "IdealIsUnitIdeal",
            Error::UnsupportedKind { .. } => "UnsupportedKind",
            Error::PatternViolation { .. } => "PatternViolation",
            Error::NotLeftIdeal => "NotLeftIdeal",
            Error::NotTwoSided => "NotTwoSided",
            Error::DualContainmentFails => "DualContainmentFails",
            Error::NotCirculant { .. } => "NotCirculant",
            Error::ChainInvariantViolated(_) => "ChainInvariantViolated",
            Error::NotBlockConstant => "NotBlockConstant",
            Error::DimensionBound { .. } => "DimensionBound",
            Error::RequiresFGreaterOne => "RequiresFGreaterOne",
            Error::ImproperIdeal => "ImproperIdeal",
            Error::ZeroPoint => "ZeroPoint",
            Error::NotCosimple => "NotCosimple",
            Error::UnsupportedSplitting => "UnsupportedSplitting",
            Error::NonIsolatedQuotient(_) => "NonIsolatedQuotient",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
