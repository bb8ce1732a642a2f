use thiserror::Error;

/// Everything that can go wrong while validating or constructing objects.
///
/// Variant names double as the "violated invariant" reported by the CLI, so
/// they are kept stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square or has entries out of range: {0}")]
    MalformedTable(String),
    #[error("no element acts as a two-sided identity")]
    NoIdentity,
    #[error("element {0} is the identity but index 0 is reserved for it")]
    IdentityNotZero(usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("map has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("map sends {index} to {value}, outside the codomain")]
    IndexOutOfRange { index: usize, value: usize },
    #[error("f({0}*{1}) != f({0})*f({1})")]
    NotHomomorphism(usize, usize),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal in its parent")]
    NotNormal,
    #[error("not an action: {0}")]
    NotAction(String),
    #[error("maps do not compose: {0}")]
    ShapeMismatch(String),
    #[error("alpha . beta is not the identity on the base")]
    SectionNotSplit,
    #[error("kernel mismatch: {0}")]
    KernelMismatch(String),
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("incompatible action: {0}")]
    IncompatibleAction(String),
    #[error("the split extension is not faithful")]
    NotFaithful,
    #[error("the kernel reflexive graph is not a groupoid")]
    KernelNotGroupoid,
    #[error("[ker s, ker t] is nontrivial")]
    NotGroupoid,
    #[error("not a crossed module: {0}")]
    NotCrossedModule(String),
    #[error("the image of the subgroup is not normal in the total group")]
    NotNormalInTotal,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Short invariant name, suitable for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedTable(_) => "MalformedTable",
            Error::NoIdentity => "NoIdentity",
            Error::IdentityNotZero(_) => "IdentityNotZero",
            Error::NoInverse(_) => "NoInverse",
            Error::NotAssociative(..) => "NotAssociative",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotHomomorphism(..) => "NotHomomorphism",
            Error::NotSubgroup(_) => "NotSubgroup",
            Error::NotNormal => "NotNormal",
            Error::NotAction(_) => "NotAction",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SectionNotSplit => "SectionNotSplit",
            Error::KernelMismatch(_) => "KernelMismatch",
            Error::RelationViolated(_) => "RelationViolated",
            Error::IncompatibleAction(_) => "IncompatibleAction",
            Error::NotFaithful => "NotFaithful",
            Error::KernelNotGroupoid => "KernelNotGroupoid",
            Error::NotGroupoid => "NotGroupoid",
            Error::NotCrossedModule(_) => "NotCrossedModule",
            Error::NotNormalInTotal => "NotNormalInTotal",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
