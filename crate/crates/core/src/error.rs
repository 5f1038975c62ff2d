use alloc::string::String;

/// Errors raised anywhere in the engine.
///
/// Most variants signal a violated precondition. `Certification`,
/// `RelationViolated` and `Canonicalization` indicate an internal
/// inconsistency between two computation routes and should never fire on
/// valid input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown group specifier `{0}`")]
    UnknownGroup(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("permutation degree {0} exceeds the supported maximum")]
    DegreeOverflow(usize),
    #[error("group order {order} exceeds the bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("canonicalization failed: {0}")]
    Canonicalization(String),
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("a field extension of degree {0} is required")]
    NeedsExtension(u32),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("element {0} is not p-regular")]
    NotPRegular(usize),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
