use thiserror::Error;

/// Which group axiom a multiplication table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupDefect {
    NonLatinSquare,
    NoIdentity,
    NonAssociative,
    MissingInverse,
}

impl std::fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GroupDefect::NonLatinSquare => "non-latin-square",
            GroupDefect::NoIdentity => "no-identity",
            GroupDefect::NonAssociative => "non-associative",
            GroupDefect::MissingInverse => "missing-inverse",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A multiplication table failed validation. `detail` names the first
    /// violation found, with the indices involved.
    #[error("not a group: {defect} {detail}")]
    NotAGroup { defect: GroupDefect, detail: String },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("unknown builtin group `{0}` (expected cyclic, dihedral, symmetric, quaternion or klein4)")]
    UnknownBuiltin(String),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("unknown element `{0}` (not a label and not a valid index)")]
    UnknownElement(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("not a representative system: {0}")]
    NotARepresentativeSystem(String),

    #[error("element {0} is not one of the chosen representatives")]
    NotARepresentative(usize),

    #[error("operation requires a transversal (the identity must be among the representatives)")]
    RequiresTransversal,

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("fiber maps belong to different fibrations")]
    FibrationMismatch,

    #[error("unknown law id `{0}`")]
    UnknownLawId(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("law suite runs exhaustively and refuses groups of order {order} (cap {cap})")]
    OrderExceedsLawCap { order: usize, cap: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
