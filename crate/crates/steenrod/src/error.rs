use thiserror::Error;

/// Errors shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("rewriting fuel exhausted after {limit} expansions")]
    FuelExhausted { limit: u64 },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("factorization term ({term}) Sq{t} has coefficient degree {actual}, expected {expected}")]
    TermDegreeMismatch {
        term: String,
        t: u32,
        expected: u32,
        actual: u32,
    },

    #[error("right factor Sq{t} is out of range for target Sq{target}")]
    BadRightFactor { t: u32, target: u32 },

    #[error("factorization does not reduce to Sq{target}: residue {residue}")]
    UnverifiedFactorization { target: u32, residue: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("class {0} is not in the module")]
    UnknownClass(String),

    #[error("sphere dimension {0} is even; expected an odd dimension 2n+1")]
    EvenSphereDimension(u64),

    #[error("degree window {window} exceeds the primitive range bound {bound}")]
    WindowTooLarge { window: u64, bound: u64 },

    #[error("gamma is undefined for sphere dimension {0} (3 mod 4)")]
    GammaInapplicable(u64),

    #[error("the formal top word has no direct dual Steenrod action; map through gamma first")]
    FormalWordAction,

    #[error("word {0} does not belong to this fiber model")]
    ForeignWord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
