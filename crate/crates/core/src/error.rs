use thiserror::Error;

/// Errors raised by the group, knot and surgery builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("substitution cycle: replacement word for `{0}` contains it")]
    SubstitutionCycle(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("braid letter {letter} out of range for {strands} strands")]
    IndexOutOfRange { letter: i64, strands: usize },

    #[error("not a knot: braid closure has {components} components")]
    NotAKnot { components: usize },

    #[error("not a knot group: abelianization is {0}")]
    NotAKnotGroup(String),

    #[error("invalid monodromy: {0}")]
    InvalidMonodromy(String),

    #[error("invalid slope p={p}, q={q}: need q >= 1 and gcd(p, q) = 1")]
    InvalidSlope { p: i64, q: i64 },

    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("spectra computed over different target lists")]
    MismatchedTargets,

    #[error("invalid data: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Variant name, for machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::GeneratorOutOfRange { .. } => "GeneratorOutOfRange",
            Error::SubstitutionCycle(_) => "SubstitutionCycle",
            Error::DuplicateGenerator(_) => "DuplicateGenerator",
            Error::Syntax(_) => "Syntax",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotAKnot { .. } => "NotAKnot",
            Error::NotAKnotGroup(_) => "NotAKnotGroup",
            Error::InvalidMonodromy(_) => "InvalidMonodromy",
            Error::InvalidSlope { .. } => "InvalidSlope",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::MismatchedTargets => "MismatchedTargets",
            Error::Data(_) => "Data",
        }
    }
}
