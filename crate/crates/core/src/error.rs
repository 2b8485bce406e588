use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown statistic `{0}`")]
    UnknownStat(String),
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("element {elem} is outside the allowed range 1..={max}")]
    ElementOutOfRange { elem: u32, max: u32 },
    #[error("{0} is not a rotation of the cyclic permutation")]
    NotInOrbit(String),
    #[error("permutations share the letter {0}")]
    NotDisjoint(u32),
    #[error("{0} is not a letter of the cyclic permutation")]
    NotALetter(u32),
    #[error("malformed cyclic word: {0}")]
    MalformedWord(String),
    #[error("no counterexample named `{0}` in the catalog")]
    CatalogMiss(String),
    #[error("{set:?} is not a non-Escher subset of [{n}]")]
    EscherSet { set: Vec<u32>, n: u32 },
    #[error("{set:?} is not a valid peak set for length {n}")]
    InvalidPeakSet { set: Vec<u32>, n: u32 },
    #[error("parameters out of range: {0}")]
    RangeViolation(String),
    #[error("truncation order {have} is below the required {need}")]
    TruncationMismatch { have: usize, need: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownStat(_) => "unknown_stat",
            Error::InvalidPerm(_) => "invalid_perm",
            Error::ElementOutOfRange { .. } => "element_out_of_range",
            Error::NotInOrbit(_) => "not_in_orbit",
            Error::NotDisjoint(_) => "not_disjoint",
            Error::NotALetter(_) => "not_a_letter",
            Error::MalformedWord(_) => "malformed_word",
            Error::CatalogMiss(_) => "catalog_miss",
            Error::EscherSet { .. } => "escher_set",
            Error::InvalidPeakSet { .. } => "invalid_peak_set",
            Error::RangeViolation(_) => "range_violation",
            Error::TruncationMismatch { .. } => "truncation_mismatch",
            Error::Parse(_) => "parse_error",
        }
    }
}
