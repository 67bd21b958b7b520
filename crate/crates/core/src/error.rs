use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "parts must be nonincreasing: part {index} is {value} but the previous part is {previous}"
    )]
    NotNonincreasing {
        index: usize,
        previous: i64,
        value: i64,
    },
    #[error("parts must be positive: part {index} is {value}")]
    NonpositivePart { index: usize, value: i64 },
    #[error("cell ({row}, {col}) is outside the diagram")]
    CellOutside { row: usize, col: usize },
    #[error("modulus t must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("runner {runner} is not justified")]
    NotJustified { runner: usize },
    #[error("{partition} is not a {t}-core")]
    NotACore { partition: String, t: usize },
    #[error("{partition} is not {t}-divisible (its {t}-core is nonempty)")]
    NotDivisible { partition: String, t: usize },
    #[error("expected {expected} components, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinates must sum to 0, got {0}")]
    NonzeroSum(i64),
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("n = {n} exceeds the exhaustive enumeration limit of {limit}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("n must be positive")]
    ZeroSize,
    #[error("sample count must be positive")]
    NoSamples,
    #[error("sampler table was built for n = {built}, requested n = {requested}")]
    SamplerSize { built: usize, requested: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
