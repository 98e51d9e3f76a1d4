use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("subsets live in different ambient spaces: (k={k1}, n={n1}) vs (k={k2}, n={n2})")]
    Mismatch {
        k1: usize,
        n1: usize,
        k2: usize,
        n2: usize,
    },
    #[error("index {value} out of range {lo}..={hi}")]
    OutOfRange { value: i64, lo: i64, hi: i64 },
    #[error("invalid short Pluecker data: {0}")]
    Plucker(String),
    #[error("seed collection is not pairwise weakly separated: {0} crosses {1}")]
    NotWeaklySeparated(String, String),
    #[error("sum of entries {sum} is not divisible by k={k}")]
    NotInLattice { sum: i64, k: usize },
    #[error("(k={k}, n={n}) is not of finite type")]
    NotFiniteType { k: usize, n: usize },
    #[error("invalid dimension window: {0}")]
    Window(String),
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error("rows too small: need {needed}, have {have}")]
    RowsTooSmall { needed: usize, have: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mutation budget of {0} seeds exhausted")]
    BudgetExhausted(usize),
    #[error("vertex {0} is frozen or out of range")]
    NotMutable(usize),
    #[error("exact arithmetic failure: {0}")]
    Arithmetic(String),
    #[error("seed invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
