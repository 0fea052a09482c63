use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and nonincreasing, got {0:?}")]
    InvalidParts(Vec<u32>),

    #[error("weight {weight} is not congruent to {residue} mod {modulus}")]
    WeightResidue {
        weight: u32,
        modulus: u32,
        residue: u32,
    },

    #[error("{0} is not of type A")]
    NotTypeA(String),

    #[error("{0} is not of type B")]
    NotTypeB(String),

    #[error("{partition} is not a {t}-core")]
    NotCore { partition: String, t: u32 },

    #[error("t must be at least 2, got {0}")]
    BadT(u32),

    #[error("quotient has {got} components, expected {t}")]
    QuotientLength { got: usize, t: u32 },

    #[error("n-vector {0:?} does not sum to zero")]
    NVectorSum(Vec<i64>),

    #[error("n-vector {0:?} has n.b not congruent to 4 mod 5")]
    AlphaResidue(Vec<i64>),

    #[error("alpha-vector {0:?} does not sum to one")]
    AlphaSum([i64; 5]),

    #[error("statistic {stat} needs weight = 4 mod 5, got {weight}")]
    StatisticDomain { stat: &'static str, weight: u32 },

    #[error("incompatible core filters: {0}")]
    IncompatibleFilter(String),

    #[error("q-shift must be positive, got {0}")]
    NonPositiveShift(i64),

    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("enumeration to order {order} exceeds the budget of {budget}")]
    BudgetExceeded { order: usize, budget: usize },

    #[error("unknown series {0:?}")]
    UnknownSeries(String),

    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("cannot parse partition {0:?}")]
    Parse(String),

    #[error("modulus must be positive")]
    ZeroModulus,
}
