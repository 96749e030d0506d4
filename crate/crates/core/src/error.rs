use thiserror::Error;

/// Failures of truncated-series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("factor (1 - q^0) vanishes")]
    ZeroFactor,

    #[error("exponent {0} is negative, result would leave the power-series ring")]
    NegativeExponent(i64),

    #[error("product step must be positive, got {0}")]
    InvalidStep(i64),

    #[error("term n = {n} has denominator 1 - q^0")]
    ZeroDenominator { n: i64 },

    #[error("term n = {n} has valuation {valuation} after rewriting")]
    NegativeValuation { n: i64, valuation: i64 },
}

/// Misuse of a partition statistic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatisticError {
    #[error("{0} is undefined for the empty partition")]
    EmptyPartition(&'static str),
}
