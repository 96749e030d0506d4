//! Exact q-series kernel for the overpartition spt-function `s̄pt₂(n)` and
//! its crank refinement `N_S̄B(m,n)`.
//!
//! The series engine is generic over the coefficient [`ring::Ring`]; integer
//! coefficients are generic over [`ring::Scalar`] (`i64`, `i128`, or
//! [`num_bigint::BigInt`]). The aliases below fix the exact choice used by
//! the verifier.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod gf;
pub mod laurent;
pub mod partitions;
pub mod residue;
pub mod ring;
pub mod series;
pub mod spt_crank;
pub mod verify;

pub use error::{SeriesError, StatisticError};
pub use series::TruncatedSeries;
pub use spt_crank::{sb_series, SptCrankTable};
pub use verify::{Status, VerificationReport};

pub type Integer = num_bigint::BigInt;
pub type Laurent = laurent::LaurentPolynomial<Integer>;
pub type Zeta3 = cyclotomic::CyclotomicInteger<Integer, 3>;
pub type Zeta5 = cyclotomic::CyclotomicInteger<Integer, 5>;

pub type IntSeries = TruncatedSeries<Integer>;
pub type LaurentSeries = TruncatedSeries<Laurent>;
pub type Zeta3Series = TruncatedSeries<Zeta3>;
pub type Zeta5Series = TruncatedSeries<Zeta5>;
