//! The spt-crank series `S̄B(z,q)`, its specialisations, and the table of
//! coefficients `N_S̄B(m,n)`.

mod oracles;

pub use oracles::{pair_crank_series, partition_pair_oracle, vector_partition_oracle};

use num_bigint::BigInt;

use crate::cyclotomic::CyclotomicInteger;
use crate::laurent::LaurentPolynomial;
use crate::residue::ResidueVector;
use crate::ring::ZRing;
use crate::series::{ProductBuilder, TruncatedSeries};

/// `S̄B` over any ring holding `z`, built by sweeping the summand index
/// downwards: with `F_{N/2+1} = 1`,
/// `F_n = F_{n+1}·(1-q^{4n+2})(1-q^{4n+4}) / ((1-zq^{2n})(1-z⁻¹q^{2n})(1-q^{2n+1})²)`
/// is the `n`-th summand divided by `q^{2n}`.
pub fn sb_specialized<R: ZRing>(order: usize) -> TruncatedSeries<R> {
    let one = R::one();
    let (z, z_inv) = (R::z(), R::z_inv());
    let mut factor = TruncatedSeries::one(order);
    let mut out = TruncatedSeries::zero(order);
    for n in (1..=order / 2).rev() {
        factor.mul_binomial(&one, 4 * n + 2);
        factor.mul_binomial(&one, 4 * n + 4);
        factor.div_binomial(&z, 2 * n).expect("positive exponent");
        factor.div_binomial(&z_inv, 2 * n).expect("positive exponent");
        factor.div_binomial(&one, 2 * n + 1).expect("positive exponent");
        factor.div_binomial(&one, 2 * n + 1).expect("positive exponent");
        out = &out + &factor.shift(2 * n);
    }
    out
}

/// `S̄B` with every summand expanded from its own product, no reuse.
pub fn sb_specialized_naive<R: ZRing>(order: usize) -> TruncatedSeries<R> {
    let mut out = TruncatedSeries::zero(order);
    for n in 1..=order / 2 {
        let lower = order - 2 * n;
        let e = 2 * n as i64;
        let summand = ProductBuilder::new(lower)
            .times_q(2 * e + 2, 2, 1)
            .over(R::z(), e, 2, 1)
            .over(R::z_inv(), e, 2, 1)
            .over_q(e + 1, 2, 2)
            .build()
            .expect("valid product");
        out = &out + &summand.raise(2 * n);
    }
    out
}

/// `S̄B(ζ_P, q)` with coefficients in `Z[ζ_P]`.
pub fn sb_at_root<const P: usize>(order: usize) -> TruncatedSeries<CyclotomicInteger<BigInt, P>> {
    sb_specialized(order)
}

/// `S̄B` reduced modulo `z^M - 1`: coefficient `n` holds `N_S̄B(k,M,n)` for
/// `k = 0..M`.
pub fn sb_residues<const M: usize>(order: usize) -> TruncatedSeries<ResidueVector<BigInt, M>> {
    sb_specialized(order)
}

/// `Σ_{n≥1} q^{2n} (-q^{2n+1};q)_∞ / ((1-q^{2n})² (q^{2n+1};q)_∞)`, summing
/// overpartitions by their (even, non-overlined) smallest part.
pub fn sptbar2_series(order: usize) -> TruncatedSeries<BigInt> {
    let one = BigInt::from(1);
    let neg_one = BigInt::from(-1);
    let mut tail = TruncatedSeries::one(order);
    let mut out = TruncatedSeries::zero(order);
    for n in (1..=order / 2).rev() {
        for e in [2 * n + 1, 2 * n + 2] {
            tail.mul_binomial(&neg_one, e);
            tail.div_binomial(&one, e).expect("positive exponent");
        }
        let mut summand = tail.shift(2 * n);
        summand.div_binomial(&one, 2 * n).expect("positive exponent");
        summand.div_binomial(&one, 2 * n).expect("positive exponent");
        out = &out + &summand;
    }
    out
}

/// Rows `n = 0..=N` of `S̄B(z,q)` as Laurent polynomials in `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SptCrankTable {
    rows: Vec<LaurentPolynomial<BigInt>>,
}

/// Expands `S̄B(z,q)` through `q^order`.
///
/// ```
/// use spt_kernel::spt_crank::sb_series;
/// let table = sb_series(8);
/// assert_eq!(table.row(4).to_string(), "z + 1 + z^-1");
/// assert_eq!(table.sptbar2(8), 15.into());
/// ```
pub fn sb_series(order: usize) -> SptCrankTable {
    SptCrankTable::from_series(&sb_specialized(order))
}

impl SptCrankTable {
    pub fn from_series(series: &TruncatedSeries<LaurentPolynomial<BigInt>>) -> Self {
        Self {
            rows: series.coeffs().to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `q^n`; row 0 is always zero.
    pub fn row(&self, n: usize) -> &LaurentPolynomial<BigInt> {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[LaurentPolynomial<BigInt>] {
        &self.rows
    }

    /// `N_S̄B(m, n)`.
    pub fn count(&self, m: i64, n: usize) -> BigInt {
        self.rows[n].coeff(m)
    }

    /// `[N_S̄B(0,t,n), ..., N_S̄B(t-1,t,n)]`.
    pub fn residue_classes(&self, n: usize, t: usize) -> Vec<BigInt> {
        self.rows[n].residue_class_sums(t)
    }

    /// The row at `z = 1`.
    pub fn sptbar2(&self, n: usize) -> BigInt {
        self.rows[n].eval_at_one()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().all(LaurentPolynomial::is_nonnegative)
    }

    /// Rows that are not invariant under `z ↔ z⁻¹`.
    pub fn asymmetric_rows(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&n| !self.rows[n].is_symmetric()).collect()
    }

    /// `(n, m, N_S̄B(m,n))` for every nonzero coefficient, in increasing `n`, then `m`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &BigInt)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.terms().map(move |(m, c)| (n, m, c)))
    }

    pub fn to_series(&self) -> TruncatedSeries<LaurentPolynomial<BigInt>> {
        TruncatedSeries::from_coeffs(self.rows.clone())
    }
}

/// Arguments `n ≤ N` (starting at `first`, stepping by `M`) at which the
/// coefficient's residue classes mod `M` are not all equal.
pub fn unbalanced_rows<const M: usize>(
    residues: &TruncatedSeries<ResidueVector<BigInt, M>>,
    first: usize,
) -> Vec<usize> {
    (first..=residues.order())
        .step_by(M)
        .filter(|&n| !residues.coeffs()[n].is_balanced())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{spt_family, SptVariant};
    use crate::ring::Ring;
    use num_traits::{One, Zero};

    type L = LaurentPolynomial<BigInt>;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn low_rows() {
        let t = sb_series(8);
        assert!(t.row(0).is_zero());
        assert!(t.row(1).is_zero());
        assert_eq!(*t.row(2), L::one());
        assert!(t.row(3).is_zero());
        assert_eq!(*t.row(4), L::from_terms([(-1, BigInt::from(1)), (0, 1.into()), (1, 1.into())]));
        assert_eq!(t.residue_classes(8, 5), ints(&[5, 3, 2, 2, 3]));
        assert_eq!(t.residue_classes(4, 3), ints(&[1, 1, 1]));
    }

    #[test]
    fn incremental_matches_naive() {
        assert_eq!(sb_specialized::<L>(30), sb_specialized_naive::<L>(30));
        assert_eq!(sb_specialized::<i64>(60), sb_specialized_naive::<i64>(60));
    }

    #[test]
    fn sptbar2_values() {
        let s = sptbar2_series(8);
        assert_eq!(s.coeffs()[4], 3.into());
        assert_eq!(s.coeffs()[5], 2.into());
        assert_eq!(s.coeffs()[8], 15.into());
    }

    #[test]
    fn sptbar2_matches_enumeration_and_z_equal_one() {
        let s = sptbar2_series(16);
        assert_eq!(sb_specialized::<BigInt>(16), s);
        let table = sb_series(16);
        for n in 1..=16 {
            assert_eq!(s.coeffs()[n], spt_family(n as u32, SptVariant::SptBar2), "n={n}");
            assert_eq!(table.sptbar2(n), s.coeffs()[n]);
        }
    }

    #[test]
    fn root_evaluations_agree_with_table() {
        let table = sb_series(40);
        let z3 = sb_at_root::<3>(40);
        let z5 = sb_at_root::<5>(40);
        let r3 = sb_residues::<3>(40);
        for n in 0..=40 {
            assert_eq!(z3.coeffs()[n], table.row(n).eval_at_root::<3>());
            assert_eq!(z5.coeffs()[n], table.row(n).eval_at_root::<5>());
            assert_eq!(r3.coeffs()[n].classes(), table.residue_classes(n, 3).as_slice());
        }
        assert!(z3.coeffs()[4].is_zero());
        assert_eq!(z3.coeffs()[2], CyclotomicInteger::from_int(1));
        assert_eq!(z5.coeffs()[8].coords(), ints(&[2, 0, -1, -1]).as_slice());
    }

    #[test]
    fn table_properties() {
        let table = sb_series(30);
        assert!(table.is_nonnegative());
        assert!(table.asymmetric_rows().is_empty());
        assert_eq!(table.order(), 30);
        let first: Vec<_> = table.entries().take(4).map(|(n, m, c)| (n, m, c.clone())).collect();
        assert_eq!(first, vec![(2, 0, 1.into()), (4, -1, 1.into()), (4, 0, 1.into()), (4, 1, 1.into())]);
    }

    #[test]
    fn refinement_scan() {
        let r3 = sb_residues::<3>(60);
        assert!(unbalanced_rows(&r3, 0).is_empty());
        assert!(unbalanced_rows(&r3, 1).is_empty());
        let r5 = sb_residues::<5>(20);
        assert_eq!(unbalanced_rows(&r5, 3).first(), Some(&8));
    }
}
