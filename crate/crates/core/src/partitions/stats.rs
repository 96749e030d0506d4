use num_bigint::BigInt;
use num_traits::One;

use crate::error::StatisticError;
use crate::laurent::LaurentPolynomial;

use super::{enumerate_overpartitions, enumerate_partitions, Overpartition, Partition};

/// Which smallest-part count [`spt_family`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SptVariant {
    /// Ordinary partitions.
    Spt,
    /// Overpartitions whose smallest part value carries no overline.
    SptBar,
    /// As `SptBar`, smallest part odd.
    SptBar1,
    /// As `SptBar`, smallest part even.
    SptBar2,
}

/// Total number of smallest-part occurrences over the partitions (or
/// overpartitions) of `n` selected by `variant`.
///
/// ```
/// use spt_kernel::partitions::{spt_family, SptVariant};
/// assert_eq!(spt_family(4, SptVariant::SptBar2), 3.into());
/// ```
pub fn spt_family(n: u32, variant: SptVariant) -> BigInt {
    let total: u64 = match variant {
        SptVariant::Spt => enumerate_partitions(n)
            .filter_map(|p| p.smallest().map(|s| p.multiplicity(s) as u64))
            .sum(),
        _ => enumerate_overpartitions(n)
            .filter_map(|o| {
                let s = o.smallest_value()?;
                let parity_ok = match variant {
                    SptVariant::SptBar1 => s % 2 == 1,
                    SptVariant::SptBar2 => s % 2 == 0,
                    _ => true,
                };
                (parity_ok && !o.is_overlined(s)).then(|| o.multiplicity(s) as u64)
            })
            .sum(),
    };
    BigInt::from(total)
}

/// The four ingredients of the M₂-rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankComponents {
    pub largest: u32,
    pub parts: usize,
    pub plain_odd_parts: usize,
    /// 1 when the largest part is odd and not overlined.
    pub chi: u8,
}

impl RankComponents {
    pub fn of(o: &Overpartition) -> Result<Self, StatisticError> {
        let top = o.largest().ok_or(StatisticError::EmptyPartition("M2-rank"))?;
        Ok(Self {
            largest: top.value,
            parts: o.len(),
            plain_odd_parts: o.parts().iter().filter(|p| !p.overlined && p.value % 2 == 1).count(),
            chi: u8::from(top.value % 2 == 1 && !o.is_overlined(top.value)),
        })
    }

    pub fn rank(&self) -> i64 {
        i64::from(self.largest.div_ceil(2)) - self.parts as i64 + self.plain_odd_parts as i64 - i64::from(self.chi)
    }
}

/// `⌈l/2⌉ − #parts + #(non-overlined odd parts) − χ`.
pub fn m2_rank(o: &Overpartition) -> Result<i64, StatisticError> {
    RankComponents::of(o).map(|c| c.rank())
}

/// Andrews–Garvan crank: the largest part if there are no 1s, otherwise the
/// number of parts exceeding the number of 1s minus the number of 1s.
pub fn ag_crank(p: &Partition) -> Result<i64, StatisticError> {
    let largest = p.largest().ok_or(StatisticError::EmptyPartition("crank"))?;
    let ones = p.multiplicity(1);
    if ones == 0 {
        return Ok(i64::from(largest));
    }
    let above = p.parts().iter().filter(|&&x| x as usize > ones).count();
    Ok(above as i64 - ones as i64)
}

/// `Σ z^{rank}` over the overpartitions of `n`; the empty overpartition counts
/// as `z^0`.
pub fn m2_rank_distribution(n: u32) -> LaurentPolynomial<BigInt> {
    let mut out = LaurentPolynomial::from_terms(Vec::new());
    let one = BigInt::one();
    for o in enumerate_overpartitions(n) {
        let r = if o.is_empty() { 0 } else { m2_rank(&o).expect("nonempty") };
        out.add_term(r, &one);
    }
    out
}

/// Sum of residual-crank weights over the overpartitions of `n`.
///
/// The weight is `z^{crank(π_e/2)}`, where `π_e` are the even non-overlined
/// parts. Empty `π_e` weighs `1`; `π_e/2 = (1)` weighs `z + z⁻¹ − 1`, the
/// q¹ coefficient of the ordinary crank generating function.
pub fn residual_m2_crank_distribution(n: u32) -> LaurentPolynomial<BigInt> {
    let mut out = LaurentPolynomial::from_terms(Vec::new());
    let one = BigInt::one();
    let single = Partition::new(vec![1]);
    for o in enumerate_overpartitions(n) {
        let halved = o.halved_even_plain_parts();
        if halved.is_empty() {
            out.add_term(0, &one);
        } else if halved == single {
            out.add_term(1, &one);
            out.add_term(-1, &one);
            out.add_term(0, &-one.clone());
        } else {
            out.add_term(ag_crank(&halved).expect("nonempty"), &one);
        }
    }
    out
}
