//! Combinatorial models of `N_S̄B(m,n)`: signed vector partitions, partition
//! pairs, and the q-binomial rewriting of `S̄B` that underlies the pairs.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::LaurentPolynomial;
use crate::partitions::{for_each_partition, PartSpec};
use crate::ring::Ring;
use crate::series::{ProductBuilder, TruncatedSeries};

type Laurent = LaurentPolynomial<BigInt>;

/// `Σ ω(π⃗) z^{crank(π⃗)}` over vector partitions `(π¹,π²,π³,π⁴)` of `n`
/// with `π¹, π⁴` distinct, `s(π¹)` even, `s(π¹) ≤ s(π²), s(π³)` and
/// `s(π¹) < s(π⁴)`; `ω = (-1)^{#π¹-1}`, crank `#(π²_e) - #(π³_e)`.
///
/// Once `s = s(π¹)` is fixed the four components are constrained
/// independently, so each is enumerated on its own and the counts are
/// combined over all ways of splitting `n`.
pub fn vector_partition_oracle(n: u32) -> Laurent {
    let size = n as usize;
    let mut out = Laurent::zero();
    for s in (2..=n).step_by(2) {
        let mut signed_first = vec![0i64; size + 1];
        let mut crank_second = vec![Laurent::zero(); size + 1];
        let mut distinct_fourth = vec![0i64; size + 1];
        for m in 0..=n {
            for_each_partition(m, PartSpec::distinct().min_part(s), |p| {
                if p.smallest() == Some(s) {
                    signed_first[m as usize] += if p.len() % 2 == 1 { 1 } else { -1 };
                }
            });
            for_each_partition(m, PartSpec::unrestricted().min_part(s), |p| {
                crank_second[m as usize].add_term(p.count_even() as i64, &BigInt::one());
            });
            for_each_partition(m, PartSpec::distinct().min_part(s + 1), |_| distinct_fourth[m as usize] += 1);
        }
        let crank_third: Vec<Laurent> = crank_second.iter().map(Laurent::mirror).collect();
        for a in s as usize..=size {
            if signed_first[a] == 0 {
                continue;
            }
            for b in 0..=size - a {
                for c in 0..=size - a - b {
                    let d = size - a - b - c;
                    let weight = BigInt::from(signed_first[a] * distinct_fourth[d]);
                    if weight.is_zero() {
                        continue;
                    }
                    let term = &crank_second[b] * &crank_third[c];
                    out += &term.mul_ref(&Laurent::constant(weight));
                }
            }
        }
    }
    out
}

/// `Σ z^{c(π¹,π²)}` over pairs in `PP₂` of total size `n`: `π¹` nonempty with
/// even smallest part `s`, every part of `π²` at least `s`, and the even parts
/// of `π²` at most `2s`.
///
/// With `e = #(π²_e)`, `k` counts the even parts of `π¹` equal to `s` or
/// larger than `s + 2e`, and `c = k - e - 1`.
pub fn partition_pair_oracle(n: u32) -> Laurent {
    let mut out = Laurent::zero();
    let one = BigInt::one();
    for s in (2..=n).step_by(2) {
        for a in s..=n {
            // number of admissible π² of size n - a, by their even-part count
            let mut by_even = Vec::<BigInt>::new();
            for_each_partition(n - a, PartSpec::unrestricted().min_part(s), |p| {
                if p.parts().iter().all(|&x| x % 2 == 1 || x <= 2 * s) {
                    let e = p.count_even();
                    if by_even.len() <= e {
                        by_even.resize(e + 1, BigInt::zero());
                    }
                    by_even[e] += &one;
                }
            });
            for_each_partition(a, PartSpec::unrestricted().min_part(s), |first| {
                if first.smallest() != Some(s) {
                    return;
                }
                let copies = first.multiplicity(s) as i64;
                for (e, count) in by_even.iter().enumerate() {
                    if count.is_zero() {
                        continue;
                    }
                    let threshold = s as usize + 2 * e;
                    let larger = first.parts().iter().filter(|&&x| x % 2 == 0 && x as usize > threshold).count();
                    let k = copies + larger as i64;
                    out.add_term(k - e as i64 - 1, count);
                }
            });
        }
    }
    out
}

/// `S̄B(z,q)` in the form that splits off the pairs whose `π²` has no even
/// parts:
///
/// `Σ_n q^{2n} / ((zq^{2n};q²)_∞ (q^{2n+1};q²)²_∞)`
/// `+ Σ_{n,k≥1} q^{2n} z^{-k} q^{2nk} (q²;q²)_{n+k}
///   / ((1-zq^{2n}) (q^{2n+2};q²)_k (zq^{2n+2k+2};q²)_∞ (q^{2n+1};q²)²_∞ (q²;q²)_k (q²;q²)_n)`.
pub fn pair_crank_series(order: usize) -> TruncatedSeries<Laurent> {
    let z = Laurent::z();
    let mut out = TruncatedSeries::zero(order);
    for n in 1..=order / 2 {
        let e = 2 * n as i64;
        let lower = order - 2 * n;
        let first = ProductBuilder::new(lower)
            .over(z.clone(), e, 2, 1)
            .over_q(e + 1, 2, 2)
            .build()
            .expect("valid product");
        out = &out + &first.raise(2 * n);
        let mut k = 1usize;
        while 2 * n + 2 * n * k <= order {
            let shift = 2 * n + 2 * n * k;
            let lower = order - shift;
            let ki = k as i64;
            let term = ProductBuilder::new(lower)
                .scaled(Laurent::monomial(BigInt::one(), -ki))
                .times_finite(Laurent::one(), 2, 2, n + k, 1)
                .over_finite(z.clone(), e, 2, 1, 1)
                .over_finite(Laurent::one(), e + 2, 2, k, 1)
                .over(z.clone(), e + 2 * ki + 2, 2, 1)
                .over_q(e + 1, 2, 2)
                .over_finite(Laurent::one(), 2, 2, k, 1)
                .over_finite(Laurent::one(), 2, 2, n, 1)
                .build()
                .expect("valid product");
            out = &out + &term.raise(shift);
            k += 1;
        }
    }
    out
}
