use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::LaurentPolynomial;
use crate::ring::Ring;
use crate::series::{ProductBuilder, TruncatedSeries};

type IntSeries = TruncatedSeries<BigInt>;
type LaurentSeries = TruncatedSeries<LaurentPolynomial<BigInt>>;

/// A Bailey pair relative to `(a, q^base)` with `a = 1`: `β_n` is determined
/// by `β_n = Σ_{r=0}^n α_r / ((q^b;q^b)_{n-r} (q^b;q^b)_{n+r})`.
#[derive(Clone, Copy)]
pub struct BaileyPair {
    pub base: usize,
    pub alpha: fn(usize, usize) -> IntSeries,
    pub beta: fn(usize, usize) -> IntSeries,
}

impl BaileyPair {
    /// `α_0 = 1`, `α_n = 2(-1)^n q^{n²}`, `β_n = (q;q²)_n² / (q²;q²)_{2n}`,
    /// relative to `(1, q²)`.
    pub fn rank_crank() -> Self {
        Self {
            base: 2,
            alpha: rank_crank_alpha,
            beta: rank_crank_beta,
        }
    }

    /// The right-hand side of the defining relation for `β_n`.
    pub fn beta_from_alpha(&self, n: usize, order: usize) -> IntSeries {
        let b = self.base as i64;
        let mut out = IntSeries::zero(order);
        for r in 0..=n {
            let mut term = (self.alpha)(r, order);
            for i in 1..=(n + r) as i64 {
                term.div_binomial(&BigInt::one(), (b * i) as usize).expect("positive exponent");
            }
            for i in 1..=(n - r) as i64 {
                term.div_binomial(&BigInt::one(), (b * i) as usize).expect("positive exponent");
            }
            out = &out + &term;
        }
        out
    }
}

fn rank_crank_alpha(n: usize, order: usize) -> IntSeries {
    if n == 0 {
        return IntSeries::one(order);
    }
    let c = if n % 2 == 0 { 2 } else { -2 };
    IntSeries::monomial(BigInt::from(c), n * n, order)
}

fn rank_crank_beta(n: usize, order: usize) -> IntSeries {
    ProductBuilder::new(order)
        .times_finite(BigInt::one(), 1, 2, n, 2)
        .over_finite(BigInt::one(), 2, 2, 2 * n, 1)
        .build()
        .expect("valid product")
}

/// `Σ_n (z;q²)_n (z⁻¹;q²)_n q^{2n} β_n`, each summand obtained from the
/// previous one by its ratio
/// `(1-zq^{2n-2})(1-z⁻¹q^{2n-2}) q² (1-q^{2n-1})² / ((1-q^{4n-2})(1-q^{4n}))`.
pub fn bailey_limit_lhs(order: usize) -> LaurentSeries {
    let one = LaurentPolynomial::one();
    let (z, z_inv) = (LaurentPolynomial::z(), LaurentPolynomial::z_inv());
    let mut term = LaurentSeries::one(order);
    let mut out = term.clone();
    for n in 1..=order / 2 {
        term = term.shift(2);
        term.mul_binomial(&z, 2 * n - 2);
        term.mul_binomial(&z_inv, 2 * n - 2);
        term.mul_binomial(&one, 2 * n - 1);
        term.mul_binomial(&one, 2 * n - 1);
        term.div_binomial(&one, 4 * n - 2).expect("positive exponent");
        term.div_binomial(&one, 4 * n).expect("positive exponent");
        out = &out + &term;
    }
    out
}

/// `(zq²,z⁻¹q²;q²)_∞ / (q²;q²)²_∞ · (1 + 2Σ_{n≥1} (1-z)(1-z⁻¹)(-1)^n q^{n²+2n} / ((1-zq^{2n})(1-z⁻¹q^{2n})))`,
/// the limiting Bailey lemma with `ρ₁ = z`, `ρ₂ = z⁻¹` applied to the pair.
pub fn bailey_limit_rhs(order: usize) -> LaurentSeries {
    let (z, z_inv) = (LaurentPolynomial::<BigInt>::z(), LaurentPolynomial::<BigInt>::z_inv());
    let mut vanishing = LaurentPolynomial::one();
    vanishing -= &z;
    let mut other = LaurentPolynomial::one();
    other -= &z_inv;
    let vanishing = vanishing.mul_ref(&other).mul_ref(&LaurentPolynomial::from_int(2));
    let mut sum = LaurentSeries::one(order);
    let mut n = 1usize;
    while n * n + 2 * n <= order {
        let c = if n % 2 == 0 { vanishing.clone() } else { vanishing.neg_ref() };
        let mut term = LaurentSeries::monomial(c, n * n + 2 * n, order);
        term.div_binomial(&z, 2 * n).expect("positive exponent");
        term.div_binomial(&z_inv, 2 * n).expect("positive exponent");
        sum = &sum + &term;
        n += 1;
    }
    let prefactor = ProductBuilder::new(order)
        .times(z, 2, 2, 1)
        .times(z_inv, 2, 2, 1)
        .over_q(2, 2, 2)
        .build()
        .expect("valid product");
    &prefactor * &sum
}

/// `(q²;q²)_∞ / ((zq²,z⁻¹q²;q²)_∞ (q;q²)²_∞)`, which carries the limiting
/// identity to the M₂-rank generating function.
pub fn bailey_limit_multiplier(order: usize) -> LaurentSeries {
    ProductBuilder::new(order)
        .times_q(2, 2, 1)
        .over(LaurentPolynomial::z(), 2, 2, 1)
        .over(LaurentPolynomial::z_inv(), 2, 2, 1)
        .over_q(1, 2, 2)
        .build()
        .expect("valid product")
}
