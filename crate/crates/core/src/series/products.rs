//! Infinite and finite q-Pochhammer products.

use crate::error::SeriesError;
use crate::ring::Ring;

use super::TruncatedSeries;

fn validate(c: &impl Ring, start: i64, step: i64) -> Result<(), SeriesError> {
    if step < 1 {
        return Err(SeriesError::InvalidStep(step));
    }
    if start < 0 {
        return Err(SeriesError::NegativeExponent(start));
    }
    if start == 0 && c.is_one() {
        return Err(SeriesError::ZeroFactor);
    }
    Ok(())
}

/// `(c·q^start; q^step)_count`, or the infinite product when `count` is `None`.
/// Factors whose exponent exceeds `order` are omitted.
fn pochhammer<R: Ring>(
    c: &R,
    start: i64,
    step: i64,
    count: Option<usize>,
    order: usize,
) -> Result<TruncatedSeries<R>, SeriesError> {
    validate(c, start, step)?;
    let mut out = TruncatedSeries::one(order);
    for e in exponents(start, step, count, order) {
        out.mul_binomial(c, e);
    }
    Ok(out)
}

fn exponents(start: i64, step: i64, count: Option<usize>, order: usize) -> impl Iterator<Item = usize> {
    (0..count.unwrap_or(usize::MAX))
        .map(move |i| start as usize + i * step as usize)
        .take_while(move |&e| e <= order)
}

/// `(c·q^start; q^step)_∞ = Π_{i ≥ 0} (1 - c·q^{start + i·step})` to order `order`.
pub fn pochhammer_inf<R: Ring>(
    c: &R,
    start: i64,
    step: i64,
    order: usize,
) -> Result<TruncatedSeries<R>, SeriesError> {
    pochhammer(c, start, step, None, order)
}

/// `(c·q^start; q^step)_count`.
pub fn pochhammer_finite<R: Ring>(
    c: &R,
    start: i64,
    step: i64,
    count: usize,
    order: usize,
) -> Result<TruncatedSeries<R>, SeriesError> {
    pochhammer(c, start, step, Some(count), order)
}

#[derive(Clone, Debug)]
struct Factor<R> {
    coeff: R,
    start: i64,
    step: i64,
    count: Option<usize>,
    power: u32,
}

/// Quotient of Pochhammer products, assembled by sparse binomial updates.
///
/// ```
/// use spt_kernel::series::ProductBuilder;
/// // (q^2;q^2)_∞ / (q;q^2)_∞ = 1 + q + q^3 + q^6 + ...
/// let psi = ProductBuilder::<i64>::new(6).times_q(2, 2, 1).over_q(1, 2, 1).build().unwrap();
/// assert_eq!(psi.coeffs(), &[1, 1, 0, 1, 0, 0, 1]);
/// ```
#[derive(Clone, Debug)]
pub struct ProductBuilder<R> {
    order: usize,
    scale: R,
    numerator: Vec<Factor<R>>,
    denominator: Vec<Factor<R>>,
}

impl<R: Ring> ProductBuilder<R> {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            scale: R::one(),
            numerator: Vec::new(),
            denominator: Vec::new(),
        }
    }

    pub fn scaled(mut self, c: R) -> Self {
        self.scale = self.scale.mul_ref(&c);
        self
    }

    /// Multiply by `(c·q^start; q^step)_∞^power`.
    pub fn times(mut self, c: R, start: i64, step: i64, power: u32) -> Self {
        self.numerator.push(Factor { coeff: c, start, step, count: None, power });
        self
    }

    /// Divide by `(c·q^start; q^step)_∞^power`.
    pub fn over(mut self, c: R, start: i64, step: i64, power: u32) -> Self {
        self.denominator.push(Factor { coeff: c, start, step, count: None, power });
        self
    }

    /// Multiply by the finite product `(c·q^start; q^step)_count^power`.
    pub fn times_finite(mut self, c: R, start: i64, step: i64, count: usize, power: u32) -> Self {
        self.numerator.push(Factor { coeff: c, start, step, count: Some(count), power });
        self
    }

    /// Divide by the finite product `(c·q^start; q^step)_count^power`.
    pub fn over_finite(mut self, c: R, start: i64, step: i64, count: usize, power: u32) -> Self {
        self.denominator.push(Factor { coeff: c, start, step, count: Some(count), power });
        self
    }

    /// `(q^start; q^step)_∞^power` in the numerator.
    pub fn times_q(self, start: i64, step: i64, power: u32) -> Self {
        self.times(R::one(), start, step, power)
    }

    /// `(-q^start; q^step)_∞^power` in the numerator.
    pub fn times_neg_q(self, start: i64, step: i64, power: u32) -> Self {
        self.times(R::from_int(-1), start, step, power)
    }

    pub fn over_q(self, start: i64, step: i64, power: u32) -> Self {
        self.over(R::one(), start, step, power)
    }

    pub fn over_neg_q(self, start: i64, step: i64, power: u32) -> Self {
        self.over(R::from_int(-1), start, step, power)
    }

    pub fn build(&self) -> Result<TruncatedSeries<R>, SeriesError> {
        let mut out = TruncatedSeries::constant(self.scale.clone(), self.order);
        for f in &self.numerator {
            validate(&f.coeff, f.start, f.step)?;
            for _ in 0..f.power {
                for e in exponents(f.start, f.step, f.count, self.order) {
                    out.mul_binomial(&f.coeff, e);
                }
            }
        }
        for f in &self.denominator {
            validate(&f.coeff, f.start, f.step)?;
            for _ in 0..f.power {
                for e in exponents(f.start, f.step, f.count, self.order) {
                    out.div_binomial(&f.coeff, e)?;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPolynomial;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    /// Euler's pentagonal series `Σ_k (-1)^k q^{k(3k-1)/2}`, written out
    /// independently of any product code.
    fn pentagonal(order: usize) -> Vec<i64> {
        let mut c = vec![0i64; order + 1];
        for k in -60i64..=60 {
            let e = k * (3 * k - 1) / 2;
            if (e as usize) <= order {
                c[e as usize] += if k % 2 == 0 { 1 } else { -1 };
            }
        }
        c
    }

    #[test]
    fn euler_product_matches_pentagonal_theorem() {
        let p = pochhammer_inf(&1i64, 1, 1, 200).unwrap();
        assert_eq!(p.coeffs(), pentagonal(200).as_slice());
        assert_eq!(&p.coeffs()[..8], &[1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn distinct_part_counts() {
        let p = pochhammer_inf(&-1i64, 1, 1, 5).unwrap();
        assert_eq!(p.coeffs(), &[1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn laurent_coefficient_product() {
        type L = LaurentPolynomial<i64>;
        let p = pochhammer_inf(&L::z(), 2, 2, 4).unwrap();
        assert_eq!(p.coeff(0), Some(&L::one()));
        assert_eq!(p.coeff(1), Some(&L::zero()));
        assert_eq!(p.coeff(2), Some(&-L::z()));
        // -z q^4 from the second factor, +z^2 q^6 would come later
        assert_eq!(p.coeff(4), Some(&-L::z()));
    }

    #[test]
    fn rejects_invalid_factors() {
        assert_eq!(pochhammer_inf(&1i64, 0, 1, 5).unwrap_err(), SeriesError::ZeroFactor);
        assert_eq!(pochhammer_inf(&1i64, -1, 1, 5).unwrap_err(), SeriesError::NegativeExponent(-1));
        assert_eq!(pochhammer_inf(&1i64, 1, 0, 5).unwrap_err(), SeriesError::InvalidStep(0));
    }

    #[test]
    fn constant_first_factor() {
        // (-1;q)_2 = (1+1)(1+q)
        let p = pochhammer_finite(&-1i64, 0, 1, 2, 3).unwrap();
        assert_eq!(p.coeffs(), &[2, 2, 0, 0]);
    }

    #[test]
    fn finite_products() {
        // (q;q^2)_2 = (1-q)(1-q^3)
        let p = pochhammer_finite(&BigInt::from(1), 1, 2, 2, 5).unwrap();
        let expected: Vec<BigInt> = [1, -1, 0, -1, 1, 0].into_iter().map(BigInt::from).collect();
        assert_eq!(p.coeffs(), expected.as_slice());
        assert_eq!(pochhammer_finite(&1i64, 1, 1, 0, 3).unwrap(), TruncatedSeries::one(3));
    }

    #[test]
    fn builder_quotient() {
        // (-q;q)_∞ (q;q^2)_∞ = 1
        let one = ProductBuilder::<i64>::new(30).times_neg_q(1, 1, 1).times_q(1, 2, 1).build().unwrap();
        assert_eq!(one, TruncatedSeries::one(30));
        let two = ProductBuilder::<i64>::new(3).scaled(2).build().unwrap();
        assert_eq!(two.coeffs(), &[2, 0, 0, 0]);
    }
}
