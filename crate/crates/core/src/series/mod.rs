//! Truncated formal power series in `q` over an arbitrary [`Ring`].
//!
//! A series of order `N` knows exactly the coefficients of `q^0..q^N`;
//! anything above is unknown rather than zero, so binary operations insist on
//! equal orders and [`TruncatedSeries::coeff`] refuses to answer past `N`.

mod products;
mod sums;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::SeriesError;
use crate::ring::Ring;

pub use products::{pochhammer_finite, pochhammer_inf, ProductBuilder};
pub use sums::{lambert_sum, quadratic_window, theta_sum, LambertTerm};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c·q^exponent`; the zero series when `exponent > order`.
    pub fn monomial(c: R, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// Order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least q^0");
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`, or `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_product(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Multiplies by `q^k`, dropping the top `k` coefficients.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// Multiplies by `q^k`; the product is known to `k` more terms.
    pub fn raise(&self, k: usize) -> Self {
        let n = self.order() + k;
        Self::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// In place `self *= (1 - c·q^e)`.
    pub fn mul_binomial(&mut self, c: &R, e: usize) {
        if e == 0 {
            let mut f = R::one();
            f -= c;
            for a in &mut self.coeffs {
                *a = a.mul_ref(&f);
            }
            return;
        }
        for i in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - e].is_zero() {
                let t = lo[i - e].mul_ref(c);
                hi[0] -= &t;
            }
        }
    }

    /// In place `self /= (1 - c·q^e)`; requires `1 - c` to be a unit when `e = 0`.
    pub fn div_binomial(&mut self, c: &R, e: usize) -> Result<(), SeriesError> {
        if e == 0 {
            let mut f = R::one();
            f -= c;
            let inv = f
                .unit_inverse()
                .ok_or_else(|| SeriesError::NonUnitConstant(f.to_string()))?;
            for a in &mut self.coeffs {
                *a = a.mul_ref(&inv);
            }
            return Ok(());
        }
        for i in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - e].is_zero() {
                hi[0].add_product(&lo[i - e], c);
            }
        }
        Ok(())
    }

    /// Multiplicative inverse via the standard recurrence; needs a unit `c_0`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let u_inv = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| SeriesError::NonUnitConstant(self.coeffs[0].to_string()))?;
        let neg_u_inv = u_inv.neg_ref();
        let n = self.order();
        let mut b: Vec<R> = Vec::with_capacity(n + 1);
        b.push(u_inv);
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc.add_product(a, &b[m - k]);
                }
            }
            b.push(acc.mul_ref(&neg_u_inv));
        }
        Ok(Self { coeffs: b })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Explicitly lowers the truncation order. Panics if `order` exceeds the
    /// current one, since those coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order {} to {order}", self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Change of coefficient ring, coefficient by coefficient.
    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Splits into `t` components by exponent residue: component `j` holds
    /// the coefficients of `q^{tn+j}` and has order `⌊(N - j)/t⌋`.
    ///
    /// Panics if `t == 0` or `t > N + 1` (a component would be empty).
    pub fn dissect(&self, t: usize) -> Vec<Self> {
        assert!(t >= 1 && t <= self.coeffs.len(), "cannot {t}-dissect a series of order {}", self.order());
        (0..t)
            .map(|j| Self {
                coeffs: self.coeffs.iter().skip(j).step_by(t).cloned().collect(),
            })
            .collect()
    }

    /// The substitution `q → q^t`, truncated at `order`.
    ///
    /// Panics if `order ≥ t·(N + 1)`: those coefficients are unknown.
    pub fn inflate(&self, t: usize, order: usize) -> Self {
        assert!(t >= 1);
        assert!(
            order < t * self.coeffs.len(),
            "inflating order {} by {t} determines coefficients only below {}",
            self.order(),
            t * self.coeffs.len()
        );
        Self::from_fn(order, |i| if i % t == 0 { self.coeffs[i / t].clone() } else { R::zero() })
    }

    /// First exponent at which two series of equal order disagree.
    pub fn first_difference(&self, other: &Self) -> Result<Option<usize>, SeriesError> {
        self.check_order(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b))
    }

    /// Exact coefficient strings `c_0..c_N`, for JSON export.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

fn is_plain_integer(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    /// Sparse rendering such as `1 + 2*q - q^3 + (z + z^-1)*q^4 + O(q^5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (negative, body) = match s.strip_prefix('-') {
                Some(rest) if is_plain_integer(&s) => (true, rest.to_string()),
                _ => (false, s),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let body = if is_plain_integer(&body) { body } else { format!("({body})") };
            match (n, body.as_str()) {
                (0, _) => write!(f, "{body}")?,
                (1, "1") => write!(f, "q")?,
                (1, _) => write!(f, "{body}*q")?,
                (_, "1") => write!(f, "q^{n}")?,
                _ => write!(f, "{body}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.coeffs.len())
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

// Operator forms panic on an order mismatch; the `try_*` methods report it.

impl<'a, R: Ring> Add for &'a TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        self.try_add(rhs).expect("series addition")
    }
}

impl<'a, R: Ring> Sub for &'a TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        self.try_sub(rhs).expect("series subtraction")
    }
}

impl<'a, R: Ring> Mul for &'a TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        self.try_mul(rhs).expect("series multiplication")
    }
}

impl<R: Ring> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn neg(self) -> TruncatedSeries<R> {
        self.map(Ring::neg_ref)
    }
}

impl<R: Ring> Neg for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn neg(self) -> TruncatedSeries<R> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPolynomial;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type S = TruncatedSeries<i64>;

    fn s(c: &[i64]) -> S {
        S::from_coeffs(c.to_vec())
    }

    #[test]
    fn one_minus_q_times_geometric() {
        let a = s(&[1, -1, 0, 0, 0, 0, 0]);
        let g = S::from_fn(6, |_| 1);
        assert_eq!(&a * &g, S::one(6));
    }

    #[test]
    fn triangular_square_coefficient_two() {
        let tri = S::from_fn(10, |n| [0, 1, 3, 6, 10].contains(&n) as i64);
        let sq = &tri * &tri;
        assert_eq!(sq.coeff(2), Some(&1));
        assert_eq!(sq.coeff(4), Some(&2));
    }

    #[test]
    fn monomial_multiplication_shifts() {
        let a = s(&[1, 2, 3, 4, 5]);
        let q2 = S::monomial(1, 2, 4);
        assert_eq!(&q2 * &a, s(&[0, 0, 1, 2, 3]));
        assert_eq!(a.shift(2), s(&[0, 0, 1, 2, 3]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = s(&[1, 2]).try_mul(&s(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, SeriesError::OrderMismatch { left: 1, right: 2 });
        assert!(s(&[1]).try_add(&s(&[1, 1])).is_err());
        assert!(s(&[1]).try_sub(&s(&[1, 1])).is_err());
    }

    #[test]
    fn coefficients_past_order_are_unknown() {
        assert_eq!(s(&[1, 2]).coeff(2), None);
    }

    #[test]
    fn invert_geometric() {
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), S::from_fn(4, |_| 1));
    }

    #[test]
    fn invert_over_laurent_ring() {
        type L = LaurentPolynomial<i64>;
        let mut a = TruncatedSeries::<L>::one(6);
        a.mul_binomial(&L::z(), 2);
        let inv = a.invert().unwrap();
        let expected = TruncatedSeries::from_fn(6, |n| {
            if n % 2 == 0 {
                L::monomial(1, n as i64 / 2)
            } else {
                L::zero()
            }
        });
        assert_eq!(inv, expected);
    }

    #[test]
    fn invert_euler_product_gives_partition_counts() {
        // (q;q)_∞ to q^5 is 1 - q - q^2 + q^5
        let euler = s(&[1, -1, -1, 0, 0, 1]);
        assert_eq!(euler.invert().unwrap(), s(&[1, 1, 2, 3, 5, 7]));
    }

    #[test]
    fn invert_needs_a_unit() {
        assert!(matches!(s(&[2, 1]).invert(), Err(SeriesError::NonUnitConstant(_))));
        assert_eq!(s(&[-1, 1, 0]).invert().unwrap(), s(&[-1, -1, -1]));
    }

    #[test]
    fn binomial_division_inverts_multiplication() {
        let mut a = s(&[3, 1, 4, 1, 5, 9, 2, 6]);
        let orig = a.clone();
        a.mul_binomial(&-2, 3);
        a.div_binomial(&-2, 3).unwrap();
        assert_eq!(a, orig);
        assert!(a.div_binomial(&1, 0).is_err());
        a.div_binomial(&2, 0).unwrap(); // 1 - 2 = -1 is a unit
        assert_eq!(a, -orig);
    }

    #[test]
    fn dissection_examples() {
        let a = s(&[1, 1, 1, 1]);
        assert_eq!(a.dissect(3), vec![s(&[1, 1]), s(&[1]), s(&[1])]);
        assert_eq!(a.dissect(1), vec![a.clone()]);
    }

    #[test]
    fn inflation_examples() {
        assert_eq!(s(&[1, 1]).inflate(3, 5), s(&[1, 0, 0, 1, 0, 0]));
        assert_eq!(S::zero(3).inflate(2, 7), S::zero(7));
    }

    #[test]
    #[should_panic]
    fn inflation_cannot_invent_coefficients() {
        s(&[1, 1]).inflate(3, 6);
    }

    #[test]
    fn display_is_sparse() {
        assert_eq!(s(&[1, 2, 0, -1]).to_string(), "1 + 2*q - q^3 + O(q^4)");
        assert_eq!(S::zero(2).to_string(), "0 + O(q^3)");
        let l = TruncatedSeries::from_coeffs(vec![
            LaurentPolynomial::<i64>::zero(),
            LaurentPolynomial::from_terms([(1, 1), (-1, 1)]),
        ]);
        assert_eq!(l.to_string(), "(z + z^-1)*q + O(q^2)");
    }

    #[test]
    fn bigint_coefficient_strings() {
        let big = BigInt::from(10).pow(30);
        let a = TruncatedSeries::from_coeffs(vec![big.clone(), -big]);
        assert_eq!(
            a.coefficient_strings(),
            vec!["1000000000000000000000000000000", "-1000000000000000000000000000000"]
        );
    }

    fn series(max_order: usize) -> impl Strategy<Value = S> {
        prop::collection::vec(-20i64..20, 1..=max_order + 1).prop_map(S::from_coeffs)
    }

    proptest! {
        #[test]
        fn dissection_round_trip(a in series(40), t in prop::sample::select(vec![2usize, 3, 5])) {
            prop_assume!(a.order() + 1 >= t);
            let n = a.order();
            let mut rebuilt = S::zero(n);
            for (j, part) in a.dissect(t).iter().enumerate() {
                let inflated = part.inflate(t, n - j);
                rebuilt = &rebuilt + &inflated.raise(j);
            }
            prop_assert_eq!(rebuilt, a);
        }

        #[test]
        fn inverse_times_series_is_one(a in series(30), unit in prop::sample::select(vec![1i64, -1])) {
            let mut a = a.map(|&c| BigInt::from(c));
            a.coeffs[0] = BigInt::from(unit);
            let inv = a.invert().unwrap();
            prop_assert_eq!(&a * &inv, TruncatedSeries::one(a.order()));
        }
    }
}
