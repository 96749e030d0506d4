//! Sparse Laurent polynomials in one variable `z` with integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::cyclotomic::CyclotomicInteger;
use crate::residue::ResidueVector;
use crate::ring::{residue, Ring, Scalar, ZRing};

/// `Σ c_m z^m` over finitely many `m ∈ Z`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPolynomial<T> {
    pub fn monomial(coeff: T, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `z`
    pub fn z() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `z^{-1}`
    pub fn z_inv() -> Self {
        Self::monomial(T::one(), -1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn coeff(&self, exponent: i64) -> T {
        self.terms.get(&exponent).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exponent: i64, coeff: &T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, exponent: i64, coeff: &T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(-coeff.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() -= coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The substitution `z → z^{-1}`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Value at `z = 1`.
    pub fn eval_at_one(&self) -> T {
        let mut acc = T::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Entry `k` is the sum of the coefficients of `z^m` over `m ≡ k (mod t)`.
    ///
    /// Panics if `t == 0`.
    pub fn residue_class_sums(&self, t: usize) -> Vec<T> {
        assert!(t >= 1, "residue classes need a positive modulus");
        let mut sums = vec![T::zero(); t];
        for (e, c) in &self.terms {
            sums[residue(*e, t)] += c;
        }
        sums
    }

    /// Substitutes `z = ζ_P` and reduces modulo the `P`-th cyclotomic polynomial.
    pub fn eval_at_root<const P: usize>(&self) -> CyclotomicInteger<T, P> {
        CyclotomicInteger::from_power_sums(&self.residue_class_sums(P))
    }

    /// Image in `Z[z]/(z^M − 1)`.
    pub fn reduce_cyclic<const M: usize>(&self) -> ResidueVector<T, M> {
        ResidueVector::from_classes(self.residue_class_sums(M))
    }
}

impl<T: Scalar> Zero for LaurentPolynomial<T> {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> One for LaurentPolynomial<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<'a, T: Scalar> AddAssign<&'a LaurentPolynomial<T>> for LaurentPolynomial<T> {
    fn add_assign(&mut self, rhs: &'a LaurentPolynomial<T>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<'a, T: Scalar> SubAssign<&'a LaurentPolynomial<T>> for LaurentPolynomial<T> {
    fn sub_assign(&mut self, rhs: &'a LaurentPolynomial<T>) {
        for (e, c) in &rhs.terms {
            self.sub_term(*e, c);
        }
    }
}

impl<T: Scalar> Neg for LaurentPolynomial<T> {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<'a, T: Scalar> Mul<&'a LaurentPolynomial<T>> for &'a LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn mul(self, rhs: &'a LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<'a, T: Scalar> Add<&'a LaurentPolynomial<T>> for &'a LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn add(self, rhs: &'a LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, T: Scalar> Sub<&'a LaurentPolynomial<T>> for &'a LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn sub(self, rhs: &'a LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Add for LaurentPolynomial<T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: Scalar> Sub for LaurentPolynomial<T> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<T: Scalar> Mul for LaurentPolynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> ZRing for LaurentPolynomial<T> {
    fn z() -> Self {
        Self::monomial(T::one(), 1)
    }

    fn z_inv() -> Self {
        Self::monomial(T::one(), -1)
    }
}

impl<T: Scalar> Ring for LaurentPolynomial<T> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_int(n: i64) -> Self {
        Self::constant(T::from_int(n))
    }

    /// Units of `Z[z, z^{-1}]` are `±z^k`.
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        c.unit_inverse().map(|ci| Self::monomial(ci, -e))
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.terms.len() == 1 {
            let (ea, ca) = a.terms.iter().next().unwrap();
            if ca.is_one() {
                for (eb, cb) in &b.terms {
                    self.add_term(ea + eb, cb);
                }
                return;
            }
        }
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(ea + eb, &ca.mul_ref(cb));
            }
        }
    }
}

impl<T: Scalar> fmt::Display for LaurentPolynomial<T> {
    /// Highest power of `z` first, e.g. `z^3 + 2*z - 1 + z^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = magnitude.is_one();
            match *e {
                0 => write!(f, "{magnitude}")?,
                1 if unit => write!(f, "z")?,
                1 => write!(f, "{magnitude}*z")?,
                _ if unit => write!(f, "z^{e}")?,
                _ => write!(f, "{magnitude}*z^{e}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = LaurentPolynomial<i64>;

    fn poly(terms: &[(i64, i64)]) -> L {
        L::from_terms(terms.iter().copied())
    }

    fn q8_row() -> L {
        poly(&[(3, 1), (2, 1), (1, 3), (0, 5), (-1, 3), (-2, 1), (-3, 1)])
    }

    #[test]
    fn z_times_z_inverse_is_one() {
        assert_eq!(&L::z() * &L::z_inv(), L::one());
    }

    #[test]
    fn expand_and_collect() {
        let a = &L::z() - &L::one();
        let b = &L::z_inv() - &L::one();
        assert_eq!(&a * &b, poly(&[(1, -1), (0, 2), (-1, -1)]));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = poly(&[(2, 3), (-1, 1)]);
        p -= &poly(&[(2, 3)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p, L::z_inv());
        assert!(poly(&[(4, 0)]).is_zero());
    }

    #[test]
    fn residue_sums_of_q8_coefficient() {
        assert_eq!(q8_row().residue_class_sums(5), vec![5, 3, 2, 2, 3]);
        assert_eq!(q8_row().eval_at_one(), 15);
    }

    #[test]
    fn residue_sums_edge_cases() {
        assert_eq!(poly(&[(1, 1), (0, 1), (-1, 1)]).residue_class_sums(3), vec![1, 1, 1]);
        assert_eq!(L::zero().residue_class_sums(4), vec![0, 0, 0, 0]);
        assert_eq!(q8_row().residue_class_sums(1), vec![15]);
    }

    #[test]
    fn eval_at_cube_root() {
        assert!(poly(&[(1, 1), (0, 1), (-1, 1)]).eval_at_root::<3>().is_zero());
        assert_eq!(
            L::constant(7).eval_at_root::<3>(),
            CyclotomicInteger::<i64, 3>::from_int(7)
        );
    }

    #[test]
    fn q8_coefficient_is_nonzero_at_fifth_root() {
        let v = q8_row().eval_at_root::<5>();
        assert!(!v.is_zero());
        // classes [5,3,2,2,3] minus 3 times the class of ζ^4
        assert_eq!(v.coords(), &[2, 0, -1, -1]);
    }

    #[test]
    fn units() {
        let u = poly(&[(-3, -1)]);
        assert_eq!(u.unit_inverse(), Some(poly(&[(3, -1)])));
        assert_eq!(poly(&[(0, 1), (1, 1)]).unit_inverse(), None);
        assert_eq!(poly(&[(0, 2)]).unit_inverse(), None);
    }

    #[test]
    fn display_orders_by_descending_exponent() {
        assert_eq!(q8_row().to_string(), "z^3 + z^2 + 3*z + 5 + 3*z^-1 + z^-2 + z^-3");
        assert_eq!(poly(&[(1, -1), (0, 2), (-1, -1)]).to_string(), "-z + 2 - z^-1");
        assert_eq!(L::zero().to_string(), "0");
    }

    #[test]
    fn mirror_and_symmetry() {
        let p = poly(&[(2, 1), (-1, 4)]);
        assert_eq!(p.mirror(), poly(&[(-2, 1), (1, 4)]));
        assert!(!p.is_symmetric());
        assert!(q8_row().is_symmetric());
    }

    #[test]
    fn add_product_matches_mul() {
        let a = poly(&[(1, 2), (-2, -1)]);
        let b = q8_row();
        let mut acc = poly(&[(0, 1)]);
        acc.add_product(&a, &b);
        assert_eq!(acc, &poly(&[(0, 1)]) + &(&a * &b));
        let mut acc = L::zero();
        acc.add_product(&L::z(), &b);
        assert_eq!(acc, b.shift(1));
    }

    #[test]
    fn bigint_coefficients() {
        let p = LaurentPolynomial::<BigInt>::from_terms([(1, BigInt::from(2)), (-1, BigInt::from(2))]);
        assert_eq!(p.eval_at_one(), BigInt::from(4));
    }
}
