//! The quotient ring `Z[z]/(z^M − 1)`.
//!
//! Specialising a Laurent polynomial here collapses it to its residue-class
//! sums: component `k` of the image of `Σ c_m z^m` is `Σ_{m ≡ k (mod M)} c_m`.
//! Building a two-variable series directly over this ring therefore yields the
//! counts `N(k, M, n)` without ever materialising the full `z`-support.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::ring::{residue, Ring, Scalar, ZRing};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueVector<T, const M: usize> {
    classes: Vec<T>,
}

impl<T: Scalar, const M: usize> ResidueVector<T, M> {
    const NONEMPTY: () = assert!(M >= 1);

    /// Panics if `classes.len() != M`.
    pub fn from_classes(classes: Vec<T>) -> Self {
        let () = Self::NONEMPTY;
        assert_eq!(classes.len(), M);
        Self { classes }
    }

    /// Image of `z^k`.
    pub fn z_pow(k: i64) -> Self {
        let mut classes = vec![T::zero(); M];
        classes[residue(k, M)] = T::one();
        Self::from_classes(classes)
    }

    pub fn classes(&self) -> &[T] {
        &self.classes
    }

    /// All residue classes hold the same count.
    pub fn is_balanced(&self) -> bool {
        self.classes.windows(2).all(|w| w[0] == w[1])
    }

    pub fn total(&self) -> T {
        let mut acc = T::zero();
        for c in &self.classes {
            acc += c;
        }
        acc
    }
}

impl<T: Scalar, const M: usize> Zero for ResidueVector<T, M> {
    fn zero() -> Self {
        Self::from_classes(vec![T::zero(); M])
    }

    fn is_zero(&self) -> bool {
        self.classes.iter().all(Zero::is_zero)
    }
}

impl<T: Scalar, const M: usize> One for ResidueVector<T, M> {
    fn one() -> Self {
        Self::z_pow(0)
    }
}

impl<'a, T: Scalar, const M: usize> AddAssign<&'a Self> for ResidueVector<T, M> {
    fn add_assign(&mut self, rhs: &'a Self) {
        for (a, b) in self.classes.iter_mut().zip(&rhs.classes) {
            *a += b;
        }
    }
}

impl<'a, T: Scalar, const M: usize> SubAssign<&'a Self> for ResidueVector<T, M> {
    fn sub_assign(&mut self, rhs: &'a Self) {
        for (a, b) in self.classes.iter_mut().zip(&rhs.classes) {
            *a -= b;
        }
    }
}

impl<T: Scalar, const M: usize> Neg for ResidueVector<T, M> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::from_classes(self.classes.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar, const M: usize> Add for ResidueVector<T, M> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: Scalar, const M: usize> Sub for ResidueVector<T, M> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<T: Scalar, const M: usize> Mul for ResidueVector<T, M> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<T: Scalar, const M: usize> ZRing for ResidueVector<T, M> {
    fn z() -> Self {
        Self::z_pow(1)
    }

    fn z_inv() -> Self {
        Self::z_pow(-1)
    }
}

impl<T: Scalar, const M: usize> Ring for ResidueVector<T, M> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = vec![T::zero(); M];
        for (i, a) in self.classes.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.classes.iter().enumerate() {
                out[(i + j) % M].add_product(a, b);
            }
        }
        Self::from_classes(out)
    }

    fn from_int(n: i64) -> Self {
        let mut classes = vec![T::zero(); M];
        classes[0] = T::from_int(n);
        Self::from_classes(classes)
    }

    /// Recognises `±z^k`.
    fn unit_inverse(&self) -> Option<Self> {
        let mut nonzero = self.classes.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (k, c) = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        let ci = c.unit_inverse()?;
        let mut inv = Self::z_pow(-(k as i64));
        for x in &mut inv.classes {
            *x = x.mul_ref(&ci);
        }
        Some(inv)
    }
}

impl<T: Scalar, const M: usize> fmt::Display for ResidueVector<T, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar, const M: usize> fmt::Debug for ResidueVector<T, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[z]/(z^{M}-1){self}")
    }
}
