//! Cyclotomic integers `Z[ζ_P]` for `P ∈ {3, 5}`.
//!
//! An element is stored as `a_0 + a_1 ζ + … + a_{P-2} ζ^{P-2}`; the relation
//! `ζ^{P-1} = -(1 + ζ + … + ζ^{P-2})` keeps the representation unique, so
//! equality is coordinate-wise and `x = 0` iff every coordinate vanishes.
//! The root order is a const parameter, so mixing `Z[ζ_3]` with `Z[ζ_5]`
//! does not type-check.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::ring::{residue, Ring, Scalar, ZRing};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInteger<T, const P: usize> {
    coords: Vec<T>,
}

impl<T: Scalar, const P: usize> CyclotomicInteger<T, P> {
    const SUPPORTED: () = assert!(P == 3 || P == 5, "only Z[ζ_3] and Z[ζ_5] are supported");

    /// Builds from reduced coordinates `a_0..a_{P-2}`.
    ///
    /// Panics if `coords.len() != P - 1`.
    pub fn from_coords(coords: Vec<T>) -> Self {
        let () = Self::SUPPORTED;
        assert_eq!(coords.len(), P - 1, "Z[ζ_{P}] has {} coordinates", P - 1);
        Self { coords }
    }

    /// Reduces `Σ_{k<P} c_k ζ^k`.
    ///
    /// Panics if `sums.len() != P`.
    pub fn from_power_sums(sums: &[T]) -> Self {
        assert_eq!(sums.len(), P);
        let top = &sums[P - 1];
        Self::from_coords(sums[..P - 1].iter().map(|c| c.clone() - top.clone()).collect())
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let mut sums = vec![T::zero(); P];
        sums[residue(k, P)] = T::one();
        Self::from_power_sums(&sums)
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Is this a rational integer (all non-constant coordinates zero)?
    pub fn as_integer(&self) -> Option<&T> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    fn cyclic_product(&self, rhs: &Self) -> Vec<T> {
        let mut sums = vec![T::zero(); P];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                sums[(i + j) % P].add_product(a, b);
            }
        }
        sums
    }
}

impl<T: Scalar, const P: usize> Zero for CyclotomicInteger<T, P> {
    fn zero() -> Self {
        Self::from_coords(vec![T::zero(); P - 1])
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl<T: Scalar, const P: usize> One for CyclotomicInteger<T, P> {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl<'a, T: Scalar, const P: usize> AddAssign<&'a Self> for CyclotomicInteger<T, P> {
    fn add_assign(&mut self, rhs: &'a Self) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }
}

impl<'a, T: Scalar, const P: usize> SubAssign<&'a Self> for CyclotomicInteger<T, P> {
    fn sub_assign(&mut self, rhs: &'a Self) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a -= b;
        }
    }
}

impl<T: Scalar, const P: usize> Neg for CyclotomicInteger<T, P> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::from_coords(self.coords.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar, const P: usize> Add for CyclotomicInteger<T, P> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: Scalar, const P: usize> Sub for CyclotomicInteger<T, P> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<T: Scalar, const P: usize> Mul for CyclotomicInteger<T, P> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, T: Scalar, const P: usize> Mul<&'a CyclotomicInteger<T, P>> for &'a CyclotomicInteger<T, P> {
    type Output = CyclotomicInteger<T, P>;

    fn mul(self, rhs: &'a CyclotomicInteger<T, P>) -> CyclotomicInteger<T, P> {
        self.mul_ref(rhs)
    }
}

impl<T: Scalar, const P: usize> ZRing for CyclotomicInteger<T, P> {
    fn z() -> Self {
        Self::zeta_pow(1)
    }

    fn z_inv() -> Self {
        Self::zeta_pow(-1)
    }
}

impl<T: Scalar, const P: usize> Ring for CyclotomicInteger<T, P> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        Self::from_power_sums(&self.cyclic_product(rhs))
    }

    fn from_int(n: i64) -> Self {
        let mut coords = vec![T::zero(); P - 1];
        coords[0] = T::from_int(n);
        Self::from_coords(coords)
    }

    /// Recognises the roots of unity `±ζ^k`. Other units of `Z[ζ_5]` (powers
    /// of the golden ratio) are not detected.
    fn unit_inverse(&self) -> Option<Self> {
        (0..P as i64).find_map(|k| {
            let root = Self::zeta_pow(k);
            if *self == root {
                Some(Self::zeta_pow(-k))
            } else if *self == -root {
                Some(-Self::zeta_pow(-k))
            } else {
                None
            }
        })
    }
}

impl<T: Scalar, const P: usize> fmt::Display for CyclotomicInteger<T, P> {
    /// Integer coordinate vector, e.g. `[2, 0, -1, -1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar, const P: usize> fmt::Debug for CyclotomicInteger<T, P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[ζ{P}]{self}")
    }
}
