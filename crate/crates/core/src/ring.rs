//! Coefficient-ring abstraction shared by every series in the crate.
//!
//! [`Ring`] is the minimal commutative-ring surface the series engine needs.
//! [`Scalar`] narrows it to the integer types (`i64`, `i128`, [`BigInt`])
//! that Laurent polynomials and cyclotomic integers are built over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Image of an ordinary integer under the unique ring map from Z.
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse, when `self` is a unit the type can recognise.
    fn unit_inverse(&self) -> Option<Self>;

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += &a.mul_ref(b);
    }

    fn neg_ref(&self) -> Self {
        -self.clone()
    }
}

/// Integer scalar usable as the coefficient type of Laurent polynomials and
/// cyclotomic integers.
pub trait Scalar:
    Ring + Eq + Ord + Hash + Signed + FromPrimitive + ToPrimitive + for<'a> MulAssign<&'a Self>
{
}

macro_rules! impl_machine_int {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            #[inline]
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }

            fn from_int(n: i64) -> Self {
                n as $t
            }

            fn unit_inverse(&self) -> Option<Self> {
                match *self {
                    1 => Some(1),
                    -1 => Some(-1),
                    _ => None,
                }
            }

            #[inline]
            fn add_product(&mut self, a: &Self, b: &Self) {
                *self += a * b;
            }
        }

        impl Scalar for $t {}
    )*};
}

impl_machine_int!(i64, i128);

impl Ring for BigInt {
    #[inline]
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Scalar for BigInt {}

/// A coefficient ring holding the crank variable `z`, possibly specialised.
///
/// Plain integers take `z = 1`; Laurent polynomials keep `z` formal;
/// cyclotomic integers take `z = ζ`; residue vectors reduce `z^M = 1`.
pub trait ZRing: Ring {
    fn z() -> Self;
    fn z_inv() -> Self;
}

macro_rules! impl_trivial_z {
    ($($t:ty),*) => {$(
        impl ZRing for $t {
            fn z() -> Self {
                Self::one()
            }

            fn z_inv() -> Self {
                Self::one()
            }
        }
    )*};
}

impl_trivial_z!(i64, i128, BigInt);

/// Reduces `n` into `0..m`.
pub(crate) fn residue(n: i64, m: usize) -> usize {
    n.rem_euclid(m as i64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).unit_inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).unit_inverse(), None);
        assert_eq!(7i64.unit_inverse(), None);
        assert_eq!(1i128.unit_inverse(), Some(1));
    }

    #[test]
    fn add_product_accumulates() {
        let mut acc = BigInt::from(5);
        acc.add_product(&BigInt::from(3), &BigInt::from(-4));
        assert_eq!(acc, BigInt::from(-7));
    }

    #[test]
    fn residue_handles_negatives() {
        assert_eq!(residue(-1, 3), 2);
        assert_eq!(residue(-7, 5), 3);
        assert_eq!(residue(9, 3), 0);
    }
}
