//! Theta-type sums `Σ c(n) q^{e(n)}` and Lambert sums `Σ c(n) q^{e(n)} / (1 - q^{d(n)})`.

use std::ops::RangeInclusive;

use crate::error::SeriesError;
use crate::ring::Ring;

use super::TruncatedSeries;

/// All integers `n` with `a·n² + b·n + c ≤ bound` (requires `a > 0`).
/// Returns an empty range when there are none.
pub fn quadratic_window(a: i64, b: i64, c: i64, bound: i64) -> RangeInclusive<i64> {
    assert!(a > 0, "window needs an upward parabola");
    let f = |n: i64| a * n * n + b * n + c;
    let vertex = (-b as f64 / (2.0 * a as f64)).round() as i64;
    let Some(start) = [vertex, vertex - 1, vertex + 1].into_iter().find(|&n| f(n) <= bound) else {
        return RangeInclusive::new(1, 0);
    };
    let (mut lo, mut hi) = (start, start);
    while f(lo - 1) <= bound {
        lo -= 1;
    }
    while f(hi + 1) <= bound {
        hi += 1;
    }
    lo..=hi
}

/// `Σ_{n ∈ range} coefficient(n)·q^{exponent(n)}` truncated at `order`.
///
/// Terms with exponent above `order` are skipped; a negative exponent is an error.
pub fn theta_sum<R: Ring>(
    range: RangeInclusive<i64>,
    exponent: impl Fn(i64) -> i64,
    coefficient: impl Fn(i64) -> R,
    order: usize,
) -> Result<TruncatedSeries<R>, SeriesError> {
    let mut out = TruncatedSeries::zero(order);
    for n in range {
        let e = exponent(n);
        if e < 0 {
            return Err(SeriesError::NegativeExponent(e));
        }
        if e as usize <= order {
            out.coeffs[e as usize] += &coefficient(n);
        }
    }
    Ok(out)
}

/// One summand `coeff·q^{num_exp} / (1 - q^{den_exp})` of a Lambert sum.
#[derive(Clone, Debug)]
pub struct LambertTerm<R> {
    pub coeff: R,
    pub num_exp: i64,
    pub den_exp: i64,
}

/// `Σ_{n ∈ range} term(n)` truncated at `order`.
///
/// A negative denominator exponent is first rewritten with
/// `1/(1 - q^{-m}) = -q^m/(1 - q^m)`; after that every term must be a power
/// series (non-negative valuation).
pub fn lambert_sum<R: Ring>(
    range: RangeInclusive<i64>,
    term: impl Fn(i64) -> LambertTerm<R>,
    order: usize,
) -> Result<TruncatedSeries<R>, SeriesError> {
    let mut out = TruncatedSeries::zero(order);
    for n in range {
        let LambertTerm { mut coeff, mut num_exp, mut den_exp } = term(n);
        if den_exp == 0 {
            return Err(SeriesError::ZeroDenominator { n });
        }
        if den_exp < 0 {
            coeff = -coeff;
            num_exp -= den_exp;
            den_exp = -den_exp;
        }
        if num_exp < 0 {
            return Err(SeriesError::NegativeValuation { n, valuation: num_exp });
        }
        let mut e = num_exp as usize;
        while e <= order {
            out.coeffs[e] += &coeff;
            e += den_exp as usize;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    /// The bilateral sum appearing in the dissection formulas:
    /// `Σ_n (-1)^n q^{3n²+6n} / (1 - q^{6n+2})`.
    fn a2_term(n: i64) -> LambertTerm<i64> {
        LambertTerm {
            coeff: if n % 2 == 0 { 1 } else { -1 },
            num_exp: 3 * n * n + 6 * n,
            den_exp: 6 * n + 2,
        }
    }

    #[test]
    fn window_matches_brute_force() {
        for (a, b, c, bound) in [(3, 6, 0, 40), (9, 3, 0, 10), (1, 1, 0, 0), (2, -7, 3, 50), (1, 0, 5, 4)] {
            let brute: Vec<i64> = (-100..=100).filter(|n| a * n * n + b * n + c <= bound).collect();
            let w: Vec<i64> = quadratic_window(a, b, c, bound).collect();
            assert_eq!(w, brute, "window for {a}n^2+{b}n+{c} <= {bound}");
        }
    }

    #[test]
    fn gauss_triangular_sum() {
        let s = theta_sum(0..=*quadratic_window(1, 1, 0, 20).end(), |n| n * (n + 1) / 2, |_| 1i64, 10).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn bilateral_theta_over_window() {
        // (9n^2+3n)/2 over all n: exponents 0, 3 (n=-1), 6 (n=1), ...
        let s = theta_sum(quadratic_window(9, 3, 0, 20), |n| (9 * n * n + 3 * n) / 2, |_| 1i64, 10).unwrap();
        assert_eq!(s.coeffs(), &[1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn theta_with_nothing_in_range_is_zero() {
        let s = theta_sum(-3..=3, |n| 20 + n * n, |_| 1i64, 10).unwrap();
        assert!(s.is_zero());
        assert!(theta_sum(0..=0, |_| -1, |_| 1i64, 3).is_err());
    }

    #[test]
    fn single_lambert_term() {
        let s = lambert_sum(0..=0, a2_term, 1).unwrap();
        assert_eq!(s.coeffs(), &[1, 0]);
    }

    #[test]
    fn negative_denominator_rewrite() {
        // n = -1: -q^{-3}/(1 - q^{-4}) = q/(1 - q^4)
        let s = lambert_sum(-1..=-1, a2_term, 9).unwrap();
        assert_eq!(s.coeffs(), &[0, 1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn lambert_errors() {
        let zero_den = |_n: i64| LambertTerm { coeff: 1i64, num_exp: 1, den_exp: 0 };
        assert_eq!(lambert_sum(4..=4, zero_den, 5).unwrap_err(), SeriesError::ZeroDenominator { n: 4 });
        let negative = |_n: i64| LambertTerm { coeff: 1i64, num_exp: -5, den_exp: -2 };
        assert_eq!(
            lambert_sum(0..=0, negative, 5).unwrap_err(),
            SeriesError::NegativeValuation { n: 0, valuation: -3 }
        );
    }

    #[test]
    fn vanishing_coefficients_give_zero_series() {
        // the rank-generating inner sum at z = 1 carries (1-z)(1-1/z) = 0
        let z = 1i64;
        let factor = (1 - z) * (1 - z);
        let s = lambert_sum(1..=5, |n| LambertTerm { coeff: factor.clone(), num_exp: n * n + 2 * n, den_exp: 2 * n }, 30)
            .unwrap();
        assert!(s.is_zero());
    }
}
