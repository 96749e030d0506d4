//! Closed-form generating functions: the M₂-rank and residual-crank series,
//! and the product and Lambert formulas their 3-dissections are compared to.
//!
//! Everything returns a [`TruncatedSeries`] known through `q^order`.

use num_bigint::BigInt;

use crate::ring::{Ring, ZRing};
use crate::series::{lambert_sum, quadratic_window, theta_sum, LambertTerm, ProductBuilder, TruncatedSeries};

type IntSeries = TruncatedSeries<BigInt>;

fn build(b: ProductBuilder<BigInt>) -> IntSeries {
    b.build().expect("products with positive exponents are well defined")
}

/// `(-q;q)_∞ / (q;q)_∞`, the overpartition generating function.
pub fn overpartition_gf<R: Ring>(order: usize) -> TruncatedSeries<R> {
    ProductBuilder::new(order).times_neg_q(1, 1, 1).over_q(1, 1, 1).build().expect("valid product")
}

/// M₂-rank generating function in its product form:
/// `(-q;q)_∞/(q;q)_∞ · (1 + 2Σ_{n≥1} (1-z)(1-z⁻¹)(-1)^n q^{n²+2n} / ((1-zq^{2n})(1-z⁻¹q^{2n})))`.
pub fn rank_gf<R: ZRing>(order: usize) -> TruncatedSeries<R> {
    let mut inner = TruncatedSeries::one(order);
    let mut vanishing = R::one();
    vanishing -= &R::z();
    let mut other = R::one();
    other -= &R::z_inv();
    let vanishing = vanishing.mul_ref(&other).mul_ref(&R::from_int(2));
    let mut n = 1usize;
    while n * n + 2 * n <= order {
        let c = if n % 2 == 0 { vanishing.clone() } else { vanishing.neg_ref() };
        let mut term = TruncatedSeries::monomial(c, n * n + 2 * n, order);
        term.div_binomial(&R::z(), 2 * n).expect("positive exponent");
        term.div_binomial(&R::z_inv(), 2 * n).expect("positive exponent");
        inner = &inner + &term;
        n += 1;
    }
    for k in 1..=order {
        inner.mul_binomial(&R::from_int(-1), k);
        inner.div_binomial(&R::one(), k).expect("positive exponent");
    }
    inner
}

/// M₂-rank generating function as the basic hypergeometric sum
/// `Σ_{n≥0} (-1;q)_{2n} q^n / (zq², z⁻¹q²; q²)_n`.
pub fn rank_gf_sum_form<R: ZRing>(order: usize) -> TruncatedSeries<R> {
    let neg_one = R::from_int(-1);
    let mut term = TruncatedSeries::one(order);
    let mut out = term.clone();
    for n in 1..=order {
        term = term.shift(1);
        term.mul_binomial(&neg_one, 2 * n - 2);
        term.mul_binomial(&neg_one, 2 * n - 1);
        term.div_binomial(&R::z(), 2 * n).expect("positive exponent");
        term.div_binomial(&R::z_inv(), 2 * n).expect("positive exponent");
        out = &out + &term;
    }
    out
}

/// Residual-crank generating function
/// `(-q;q)_∞ (q²;q²)_∞ / ((q;q²)_∞ (zq²;q²)_∞ (z⁻¹q²;q²)_∞)`.
pub fn crank_gf<R: ZRing>(order: usize) -> TruncatedSeries<R> {
    ProductBuilder::new(order)
        .times_neg_q(1, 1, 1)
        .times_q(2, 2, 1)
        .over_q(1, 2, 1)
        .over(R::z(), 2, 2, 1)
        .over(R::z_inv(), 2, 2, 1)
        .build()
        .expect("valid product")
}

/// `Σ_{n∈Z} (-1)^n q^{3n²+6n} / (1 - q^{6n+2})`.
pub fn lambert_l(order: usize) -> IntSeries {
    lambert_sum(
        quadratic_window(3, 6, 0, order as i64),
        |n| LambertTerm {
            coeff: BigInt::from(if n % 2 == 0 { 1 } else { -1 }),
            num_exp: 3 * n * n + 6 * n,
            den_exp: 6 * n + 2,
        },
        order,
    )
    .expect("every rewritten term is a power series")
}

/// `c·q·(-q³;q³)_∞/(q³;q³)_∞ · L(q)`.
fn lambert_piece(c: i64, order: usize) -> IntSeries {
    if order == 0 {
        return IntSeries::zero(0);
    }
    let lower = order - 1;
    let prefactor = build(ProductBuilder::new(lower).scaled(BigInt::from(c)).times_neg_q(3, 3, 1).over_q(3, 3, 1));
    (&prefactor * &lambert_l(lower)).raise(1)
}

/// `(q⁶;q⁶)⁴_∞ / ((q²;q²)_∞ (q³;q³)²_∞)`
fn eta_quotient_6_2_3(order: usize) -> IntSeries {
    build(ProductBuilder::new(order).times_q(6, 6, 4).over_q(2, 2, 1).over_q(3, 3, 2))
}

/// The nonzero component of the 3-dissection of the spt-crank series at ζ₃.
pub fn a2(order: usize) -> IntSeries {
    &eta_quotient_6_2_3(order) + &lambert_piece(2, order)
}

/// Components `j = 0, 1, 2` of the 3-dissection of the rank series at ζ₃.
pub fn rank_component(j: usize, order: usize) -> IntSeries {
    match j {
        0 => build(ProductBuilder::new(order).times_neg_q(1, 1, 1).times_q(3, 3, 2).over_q(1, 1, 1).over_neg_q(3, 3, 2)),
        1 => build(ProductBuilder::new(order).scaled(BigInt::from(2)).times_q(3, 3, 1).times_q(6, 6, 1).over_q(1, 1, 1)),
        2 => &eta_quotient_6_2_3(order).scale(&BigInt::from(4)) + &lambert_piece(6, order),
        _ => panic!("3-dissection has components 0, 1, 2; got {j}"),
    }
}

/// Components of the 3-dissection of the crank series at ζ₃, in their
/// reduced product forms.
pub fn crank_component(j: usize, order: usize) -> IntSeries {
    match j {
        0 => rank_component(0, order),
        1 => build(ProductBuilder::new(order).scaled(BigInt::from(2)).times_q(3, 3, 1).times_q(6, 6, 1).over_q(1, 1, 1)),
        2 => eta_quotient_6_2_3(order),
        _ => panic!("3-dissection has components 0, 1, 2; got {j}"),
    }
}

/// The crank components as first obtained from the dissection of ψ², before
/// simplification to [`crank_component`].
pub fn crank_component_unreduced(j: usize, order: usize) -> IntSeries {
    let b = ProductBuilder::new(order);
    let b = match j {
        0 => b.times_neg_q(1, 3, 2).times_neg_q(2, 3, 2).times_q(3, 3, 2),
        1 => b.scaled(BigInt::from(2)).times_neg_q(1, 3, 1).times_neg_q(2, 3, 1).times_neg_q(3, 3, 2).times_q(3, 3, 2),
        2 => b.times_neg_q(3, 3, 4).times_q(3, 3, 2),
        _ => panic!("3-dissection has components 0, 1, 2; got {j}"),
    };
    build(b.over_q(2, 2, 1))
}

/// The crank series at ζ₃ after cancelling `(ζq²,ζ⁻¹q²;q²)_∞` against
/// `(q⁶;q⁶)_∞/(q²;q²)_∞`: `(q²;q²)²_∞ / ((q;q²)²_∞ (q⁶;q⁶)_∞)`.
pub fn crank_at_zeta3_reduced(order: usize) -> IntSeries {
    build(ProductBuilder::new(order).times_q(2, 2, 2).over_q(1, 2, 2).over_q(6, 6, 1))
}

/// `ψ(q) = (q²;q²)_∞ / (q;q²)_∞`.
pub fn psi(order: usize) -> IntSeries {
    build(ProductBuilder::new(order).times_q(2, 2, 1).over_q(1, 2, 1))
}

/// `Σ_{n≥0} q^{n(n+1)/2}`.
pub fn triangular_theta(order: usize) -> IntSeries {
    let top = *quadratic_window(1, 1, 0, 2 * order as i64).end();
    theta_sum(0..=top, |n| n * (n + 1) / 2, |_| BigInt::from(1), order).expect("non-negative exponents")
}

/// `Σ_{n∈Z} q^{n(n+1)/2}`, which counts every triangular number twice.
pub fn bilateral_triangular_theta(order: usize) -> IntSeries {
    theta_sum(quadratic_window(1, 1, 0, 2 * order as i64), |n| n * (n + 1) / 2, |_| BigInt::from(1), order)
        .expect("non-negative exponents")
}

/// `Σ_{n∈Z} q^{(3n+k)(3n+k+1)/2}`, the part of the bilateral triangular
/// theta series with index `≡ k (mod 3)`.
pub fn triangular_theta_class(k: i64, order: usize) -> IntSeries {
    let tri = |n: i64| (3 * n + k) * (3 * n + k + 1) / 2;
    theta_sum(quadratic_window(9, 6 * k + 3, k * k + k, 2 * order as i64), tri, |_| BigInt::from(1), order)
        .expect("non-negative exponents")
}

/// The two Jacobi-triple-product pieces `(-q⁶,-q³,q⁹;q⁹)_∞` and
/// `q·(-q⁹,-q⁹,q⁹;q⁹)_∞` whose sum is `ψ(q)`.
pub fn psi_dissection_pieces(order: usize) -> (IntSeries, IntSeries) {
    let first = build(ProductBuilder::new(order).times_neg_q(6, 9, 1).times_neg_q(3, 9, 1).times_q(9, 9, 1));
    let second = if order == 0 {
        IntSeries::zero(0)
    } else {
        build(ProductBuilder::new(order - 1).times_neg_q(9, 9, 2).times_q(9, 9, 1)).raise(1)
    };
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CyclotomicInteger;
    use crate::laurent::LaurentPolynomial;
    use crate::partitions::{m2_rank_distribution, residual_m2_crank_distribution};

    type L = LaurentPolynomial<BigInt>;
    type Z3 = CyclotomicInteger<BigInt, 3>;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_forms_agree_and_match_enumeration() {
        let product = rank_gf::<L>(12);
        let sum = rank_gf_sum_form::<L>(12);
        assert_eq!(product, sum);
        for n in 0..=12 {
            assert_eq!(product.coeffs()[n], m2_rank_distribution(n as u32), "n={n}");
        }
    }

    #[test]
    fn crank_matches_corrected_enumeration() {
        let crank = crank_gf::<L>(12);
        for n in 0..=12 {
            assert_eq!(crank.coeffs()[n], residual_m2_crank_distribution(n as u32), "n={n}");
        }
    }

    #[test]
    fn rank_and_crank_collapse_at_z_equal_one() {
        let pbar = overpartition_gf::<BigInt>(30);
        assert_eq!(rank_gf::<BigInt>(30), pbar);
        assert_eq!(crank_gf::<BigInt>(30), pbar);
    }

    #[test]
    fn a2_leading_terms() {
        assert_eq!(a2(1).coeffs(), ints(&[1, 2]).as_slice());
    }

    #[test]
    fn lambert_l_leading_terms() {
        // n=0: 1/(1-q^2); n=-1: q/(1-q^4); n=1: -q^9/(1-q^8); n=-2: 1/(1-q^{-10}) = -q^10/(1-q^10)
        let l = lambert_l(10);
        assert_eq!(l.coeffs(), ints(&[1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0]).as_slice());
    }

    #[test]
    fn crank_at_zeta3_reduces() {
        let direct = crank_gf::<Z3>(40);
        let reduced = crank_at_zeta3_reduced(40).map(|c| Z3::from_coords(vec![c.clone(), BigInt::from(0)]));
        assert_eq!(direct, reduced);
    }

    #[test]
    fn gauss_and_triple_product() {
        let order = 60;
        assert_eq!(psi(order), triangular_theta(order));
        assert_eq!(bilateral_triangular_theta(order), triangular_theta(order).scale(&BigInt::from(2)));
        let (first, second) = psi_dissection_pieces(order);
        assert_eq!(&first + &second, psi(order));
        // classes 0 and 2 are exchanged by n -> -n-1, class 1 is fixed by it
        assert_eq!(triangular_theta_class(0, order), first);
        assert_eq!(triangular_theta_class(2, order), first);
        assert_eq!(triangular_theta_class(1, order), second.scale(&BigInt::from(2)));
    }

    #[test]
    fn unreduced_crank_components_simplify() {
        for j in 0..3 {
            assert_eq!(crank_component_unreduced(j, 40), crank_component(j, 40), "j={j}");
        }
        assert_eq!(crank_component(0, 40), rank_component(0, 40));
        assert_eq!(crank_component(2, 3).coeffs()[0], BigInt::from(1));
    }
}
