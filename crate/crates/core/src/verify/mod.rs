//! Checks that compare independently built truncated series, one per
//! identity, plus the enumeration cross-checks.
//!
//! Every check is a pure function of its [`CheckConfig`]; [`run_checks`]
//! runs them concurrently and returns reports sorted by name.

mod bailey;
mod report;

pub use bailey::{bailey_limit_lhs, bailey_limit_multiplier, bailey_limit_rhs, BaileyPair};
pub use report::{Failure, Status, VerificationReport};

use std::thread;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::gf;
use crate::laurent::LaurentPolynomial;
use crate::partitions::{
    enumerate_overpartitions, enumerate_partitions, m2_rank_distribution, residual_m2_crank_distribution,
    spt_family, SptVariant,
};
use crate::ring::Ring;
use crate::series::{pochhammer_inf, quadratic_window, theta_sum, TruncatedSeries};
use crate::spt_crank::{
    pair_crank_series, partition_pair_oracle, sb_at_root, sb_residues, sb_series, sptbar2_series, unbalanced_rows,
    vector_partition_oracle,
};
use crate::{IntSeries, Zeta3, Zeta3Series};

use report::Checker;

/// Smallest order at which every check has all three dissection components.
pub const MIN_ORDER: usize = 9;

/// Number of `β_n` tested by the Bailey-pair check.
pub const BAILEY_PAIR_TERMS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub order: usize,
    pub oracle_bound: u32,
}

/// A named check.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn(&CheckConfig) -> VerificationReport,
}

/// The full suite, sorted by name.
pub fn all_checks() -> Vec<Check> {
    vec![
        Check { name: "bailey_limit", run: |c| verify_bailey_limit(c.order) },
        Check { name: "bailey_pair", run: |c| verify_bailey_pair(BAILEY_PAIR_TERMS, c.order) },
        Check { name: "congruences", run: |c| verify_congruences(c.order) },
        Check { name: "oracles", run: |c| verify_oracles(c.order, c.oracle_bound) },
        Check { name: "theorem1", run: |c| verify_theorem1(c.order) },
        Check { name: "theorem2", run: |c| verify_theorem2(c.order, c.oracle_bound) },
        Check { name: "theorem3", run: |c| verify_theorem3(c.order) },
        Check { name: "theorem4", run: |c| verify_theorem4(c.order) },
    ]
}

/// Runs `checks` on separate threads; the result order follows check names,
/// not completion order.
pub fn run_checks(checks: &[Check], config: &CheckConfig) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|c| scope.spawn(move || (c.run)(config))).collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    reports
}

fn embed3(s: &IntSeries) -> Zeta3Series {
    s.map(|c| Zeta3::from_coords(vec![c.clone(), BigInt::zero()]))
}

fn component_order(order: usize, j: usize) -> usize {
    (order - j) / 3
}

/// `S̄B(ζ₃,q) = q²A₂(q³)`: components 0 and 1 vanish, component 2 is the
/// product-plus-Lambert formula.
pub fn verify_theorem1(order: usize) -> VerificationReport {
    verify_theorem1_with(&sb_at_root::<3>(order))
}

/// [`verify_theorem1`] against a caller-supplied `S̄B(ζ₃,q)`.
pub fn verify_theorem1_with(sb: &Zeta3Series) -> VerificationReport {
    let order = sb.order();
    let mut c = Checker::new("theorem1", order);
    let parts = sb.dissect(3);
    for j in 0..2 {
        let zero = Zeta3Series::zero(parts[j].order());
        c.series(&format!("A{j} = 0"), &zero, &parts[j], |i| 3 * i + j);
    }
    c.series("A2 formula", &embed3(&gf::a2(component_order(order, 2))), &parts[2], |i| 3 * i + 2);
    c.finish()
}

/// `(-z+2-z⁻¹)·S̄B(z,q) = RankDef - CrankDef` row by row, with the rank and
/// crank rows also checked against enumeration for `n ≤ oracle_bound`.
pub fn verify_theorem2(order: usize, oracle_bound: u32) -> VerificationReport {
    let mut c = Checker::new("theorem2", order);
    let table = sb_series(order);
    let rank = gf::rank_gf_sum_form::<LaurentPolynomial<BigInt>>(order);
    let rank_product = gf::rank_gf::<LaurentPolynomial<BigInt>>(order);
    let crank = gf::crank_gf::<LaurentPolynomial<BigInt>>(order);
    c.series("rank sum form = rank product form", &rank, &rank_product, |i| i);
    let cleared = LaurentPolynomial::from_terms([(-1, BigInt::from(-1)), (0, 2.into()), (1, (-1).into())]);
    for n in 0..=order {
        let lhs = cleared.mul_ref(table.row(n));
        let mut rhs = rank.coeffs()[n].clone();
        rhs -= &crank.coeffs()[n];
        c.value("(-z+2-1/z) SB = rank - crank", n as i64, &rhs, &lhs);
    }
    let bound = oracle_bound.min(order as u32);
    for n in 0..=bound {
        let i = n as usize;
        c.value("rank row = enumeration", n as i64, &m2_rank_distribution(n), &rank.coeffs()[i]);
        c.value("crank row = enumeration", n as i64, &residual_m2_crank_distribution(n), &crank.coeffs()[i]);
    }
    c.note(format!("rank and crank rows enumerated for n <= {bound}"));
    c.finish()
}

/// 3-dissection of the M₂-rank series at `z = ζ₃`.
pub fn verify_theorem3(order: usize) -> VerificationReport {
    let mut c = Checker::new("theorem3", order);
    let parts = gf::rank_gf::<Zeta3>(order).dissect(3);
    for (j, part) in parts.iter().enumerate() {
        let expected = embed3(&gf::rank_component(j, component_order(order, j)));
        c.series(&format!("N2bar_{j}"), &expected, part, |i| 3 * i + j);
    }
    c.finish()
}

/// The residual crank at `z = ζ₃`: its reduced product, the Gauss and
/// triple-product steps for `ψ`, and the three dissection components.
pub fn verify_theorem4(order: usize) -> VerificationReport {
    let mut c = Checker::new("theorem4", order);
    let crank = gf::crank_gf::<Zeta3>(order);
    c.series("crank at zeta3 = (q2;q2)^2/((q;q2)^2 (q6;q6))", &embed3(&gf::crank_at_zeta3_reduced(order)), &crank, |i| i);

    let psi = gf::psi(order);
    c.series("Gauss: psi = sum q^(n(n+1)/2)", &gf::triangular_theta(order), &psi, |i| i);
    c.series("bilateral sum = 2 psi", &psi.scale(&BigInt::from(2)), &gf::bilateral_triangular_theta(order), |i| i);
    let (first, second) = gf::psi_dissection_pieces(order);
    c.series("psi = (-q6,-q3,q9;q9) + q(-q9,-q9,q9;q9)", &psi, &(&first + &second), |i| i);
    c.series("JTP class 0", &first, &gf::triangular_theta_class(0, order), |i| i);
    c.series("JTP class 1", &second.scale(&BigInt::from(2)), &gf::triangular_theta_class(1, order), |i| i);
    c.series("JTP class 2", &first, &gf::triangular_theta_class(2, order), |i| i);

    for (j, part) in crank.dissect(3).iter().enumerate() {
        let m = component_order(order, j);
        let stated = gf::crank_component(j, m);
        c.series(&format!("M2bar_{j}"), &embed3(&stated), part, |i| 3 * i + j);
        c.series(&format!("M2bar_{j} unreduced form"), &stated, &gf::crank_component_unreduced(j, m), |i| 3 * i + j);
    }
    let m = component_order(order, 0);
    c.series("M2bar_0 = N2bar_0", &gf::rank_component(0, m), &gf::crank_component(0, m), |i| 3 * i);
    c.finish()
}

/// The defining relation of the Bailey pair for `β_0..β_{n_max}`.
pub fn verify_bailey_pair(n_max: usize, order: usize) -> VerificationReport {
    let mut c = Checker::new("bailey_pair", order);
    let pair = BaileyPair::rank_crank();
    for n in 0..=n_max {
        c.series(&format!("beta_{n}"), &(pair.beta)(n, order), &pair.beta_from_alpha(n, order), |i| i);
    }
    c.note(format!("beta_0 .. beta_{n_max}"));
    c.finish()
}

/// The limiting Bailey lemma for the pair with `ρ₁ = z`, `ρ₂ = z⁻¹`, and its
/// continuation to the product form of the M₂-rank series.
pub fn verify_bailey_limit(order: usize) -> VerificationReport {
    let mut c = Checker::new("bailey_limit", order);
    let lhs = bailey_limit_lhs(order);
    c.series("limiting Bailey lemma", &bailey_limit_rhs(order), &lhs, |i| i);
    let carried = &bailey_limit_multiplier(order) * &lhs;
    c.series("chain ends at the rank product form", &gf::rank_gf::<LaurentPolynomial<BigInt>>(order), &carried, |i| i);
    c.finish()
}

/// `s̄pt₂(3n) ≡ s̄pt₂(3n+1) ≡ 0 (mod 3)`, `s̄pt₂(5n+3) ≡ 0 (mod 5)`, and the
/// equidistribution of `N_S̄B(k,3,n)` at `n ≡ 0, 1 (mod 3)`.
pub fn verify_congruences(order: usize) -> VerificationReport {
    let mut c = Checker::new("congruences", order);
    let spt = sptbar2_series(order);
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    for (n, value) in spt.coeffs().iter().enumerate() {
        if n % 3 != 2 {
            c.holds("sptbar2(n) = 0 mod 3", n as i64, (value % &three).is_zero(), "0 mod 3", value);
        }
        if n % 5 == 3 {
            c.holds("sptbar2(n) = 0 mod 5", n as i64, (value % &five).is_zero(), "0 mod 5", value);
        }
        c.holds("sptbar2(n) >= 0", n as i64, !value.is_negative(), ">= 0", value);
    }
    let classes3 = sb_residues::<3>(order);
    let at_one: Vec<BigInt> = classes3.coeffs().iter().map(|r| r.total()).collect();
    c.series("residue classes sum to sptbar2", &spt, &IntSeries::from_coeffs(at_one), |i| i);
    for first in [0, 1] {
        for n in unbalanced_rows(&classes3, first) {
            let classes = &classes3.coeffs()[n];
            c.holds("N(0,3,n) = N(1,3,n) = N(2,3,n)", n as i64, false, "equal classes", classes);
        }
    }
    let classes5 = sb_residues::<5>(order);
    let uneven = unbalanced_rows(&classes5, 3);
    c.note(format!(
        "mod-5 crank refinement fails at {} of {} arguments 5n+3 (first: {})",
        uneven.len(),
        (3..=order).step_by(5).count(),
        uneven.first().map_or("none".to_string(), |n| format!("n = {n}, classes {}", classes5.coeffs()[*n])),
    ));
    c.finish()
}

/// Enumeration against series: the combinatorial models of `N_S̄B(m,n)`,
/// spt counts, partition and overpartition counts, and Euler's pentagonal
/// theorem.
pub fn verify_oracles(order: usize, oracle_bound: u32) -> VerificationReport {
    let mut c = Checker::new("oracles", order);
    let bound = oracle_bound.min(order as u32);
    let b = bound as usize;
    let table = sb_series(b);
    let pairs = pair_crank_series(b);
    let spt = sptbar2_series(b);
    let rows: Vec<(LaurentPolynomial<BigInt>, LaurentPolynomial<BigInt>)> = thread::scope(|scope| {
        let handles: Vec<_> = (1..=bound)
            .map(|n| scope.spawn(move || (vector_partition_oracle(n), partition_pair_oracle(n))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("oracle panicked")).collect()
    });
    for (i, (vector, pair)) in rows.iter().enumerate() {
        let n = i + 1;
        let row = table.row(n);
        c.value("vector partitions = SB row", n as i64, row, vector);
        c.value("partition pairs = SB row", n as i64, row, pair);
        c.holds("partition pair counts >= 0", n as i64, pair.is_nonnegative(), "nonnegative", pair);
        c.value("pair crank series = SB row", n as i64, row, &pairs.coeffs()[n]);
        c.value("sptbar2 enumeration", n as i64, &spt.coeffs()[n], &spt_family(n as u32, SptVariant::SptBar2));
    }
    let asymmetric = table.asymmetric_rows();
    c.note(format!(
        "z <-> 1/z symmetry of SB rows n <= {b}: {}",
        if asymmetric.is_empty() { "observed".to_string() } else { format!("broken at {asymmetric:?}") }
    ));

    let four = [
        (SptVariant::Spt, 10),
        (SptVariant::SptBar, 13),
        (SptVariant::SptBar1, 10),
        (SptVariant::SptBar2, 3),
    ];
    for (variant, expected) in four {
        c.value(&format!("{variant:?}(4)"), 4, &BigInt::from(expected), &spt_family(4, variant));
    }

    let partitions = pochhammer_inf(&BigInt::from(1), 1, 1, b).expect("valid").invert().expect("unit constant");
    let overpartitions = gf::overpartition_gf::<BigInt>(b);
    for n in 0..=bound {
        let i = n as usize;
        c.value("partition count", n as i64, &partitions.coeffs()[i], &BigInt::from(enumerate_partitions(n).count()));
        c.value(
            "overpartition count",
            n as i64,
            &overpartitions.coeffs()[i],
            &BigInt::from(enumerate_overpartitions(n).count()),
        );
    }

    let euler = pochhammer_inf(&BigInt::from(1), 1, 1, order).expect("valid");
    let pentagonal = theta_sum(
        quadratic_window(3, -1, 0, 2 * order as i64),
        |k| k * (3 * k - 1) / 2,
        |k| BigInt::from(if k % 2 == 0 { 1 } else { -1 }),
        order,
    )
    .expect("non-negative exponents");
    c.series("pentagonal number theorem", &pentagonal, &euler, |i| i);
    c.note(format!("enumeration bound {b}"));
    c.finish()
}

/// `S̄B` with one coefficient of `q^n` changed by `+1` at `z^0`; used to
/// exercise the failure path.
pub fn corrupted_sb_at_zeta3(order: usize, n: usize) -> Zeta3Series {
    let mut coeffs = sb_at_root::<3>(order).into_coeffs();
    coeffs[n] += &Zeta3::from_int(1);
    TruncatedSeries::from_coeffs(coeffs)
}

/// Reports whose status is fail.
pub fn failures(reports: &[VerificationReport]) -> impl Iterator<Item = &VerificationReport> {
    reports.iter().filter(|r| !r.passed())
}
