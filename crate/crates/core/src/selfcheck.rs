//! Runtime invariant battery behind the CLI `check` command.
//!
//! Re-verifies, for one concrete model, the structural identities the test
//! suite pins down on fixed inputs: counting identities on the weighted
//! projective stack, Serre duality and stable-range behaviour of the Hom
//! tables, the functor-lattice identities, and the convergence envelope of
//! the Serre-dimension samples. Checks that need the brute-force oracle are
//! skipped when the model exceeds the oracle guard (n > 10).

use crate::ext::{hom_table, koszul_pieces, HomTables};
use crate::hilbert::{extremal_rcharge, h0_graded, htop_graded, GradedCount, SectionCounter};
use crate::lattice::{
    canonical_bundle, fractional_cy, power_identity_report_with_last, serre_functor,
    LatticeFunctor, Side,
};
use crate::model::CompleteIntersectionModel;
use crate::oracle::{brute_hom_table, enumerate_monomials, Regime};
use crate::serredim::{min_horizon, sdim_closed_form, sdim_estimates};
use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Outcome of one named invariant check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    /// Failure description; empty on success.
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<(), String>) -> CheckResult {
    match outcome {
        Ok(()) => CheckResult {
            name,
            pass: true,
            detail: String::new(),
        },
        Err(detail) => CheckResult {
            name,
            pass: false,
            detail,
        },
    }
}

/// Runs every applicable invariant against the model.
pub fn run_checks(model: &CompleteIntersectionModel) -> Vec<CheckResult> {
    let k = model.codim();
    let mut results = vec![check("model.arithmetic", model_arithmetic(model))];
    if k >= 2 {
        results.push(check(
            "hilbert.generating-function",
            generating_function(model),
        ));
        results.push(check("hilbert.local-duality", local_duality(model)));
    }
    results.push(check(
        "hilbert.extremal-consistency",
        extremal_consistency(model),
    ));
    results.push(check("hilbert.rcharge-bounds", rcharge_bounds(model)));
    if model.n() <= 10 {
        results.push(check(
            "hilbert.oracle-agreement",
            hilbert_oracle_agreement(model),
        ));
    }
    results.push(check("ext.koszul-row", koszul_row(model)));
    results.push(check("ext.serre-duality", serre_duality(model)));
    results.push(check("ext.stable-range-purity", stable_range_purity(model)));
    results.push(check("ext.degree-bounds", degree_bounds(model)));
    results.push(check("ext.dmax-attainment", dmax_attainment(model)));
    results.push(check(
        "ext.translation-invariance",
        translation_invariance(model),
    ));
    if model.n() <= 10 {
        results.push(check("ext.oracle-agreement", ext_oracle_agreement(model)));
    }
    results.push(check("lattice.serre-sides", serre_sides(model)));
    results.push(check(
        "lattice.canonical-consistency",
        canonical_consistency(model),
    ));
    if k >= 2 {
        results.push(check("lattice.power-identities", power_identities(model)));
    } else {
        results.push(check("lattice.fractional-cy", fractional_cy_form(model)));
    }
    results.push(check("serredim.envelope", orbit_envelope(model)));
    results.push(check("serredim.estimate-order", estimate_order(model)));
    results.push(check("serredim.attainment", divisible_attainment(model)));
    results
}

fn fail(message: String) -> Result<(), String> {
    Err(message)
}

fn model_arithmetic(model: &CompleteIntersectionModel) -> Result<(), String> {
    if model.index() + model.d_total() != model.n() + 1 {
        return fail("index + total degree != n + 1".into());
    }
    if model.dim_x() + model.codim() != model.n() {
        return fail("dim X + codim != n".into());
    }
    if model.dim_y_minus() != model.n() + model.codim() {
        return fail("dim Y- != n + k".into());
    }
    if model.degrees().windows(2).any(|w| w[0] > w[1]) {
        return fail("degrees are not sorted ascending".into());
    }
    Ok(())
}

/// (Σ_{j≤N} Σ_r count(j,r) z^j q^r) · Π (1 − q² z^{dᵢ}) = 1 + O(z^{N+1})
fn generating_function(model: &CompleteIntersectionModel) -> Result<(), String> {
    const TRUNCATION: usize = 40;
    let mut counter = SectionCounter::new(model.degrees());
    let mut poly: Vec<BTreeMap<i64, BigInt>> = (0..=TRUNCATION)
        .map(|j| {
            counter
                .h0(j as i64)
                .iter()
                .map(|(r, c)| (r, BigInt::from(c.clone())))
                .collect()
        })
        .collect();
    for &degree in model.degrees() {
        let degree = degree as usize;
        for j in (degree..=TRUNCATION).rev() {
            let (lower, upper) = poly.split_at_mut(j);
            for (r, coeff) in lower[j - degree].clone() {
                *upper[0].entry(r + 2).or_insert_with(BigInt::zero) -= coeff;
            }
        }
    }
    for (j, terms) in poly.iter().enumerate() {
        for (r, coeff) in terms {
            let expected_unit = j == 0 && *r == 0;
            if (expected_unit && *coeff != BigInt::from(1)) || (!expected_unit && !coeff.is_zero())
            {
                return fail(format!("coefficient of z^{j} q^{r} is {coeff}"));
            }
        }
    }
    if poly[0].get(&0) != Some(&BigInt::from(1)) {
        return fail("constant term missing".into());
    }
    Ok(())
}

/// htop(j) must match h0(−d−j) with r ↦ −r − 2k.
fn local_duality(model: &CompleteIntersectionModel) -> Result<(), String> {
    let degrees = model.degrees();
    let (d, k) = (model.d_total(), model.codim());
    for j in -45..=10 {
        let top = htop_graded(degrees, j);
        let dual = h0_graded(degrees, -d - j);
        if top.len() != dual.len() || dual.iter().any(|(r, c)| top.get(-r - 2 * k) != Some(c)) {
            return fail(format!("local duality broken at j = {j}"));
        }
    }
    Ok(())
}

fn extremal_consistency(model: &CompleteIntersectionModel) -> Result<(), String> {
    let degrees = model.degrees();
    let range = if model.codim() == 1 { -30..=50 } else { 0..=50 };
    for j in range {
        let count = h0_graded(degrees, j);
        let expected = count.support_min().zip(count.support_max());
        if extremal_rcharge(degrees, j) != expected {
            return fail(format!(
                "extremal R-charges disagree with sections at j = {j}"
            ));
        }
    }
    Ok(())
}

fn rcharge_bounds(model: &CompleteIntersectionModel) -> Result<(), String> {
    let degrees = model.degrees();
    let (d_min, d_max) = (model.d_min(), model.d_max());
    for j in 0..=60 {
        if let Some((min_r, max_r)) = extremal_rcharge(degrees, j) {
            let min_tight = min_r * d_max == 2 * j;
            let max_tight = max_r * d_min == 2 * j;
            if min_r * d_max < 2 * j || max_r * d_min > 2 * j {
                return fail(format!("R-charge bound violated at j = {j}"));
            }
            if min_tight != (j % d_max == 0) || max_tight != (j % d_min == 0) {
                return fail(format!("attainment criterion violated at j = {j}"));
            }
        }
    }
    Ok(())
}

fn grouped(vectors: Vec<crate::oracle::ExponentVector>) -> GradedCount {
    let mut count = GradedCount::new();
    for vector in vectors {
        count.add(vector.rcharge(), 1u32.into());
    }
    count
}

fn hilbert_oracle_agreement(model: &CompleteIntersectionModel) -> Result<(), String> {
    let degrees = model.degrees();
    for j in -40..=40 {
        if h0_graded(degrees, j) != grouped(enumerate_monomials(degrees, j, Regime::H0)) {
            return fail(format!("h0 disagrees with enumeration at j = {j}"));
        }
        if model.codim() >= 2
            && htop_graded(degrees, j) != grouped(enumerate_monomials(degrees, j, Regime::Htop))
        {
            return fail(format!("htop disagrees with enumeration at j = {j}"));
        }
    }
    Ok(())
}

fn koszul_row(model: &CompleteIntersectionModel) -> Result<(), String> {
    let expected = num_bigint::BigUint::from(2u32).pow((model.n() + 1) as u32);
    for m in [-3, 0, 11] {
        let pieces = koszul_pieces(model, m);
        if pieces.len() as i64 != model.n() + 2 {
            return fail(format!("wrong number of Koszul pieces at m = {m}"));
        }
        if pieces.iter().any(|p| p.twist + p.shift != m) {
            return fail(format!("twist + shift != m at m = {m}"));
        }
        let total: num_bigint::BigUint = pieces.into_iter().map(|p| p.multiplicity).sum();
        if total != expected {
            return fail(format!("multiplicities do not sum to 2^(n+1) at m = {m}"));
        }
    }
    Ok(())
}

/// dim Hom^t(𝒪(a), 𝒪(b)) = dim Hom^{dim X − t}(𝒪(b), 𝒪(a + ind X)).
fn serre_duality(model: &CompleteIntersectionModel) -> Result<(), String> {
    let mut tables = HomTables::new(model);
    let (dim_x, index) = (model.dim_x(), model.index());
    for a in -10..=10 {
        for b in -10..=10 {
            let forward = tables.table(a, b).clone();
            let backward = tables.table(b, a + index).clone();
            if forward.len() != backward.len()
                || forward
                    .iter()
                    .any(|(t, c)| backward.get(dim_x - t) != Some(c))
            {
                return fail(format!("Serre duality broken for a = {a}, b = {b}"));
            }
        }
    }
    Ok(())
}

fn stable_range_purity(model: &CompleteIntersectionModel) -> Result<(), String> {
    let stable_from = model.n() + 2 - model.d_total();
    for m in stable_from..stable_from + 20 {
        for piece in koszul_pieces(model, m) {
            if !htop_graded(model.degrees(), piece.twist).is_empty() {
                return fail(format!(
                    "top cohomology contributes in the stable range: m = {m}, twist = {}",
                    piece.twist
                ));
            }
        }
    }
    Ok(())
}

/// In the stable range, e₋ ≥ 2m/d_max and e₊ ≤ 2(m−n−1)/d_min + n + 1.
fn degree_bounds(model: &CompleteIntersectionModel) -> Result<(), String> {
    let mut tables = HomTables::new(model);
    let (d_min, d_max, n) = (model.d_min(), model.d_max(), model.n());
    let stable_from = (model.n() + 2 - model.d_total()).max(0);
    for m in stable_from..=stable_from + 60 {
        let Some((e_minus, e_plus)) = tables.e_extremes(0, m) else {
            continue;
        };
        if e_minus * d_max < 2 * m {
            return fail(format!("lower degree bound violated at m = {m}"));
        }
        if e_plus * d_min > 2 * (m - n - 1) + (n + 1) * d_min {
            return fail(format!("upper degree bound violated at m = {m}"));
        }
    }
    Ok(())
}

fn dmax_attainment(model: &CompleteIntersectionModel) -> Result<(), String> {
    let mut tables = HomTables::new(model);
    let d_max = model.d_max();
    for multiple in 0..=20 {
        let m = multiple * d_max;
        match tables.e_extremes(0, m) {
            Some((e_minus, _)) if e_minus == 2 * m / d_max => {}
            other => return fail(format!("e- not attained at m = {m}: {other:?}")),
        }
    }
    Ok(())
}

fn translation_invariance(model: &CompleteIntersectionModel) -> Result<(), String> {
    for a in [-4, 0, 3] {
        for m in [-7, -1, 0, 2, 9] {
            if hom_table(model, a, a + m) != hom_table(model, a + 5, a + m + 5) {
                return fail(format!(
                    "table depends on more than b - a at a = {a}, m = {m}"
                ));
            }
        }
    }
    Ok(())
}

fn ext_oracle_agreement(model: &CompleteIntersectionModel) -> Result<(), String> {
    let mut tables = HomTables::new(model);
    for m in -20..=20 {
        let brute = brute_hom_table(model, -3, -3 + m).map_err(|e| e.to_string())?;
        if tables.table(-3, -3 + m) != &brute {
            return fail(format!("fast path disagrees with oracle at m = {m}"));
        }
    }
    Ok(())
}

fn serre_sides(model: &CompleteIntersectionModel) -> Result<(), String> {
    let minus = serre_functor(model, Side::Yminus);
    let plus = serre_functor(model, Side::Yplus);
    if minus.twist != -plus.twist {
        return fail("twist parts of the two Serre functors are not opposite".into());
    }
    if minus + plus != LatticeFunctor::new(0, 2 * model.dim_x()) {
        return fail("Serre functors do not sum to the pure shift [2(n-k)]".into());
    }
    Ok(())
}

fn canonical_consistency(model: &CompleteIntersectionModel) -> Result<(), String> {
    let expected = serre_functor(model, Side::Yminus);
    if canonical_bundle(model) + LatticeFunctor::shift_by(model.dim_y_minus()) != expected {
        return fail("canonical bundle + [dim Y-] != Serre functor".into());
    }
    Ok(())
}

fn power_identities(model: &CompleteIntersectionModel) -> Result<(), String> {
    for last in 0..model.degrees().len() {
        let report = power_identity_report_with_last(model, last).map_err(|e| e.to_string())?;
        if !report.passes() {
            return fail(format!(
                "power identity fails when slicing off position {last}"
            ));
        }
    }
    Ok(())
}

fn fractional_cy_form(model: &CompleteIntersectionModel) -> Result<(), String> {
    let (p, q) = fractional_cy(model).map_err(|e| e.to_string())?;
    if p < 1 {
        return fail(format!("non-positive period p = {p}"));
    }
    let expected = Rational64::new((model.n() + 1) * (model.d_total() - 2), model.d_total());
    if Rational64::new(q, p) != expected {
        return fail(format!(
            "CY dimension {q}/{p} differs from the closed form {expected}"
        ));
    }
    Ok(())
}

/// Quantified convergence envelope around the closed forms. The slack
/// constants are the provable ones: 2(d−1)/(d_max·m) above the upper closed
/// form, and on the lower side the stable-range degree bound gives
/// B = (n+1) + 2(d−n−2)/d_min.
fn orbit_envelope(model: &CompleteIntersectionModel) -> Result<(), String> {
    let report = sdim_estimates(model, 2 * min_horizon(model)).map_err(|e| e.to_string())?;
    let d = model.d_total();
    let (upper_closed, lower_closed) = sdim_closed_form(model);
    let lower_slack_numerator = Rational64::from_integer(model.n() + 1)
        + Rational64::new(2 * (d - model.n() - 2), model.d_min());
    for point in &report.series {
        let upper_slack = Rational64::new(2 * (d - 1), model.d_max() * point.m);
        if point.upper_sample < upper_closed || point.upper_sample > upper_closed + upper_slack {
            return fail(format!(
                "upper sample escapes the envelope at m = {}",
                point.m
            ));
        }
        let lower_above = Rational64::new(2 * (d - 1), model.d_min() * point.m);
        let lower_below = lower_slack_numerator / Rational64::from_integer(point.m);
        if point.lower_sample > lower_closed + lower_above
            || point.lower_sample < lower_closed - lower_below
        {
            return fail(format!(
                "lower sample escapes the envelope at m = {}",
                point.m
            ));
        }
    }
    Ok(())
}

fn estimate_order(model: &CompleteIntersectionModel) -> Result<(), String> {
    let report = sdim_estimates(model, 2 * min_horizon(model)).map_err(|e| e.to_string())?;
    if report.upper_estimate < report.lower_estimate {
        return fail("upper estimate below lower estimate".into());
    }
    for point in &report.series {
        if point.e_minus > point.e_plus || point.upper_sample < point.lower_sample {
            return fail(format!("sample order violated at m = {}", point.m));
        }
    }
    Ok(())
}

/// Whenever d_max | m·ind X the window offset j = 0 attains the upper
/// closed form, so the sample cannot fall below it; at the table level the
/// minimal degree is exactly 2·m·ind X/d_max.
fn divisible_attainment(model: &CompleteIntersectionModel) -> Result<(), String> {
    let report = sdim_estimates(model, 2 * min_horizon(model)).map_err(|e| e.to_string())?;
    let mut tables = HomTables::new(model);
    let (upper_closed, _) = sdim_closed_form(model);
    let (d_max, index) = (model.d_max(), model.index());
    for point in &report.series {
        if (point.m * index) % d_max != 0 {
            continue;
        }
        if point.upper_sample < upper_closed {
            return fail(format!(
                "divisible sample below the closed form at m = {}",
                point.m
            ));
        }
        let twist = point.m * index;
        match tables.e_extremes(0, twist) {
            Some((e_minus, _)) if e_minus == 2 * twist / d_max => {}
            other => {
                return fail(format!(
                    "table minimum not attained at twist {twist}: {other:?}"
                ))
            }
        }
    }
    Ok(())
}
