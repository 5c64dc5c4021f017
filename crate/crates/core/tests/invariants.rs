//! Randomized structural invariants, driven by a fixed-seed generator so
//! failures reproduce exactly.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use residual_core::hilbert::{h0_graded, SectionCounter};
use residual_core::lattice::{
    canonical_bundle, power_identity_report_with_last, serre_functor, LatticeFunctor, Side,
};
use residual_core::model::reduce_linear;
use residual_core::serredim::{min_horizon, orbit_point, sdim_closed_form, sdim_estimates};
use residual_core::{hom_table, CompleteIntersectionModel, HomTables};
use std::collections::BTreeMap;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xd15c0)
}

fn random_model(rng: &mut ChaCha8Rng, max_n: i64) -> CompleteIntersectionModel {
    loop {
        let k = rng.gen_range(1..=4);
        let degrees: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=7)).collect();
        let total: i64 = degrees.iter().sum();
        if total > max_n {
            continue;
        }
        let n = rng.gen_range(total.max(2)..=max_n);
        return CompleteIntersectionModel::validate(n, degrees).unwrap();
    }
}

#[test]
fn permuting_degrees_changes_nothing() {
    let mut rng = rng();
    for _ in 0..30 {
        let model = random_model(&mut rng, 9);
        let mut shuffled = model.degrees().to_vec();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        let permuted = CompleteIntersectionModel::validate(model.n(), shuffled).unwrap();
        assert_eq!(model, permuted);
        assert_eq!(sdim_closed_form(&model), sdim_closed_form(&permuted));
        for m in -4..=8 {
            assert_eq!(hom_table(&model, 0, m), hom_table(&permuted, 0, m));
        }
    }
}

#[test]
fn reduce_linear_feeds_validate() {
    let mut rng = rng();
    for _ in 0..200 {
        let k = rng.gen_range(1..=5);
        let degrees: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=6)).collect();
        let n = rng.gen_range(2..=24);
        let Ok(once) = reduce_linear(n, degrees.clone()) else {
            assert!(degrees.iter().all(|&d| d == 1));
            continue;
        };
        let twice = reduce_linear(once.0, once.1.clone()).unwrap();
        assert_eq!(once, twice, "idempotence on ({n}, {degrees:?})");

        let nontrivial_total: i64 = degrees.iter().filter(|&&d| d >= 2).sum();
        let linear_count = degrees.iter().filter(|&&d| d == 1).count() as i64;
        let should_validate = degrees.iter().any(|&d| d >= 2)
            && nontrivial_total <= n - linear_count
            && n - linear_count >= 2;
        assert_eq!(
            CompleteIntersectionModel::validate(once.0, once.1).is_ok(),
            should_validate,
            "validate(reduce_linear({n}, {degrees:?})))"
        );
    }
}

/// (Σ_{j≤N} Σ_r count(j,r) z^j q^r) · Π (1 − q² z^{dᵢ}) = 1 + O(z^{N+1})
#[test]
fn generating_function_identity() {
    const TRUNCATION: usize = 40;
    let mut rng = rng();
    for _ in 0..25 {
        let model = random_model(&mut rng, 18);
        if model.codim() < 2 {
            continue;
        }
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
                if j == 0 && *r == 0 {
                    assert_eq!(*coeff, BigInt::from(1));
                } else {
                    assert!(
                        coeff.is_zero(),
                        "z^{j} q^{r} survives for {:?}",
                        model.degrees()
                    );
                }
            }
        }
    }
}

#[test]
fn serre_duality_on_random_models() {
    let mut rng = rng();
    for _ in 0..25 {
        let model = random_model(&mut rng, 12);
        let mut tables = HomTables::new(&model);
        let (dim_x, index) = (model.dim_x(), model.index());
        for a in -6..=6 {
            for b in -6..=6 {
                let forward = tables.table(a, b).clone();
                let backward = tables.table(b, a + index).clone();
                assert_eq!(forward.len(), backward.len());
                for (t, count) in forward.iter() {
                    assert_eq!(
                        backward.get(dim_x - t),
                        Some(count),
                        "degrees {:?}, a = {a}, b = {b}, t = {t}",
                        model.degrees()
                    );
                }
            }
        }
    }
}

#[test]
fn tables_are_translation_invariant() {
    let mut rng = rng();
    for _ in 0..40 {
        let model = random_model(&mut rng, 12);
        let a = rng.gen_range(-10..=10);
        let m = rng.gen_range(-15..=15);
        let shift = rng.gen_range(-8..=8);
        assert_eq!(
            hom_table(&model, a, a + m),
            hom_table(&model, a + shift, a + m + shift)
        );
    }
}

#[test]
fn stable_range_tables_grow_minimal_degree_linearly() {
    // stable-range degree bounds, as exact integer comparisons
    let mut rng = rng();
    for _ in 0..20 {
        let model = random_model(&mut rng, 12);
        let mut tables = HomTables::new(&model);
        let (d_min, d_max, n) = (model.d_min(), model.d_max(), model.n());
        let stable_from = (n + 2 - model.d_total()).max(0);
        for m in stable_from..=stable_from + 40 {
            let Some((e_minus, e_plus)) = tables.e_extremes(0, m) else {
                continue;
            };
            assert!(
                e_minus * d_max >= 2 * m,
                "degrees {:?}, m = {m}",
                model.degrees()
            );
            assert!(
                e_plus * d_min <= 2 * (m - n - 1) + (n + 1) * d_min,
                "degrees {:?}, m = {m}",
                model.degrees()
            );
        }
    }
}

#[test]
fn lattice_identities_on_random_models() {
    let mut rng = rng();
    for _ in 0..200 {
        let model = random_model(&mut rng, 40);
        let minus = serre_functor(&model, Side::Yminus);
        let plus = serre_functor(&model, Side::Yplus);
        assert_eq!(minus.twist, -plus.twist);
        assert_eq!(minus + plus, LatticeFunctor::new(0, 2 * model.dim_x()));
        assert_eq!(
            canonical_bundle(&model) + LatticeFunctor::shift_by(model.dim_y_minus()),
            minus
        );
        if model.codim() >= 2 {
            let last = rng.gen_range(0..model.degrees().len());
            let report = power_identity_report_with_last(&model, last).unwrap();
            assert!(
                report.passes(),
                "degrees {:?}, last {last}",
                model.degrees()
            );
        }
    }
}

#[test]
fn orbit_samples_stay_in_the_convergence_envelope() {
    // the 2d/m envelope on suite-sized models (n comparable to d)
    for (n, degrees) in [
        (5, vec![2, 3]),
        (6, vec![2, 2]),
        (7, vec![2, 2, 2]),
        (9, vec![3, 4]),
        (10, vec![2, 3, 4]),
        (4, vec![3]),
        (5, vec![3]),
    ] {
        let model = CompleteIntersectionModel::validate(n, degrees).unwrap();
        let report = sdim_estimates(&model, 2 * min_horizon(&model)).unwrap();
        let (upper_closed, lower_closed) = sdim_closed_form(&model);
        let d = model.d_total();
        for point in &report.series {
            let envelope = Rational64::new(2 * d, point.m);
            assert!(
                (point.upper_sample - upper_closed).abs() <= envelope,
                "degrees {:?}, m = {}",
                model.degrees(),
                point.m
            );
            assert!(
                (point.lower_sample - lower_closed).abs() <= envelope,
                "degrees {:?}, m = {}",
                model.degrees(),
                point.m
            );
            assert!(point.upper_sample >= point.lower_sample);
        }
        assert!(report.upper_estimate >= report.lower_estimate);
        if model.d_max() == model.d_min() {
            assert_eq!(upper_closed, lower_closed);
        }
    }
}

#[test]
fn doubling_the_horizon_refines_the_estimate() {
    let model = CompleteIntersectionModel::validate(5, vec![2, 3]).unwrap();
    let base = 60;
    let refined = sdim_estimates(&model, 2 * base).unwrap();
    let envelope_at_half = Rational64::new(2 * model.d_total(), base / 2);
    assert!((refined.upper_estimate - refined.upper_closed).abs() <= envelope_at_half);
    assert!((refined.lower_estimate - refined.lower_closed).abs() <= envelope_at_half);
}

#[test]
fn equal_degree_estimates_collapse_at_horizon_400() {
    let model = CompleteIntersectionModel::validate(7, vec![2, 2, 2]).unwrap();
    let report = sdim_estimates(&model, 400).unwrap();
    let target = Rational64::from_integer(2);
    let bound = Rational64::new(12, 200);
    assert_eq!(report.upper_closed, target);
    assert_eq!(report.lower_closed, target);
    assert!((report.upper_estimate - target).abs() <= bound);
    assert!((report.lower_estimate - target).abs() <= bound);
}

#[test]
fn orbit_point_rejects_nonpositive_power_inputs_gracefully() {
    let model = CompleteIntersectionModel::validate(5, vec![2, 3]).unwrap();
    assert!(std::panic::catch_unwind(|| orbit_point(&model, 0)).is_err());
    assert!(orbit_point(&model, 1).is_ok());
}

#[test]
fn counts_are_consistent_between_batch_and_single_shot() {
    let mut rng = rng();
    for _ in 0..20 {
        let model = random_model(&mut rng, 10);
        let mut counter = SectionCounter::new(model.degrees());
        // query out of order to exercise cache growth
        let js: Vec<i64> = (0..12).map(|_| rng.gen_range(-20..=60)).collect();
        for &j in &js {
            assert_eq!(counter.h0(j), h0_graded(model.degrees(), j), "j = {j}");
        }
    }
}
