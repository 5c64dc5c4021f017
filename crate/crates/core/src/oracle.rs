//! Brute-force reference implementations used by the test suites.
//!
//! Everything here recomputes from first principles with naive nested
//! enumeration and factorial binomials, sharing no code with the dynamic
//! programming in [`crate::hilbert`] or the Pascal-row assembly in
//! [`crate::ext`], so agreement between the two paths is a genuine check.
//! Performance is explicitly a non-goal; the guard on [`brute_hom_table`]
//! keeps inputs tractable.

use crate::ext::GradedHomTable;
use crate::model::CompleteIntersectionModel;
use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute-force guard exceeded: need |b - a| = {span} ≤ 60 and n = {n} ≤ 10")]
    GuardExceeded { span: i64, n: i64 },
}

/// Which cohomology the exponent vectors index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Section monomials: exponents ≥ 0 for k ≥ 2, any sign for the k = 1
    /// Laurent convention.
    H0,
    /// Local-cohomology classes: all exponents ≤ −1 (k ≥ 2 only).
    Htop,
}

/// Exponent vector of a (Laurent) monomial in p₁, …, p_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentVector {
    pub exponents: Vec<i64>,
}

impl ExponentVector {
    /// R-charge 2Σeᵢ (each pᵢ carries R-charge 2).
    pub fn rcharge(&self) -> i64 {
        2 * self.exponents.iter().sum::<i64>()
    }

    pub fn weighted_degree(&self, degrees: &[i64]) -> i64 {
        self.exponents.iter().zip(degrees).map(|(e, d)| e * d).sum()
    }
}

/// Exhaustively lists the exponent vectors of weighted degree j, in
/// lexicographically descending order.
pub fn enumerate_monomials(degrees: &[i64], j: i64, regime: Regime) -> Vec<ExponentVector> {
    assert!(!degrees.is_empty(), "at least one degree required");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(degrees.len());
    match regime {
        Regime::H0 => {
            if degrees.len() == 1 {
                if j.rem_euclid(degrees[0]) == 0 {
                    out.push(ExponentVector {
                        exponents: vec![j / degrees[0]],
                    });
                }
            } else if j >= 0 {
                collect_h0(degrees, j, &mut prefix, &mut out);
            }
        }
        Regime::Htop => {
            assert!(degrees.len() >= 2, "top cohomology regime needs k ≥ 2");
            let d_total: i64 = degrees.iter().sum();
            let target = -j - d_total;
            if target >= 0 {
                collect_htop(degrees, target, &mut prefix, &mut out);
            }
        }
    }
    out
}

fn collect_h0(
    degrees: &[i64],
    remaining: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<ExponentVector>,
) {
    if degrees.len() == 1 {
        if remaining % degrees[0] == 0 {
            prefix.push(remaining / degrees[0]);
            out.push(ExponentVector {
                exponents: prefix.clone(),
            });
            prefix.pop();
        }
        return;
    }
    for exponent in (0..=remaining / degrees[0]).rev() {
        prefix.push(exponent);
        collect_h0(
            &degrees[1..],
            remaining - exponent * degrees[0],
            prefix,
            out,
        );
        prefix.pop();
    }
}

// Enumerates b = a + (1,…,1) through the shifted budget `remaining`; pushing
// the stored exponent −(a+1) with a ascending keeps the output descending.
fn collect_htop(
    degrees: &[i64],
    remaining: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<ExponentVector>,
) {
    if degrees.len() == 1 {
        if remaining % degrees[0] == 0 {
            prefix.push(-(remaining / degrees[0] + 1));
            out.push(ExponentVector {
                exponents: prefix.clone(),
            });
            prefix.pop();
        }
        return;
    }
    for shifted in 0..=remaining / degrees[0] {
        prefix.push(-(shifted + 1));
        collect_htop(&degrees[1..], remaining - shifted * degrees[0], prefix, out);
        prefix.pop();
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n)
        .map(BigUint::from)
        .product::<BigUint>()
        .max(BigUint::one())
}

fn binomial_by_factorials(n: u64, k: u64) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Direct assembly of the Hom table from enumerated monomials, recomputing
/// the Koszul multiplicities with factorial arithmetic. Guarded to
/// |b − a| ≤ 60 and n ≤ 10.
pub fn brute_hom_table(
    model: &CompleteIntersectionModel,
    a: i64,
    b: i64,
) -> Result<GradedHomTable, OracleError> {
    let m = b - a;
    if m.abs() > 60 || model.n() > 10 {
        return Err(OracleError::GuardExceeded {
            span: m.abs(),
            n: model.n(),
        });
    }
    let k = model.codim();
    let mut table = GradedHomTable::new();
    for i in 0..=model.n() + 1 {
        let multiplicity = binomial_by_factorials((model.n() + 1) as u64, i as u64);
        let twist = m - i;
        for monomial in enumerate_monomials(model.degrees(), twist, Regime::H0) {
            table.add(monomial.rcharge() + i, multiplicity.clone());
        }
        if k >= 2 {
            for class in enumerate_monomials(model.degrees(), twist, Regime::Htop) {
                table.add(class.rcharge() + i + (k - 1), multiplicity.clone());
            }
        }
    }
    Ok(table)
}
