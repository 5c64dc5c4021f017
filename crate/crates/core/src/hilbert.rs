//! R-charge-graded cohomology counts of line bundles on the weighted
//! projective stack P(d₁, …, d_k).
//!
//! For k ≥ 2, H⁰(𝒪(j)) is the degree-j part of ℂ[p₁, …, p_k] with
//! deg pᵢ = dᵢ; the monomial p^a has R-charge 2Σaᵢ. The top cohomology
//! H^{k−1}(𝒪(j)) is indexed by the negative-exponent local-cohomology
//! classes p^{−b} with bᵢ ≥ 1 and Σbᵢdᵢ = −j, of intrinsic R-charge −2Σbᵢ.
//! Middle cohomology vanishes and is not represented.
//!
//! For k = 1 the coordinate p is a nowhere-zero section of 𝒪(d₁)[2] on the
//! hybrid-model space, so 𝒪(d₁)[2] ≅ 𝒪 and the sections of 𝒪(j) are Laurent
//! monomials: one class of R-charge 2j/d₁ whenever d₁ | j, for either sign
//! of j. Top cohomology is H⁰ there and is not counted twice.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Finitely supported map from an integer grading to a positive count.
///
/// Absent key means zero; inserting a zero count is a no-op, so the support
/// is always exact.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedCount {
    entries: BTreeMap<i64, BigUint>,
}

impl GradedCount {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(i64, u64)]) -> Self {
        let mut out = Self::new();
        for &(degree, count) in pairs {
            out.add(degree, BigUint::from(count));
        }
        out
    }

    /// Adds `count` in degree `degree`, dropping zero contributions.
    pub fn add(&mut self, degree: i64, count: BigUint) {
        if !count.is_zero() {
            *self.entries.entry(degree).or_insert_with(BigUint::zero) += count;
        }
    }

    pub fn get(&self, degree: i64) -> Option<&BigUint> {
        self.entries.get(&degree)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.entries.iter().map(|(&d, c)| (d, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn support_min(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn support_max(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    /// Total count over all degrees.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }
}

/// Cached monomial counting for a fixed degree vector.
///
/// Holds the dense table ways\[x\]\[s\] = #{a ∈ ℤ₊^k : Σaᵢdᵢ = x, Σaᵢ = s},
/// grown on demand by an unbounded-knapsack recurrence, and serves both the
/// section counts (`h0`) and the local-cohomology counts (`htop`, via the
/// exponent shift bᵢ = aᵢ + 1). The memo is thread-confined: use one counter
/// per thread.
#[derive(Debug, Clone)]
pub struct SectionCounter {
    degrees: Vec<i64>,
    d_total: i64,
    d_min: usize,
    counts: Vec<Vec<BigUint>>,
}

impl SectionCounter {
    pub fn new(degrees: &[i64]) -> Self {
        assert!(!degrees.is_empty(), "at least one degree required");
        assert!(degrees.iter().all(|&d| d >= 1), "degrees must be positive");
        Self {
            degrees: degrees.to_vec(),
            d_total: degrees.iter().sum(),
            d_min: *degrees.iter().min().unwrap() as usize,
            counts: Vec::new(),
        }
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Counts of H⁰(𝒪(j)) by R-charge.
    pub fn h0(&mut self, j: i64) -> GradedCount {
        let mut out = GradedCount::new();
        if self.degrees.len() == 1 {
            let d = self.degrees[0];
            if j.rem_euclid(d) == 0 {
                out.add(2 * (j / d), BigUint::one());
            }
            return out;
        }
        if j < 0 {
            return out;
        }
        self.ensure(j as usize);
        for (s, count) in self.counts[j as usize].iter().enumerate() {
            out.add(2 * s as i64, count.clone());
        }
        out
    }

    /// Counts of H^{k−1}(𝒪(j)) by intrinsic R-charge; empty for k = 1.
    pub fn htop(&mut self, j: i64) -> GradedCount {
        let mut out = GradedCount::new();
        let k = self.degrees.len() as i64;
        if k == 1 {
            return out;
        }
        // b ↦ b − (1, …, 1) identifies {b ≥ 1 : Σbᵢdᵢ = −j} with
        // {a ≥ 0 : Σaᵢdᵢ = −j − d}, and −2Σbᵢ = −2Σaᵢ − 2k.
        let target = -j - self.d_total;
        if target < 0 {
            return out;
        }
        self.ensure(target as usize);
        for (s, count) in self.counts[target as usize].iter().enumerate() {
            out.add(-2 * (s as i64 + k), count.clone());
        }
        out
    }

    fn ensure(&mut self, x: usize) {
        if self.counts.len() > x {
            return;
        }
        // Full rebuild with geometric growth; the per-coin recurrence fills
        // rows in place.
        let new_max = x.max(2 * self.counts.len()).max(64);
        let mut rows: Vec<Vec<BigUint>> = (0..=new_max)
            .map(|row| vec![BigUint::zero(); row / self.d_min + 1])
            .collect();
        rows[0][0] = BigUint::one();
        for &degree in &self.degrees {
            let degree = degree as usize;
            for row in degree..=new_max {
                let (lower, upper) = rows.split_at_mut(row);
                let src = &lower[row - degree];
                let dst = &mut upper[0];
                for s in 1..dst.len() {
                    if s - 1 < src.len() && !src[s - 1].is_zero() {
                        dst[s] += &src[s - 1];
                    }
                }
            }
        }
        self.counts = rows;
    }
}

/// Dimensions of H⁰(P(d₁,…,d_k), 𝒪(j)) graded by R-charge r = 2Σaᵢ.
pub fn h0_graded(degrees: &[i64], j: i64) -> GradedCount {
    SectionCounter::new(degrees).h0(j)
}

/// Dimensions of H^{k−1}(P(d₁,…,d_k), 𝒪(j)) graded by the intrinsic
/// R-charge −2Σbᵢ of the local-cohomology class p^{−b}.
pub fn htop_graded(degrees: &[i64], j: i64) -> GradedCount {
    SectionCounter::new(degrees).htop(j)
}

/// Minimum and maximum R-charge 2Σaᵢ over the solutions of Σaᵢdᵢ = j,
/// by min/max unbounded-knapsack dynamic programming; `None` when j is
/// unrepresentable. Agrees with the support extremes of [`h0_graded`].
pub fn extremal_rcharge(degrees: &[i64], j: i64) -> Option<(i64, i64)> {
    assert!(!degrees.is_empty(), "at least one degree required");
    assert!(degrees.iter().all(|&d| d >= 1), "degrees must be positive");
    if degrees.len() == 1 {
        let d = degrees[0];
        return (j.rem_euclid(d) == 0).then(|| (2 * (j / d), 2 * (j / d)));
    }
    if j < 0 {
        return None;
    }
    let j = j as usize;
    let mut min_coins: Vec<Option<i64>> = vec![None; j + 1];
    let mut max_coins: Vec<Option<i64>> = vec![None; j + 1];
    min_coins[0] = Some(0);
    max_coins[0] = Some(0);
    for x in 1..=j {
        for &degree in degrees {
            let degree = degree as usize;
            if degree > x {
                continue;
            }
            if let Some(below) = min_coins[x - degree] {
                let candidate = below + 1;
                min_coins[x] = Some(min_coins[x].map_or(candidate, |cur| cur.min(candidate)));
            }
            if let Some(below) = max_coins[x - degree] {
                let candidate = below + 1;
                max_coins[x] = Some(max_coins[x].map_or(candidate, |cur| cur.max(candidate)));
            }
        }
    }
    min_coins[j].map(|mn| (2 * mn, 2 * max_coins[j].expect("min and max coexist")))
}
