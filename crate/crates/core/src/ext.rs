//! Bigraded Hom tables between line bundles in MF(Y₋, W).
//!
//! The zero section P(d₁,…,d_k) ⊂ Y₋ is cut out by a regular section of
//! 𝒪(−1)^{n+1}, and because every dᵢ ≥ 2 the induced Koszul-type matrix
//! factorization resolving 𝒪_{P(d)} carries no differential. Local Homs
//! into 𝒪(m) therefore split as ⊕_{i=0}^{n+1} 𝒪(m−i)^{⊕C(n+1,i)} with
//! homological (R-charge) shift i on the i-th summand, and the global Hom
//! table is the cohomology of those line bundles re-graded by total degree:
//!
//! * an H⁰ class of 𝒪(m−i) with R-charge r sits in total degree r + i;
//! * an H^{k−1} class with intrinsic R-charge r sits in degree r + i + (k−1).
//!
//! Since the differential vanishes this is exact in every degree; the
//! familiar "only H⁰ for m ≫ 0" shortcut is recovered as the stable-range
//! special case m > n + 1 − d, where no twist m − i reaches −d.

use crate::hilbert::SectionCounter;
use crate::model::CompleteIntersectionModel;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// One Koszul summand 𝒪(m−i)^{⊕C(n+1,i)}[−i].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulPiece {
    /// Koszul index i ∈ [0, n+1].
    pub index: i64,
    /// Twist of the summand, m − i.
    pub twist: i64,
    /// Multiplicity C(n+1, i).
    pub multiplicity: BigUint,
    /// R-charge shift contributed to total degree (equals the index).
    pub shift: i64,
}

/// Finitely supported map total-degree t ↦ dim Hom^t, all counts positive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedHomTable {
    entries: BTreeMap<i64, BigUint>,
}

impl GradedHomTable {
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

    /// (min, max) of the support; `None` for the zero Hom space.
    pub fn e_extremes(&self) -> Option<(i64, i64)> {
        let min = self.entries.keys().next().copied()?;
        let max = self.entries.keys().next_back().copied()?;
        Some((min, max))
    }
}

/// (e₋, e₊) of a Hom table: the minimal and maximal degrees carrying
/// nonzero morphisms, or `None` for the empty table.
pub fn e_extremes(table: &GradedHomTable) -> Option<(i64, i64)> {
    table.e_extremes()
}

/// The n+2 Koszul summands of local Homs into 𝒪(m).
pub fn koszul_pieces(model: &CompleteIntersectionModel, m: i64) -> Vec<KoszulPiece> {
    let row = binomial_row((model.n() + 1) as usize);
    row.into_iter()
        .enumerate()
        .map(|(i, multiplicity)| KoszulPiece {
            index: i as i64,
            twist: m - i as i64,
            multiplicity,
            shift: i as i64,
        })
        .collect()
}

/// Row n of Pascal's triangle, C(n, 0) … C(n, n), in arbitrary precision.
fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::one()];
        for pair in row.windows(2) {
            next.push(&pair[0] + &pair[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row
}

/// Hom-table calculator for a fixed model, with memoized section counts and
/// memoized tables. Tables depend only on the twist difference b − a, so the
/// cache is keyed by it. Thread-confined; results are deterministic.
#[derive(Debug, Clone)]
pub struct HomTables {
    model: CompleteIntersectionModel,
    counter: SectionCounter,
    binomials: Vec<BigUint>,
    cache: HashMap<i64, GradedHomTable>,
}

impl HomTables {
    pub fn new(model: &CompleteIntersectionModel) -> Self {
        Self {
            model: model.clone(),
            counter: SectionCounter::new(model.degrees()),
            binomials: binomial_row((model.n() + 1) as usize),
            cache: HashMap::new(),
        }
    }

    pub fn model(&self) -> &CompleteIntersectionModel {
        &self.model
    }

    /// The full bigraded table of Hom^t(𝒪(a), 𝒪(b)) in MF(Y₋, W).
    pub fn table(&mut self, a: i64, b: i64) -> &GradedHomTable {
        let m = b - a;
        if !self.cache.contains_key(&m) {
            let table = self.compute(m);
            self.cache.insert(m, table);
        }
        &self.cache[&m]
    }

    /// (e₋, e₊) of Hom^•(𝒪(a), 𝒪(b)) without cloning the table.
    pub fn e_extremes(&mut self, a: i64, b: i64) -> Option<(i64, i64)> {
        self.table(a, b).e_extremes()
    }

    fn compute(&mut self, m: i64) -> GradedHomTable {
        let k = self.model.codim();
        let mut table = GradedHomTable::new();
        for (i, multiplicity) in self.binomials.iter().enumerate() {
            let i = i as i64;
            let twist = m - i;
            for (r, count) in self.counter.h0(twist).iter() {
                table.add(r + i, count * multiplicity);
            }
            if k >= 2 {
                for (r, count) in self.counter.htop(twist).iter() {
                    table.add(r + i + (k - 1), count * multiplicity);
                }
            }
        }
        table
    }
}

/// One-shot [`HomTables::table`]; build a [`HomTables`] instead when
/// computing many tables for the same model.
pub fn hom_table(model: &CompleteIntersectionModel, a: i64, b: i64) -> GradedHomTable {
    HomTables::new(model).table(a, b).clone()
}
