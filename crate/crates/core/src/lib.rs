//! Exact-arithmetic invariants of residual categories of Fano complete
//! intersections, computed on the hybrid-model side.
//!
//! A smooth complete intersection X ⊂ Pⁿ of multidegree (d₁, …, d_k) with
//! d = Σdᵢ ≤ n has a residual component inside D^b(X), the orthogonal of
//! the exceptional collection 𝒪, …, 𝒪(n−d). That component is equivalent
//! to a category of matrix factorizations MF(Y₋, W), where Y₋ is the total
//! space of 𝒪(−1)^{n+1} over the weighted projective stack P(d₁, …, d_k)
//! and the homological shift is the R-charge grading. On that model every
//! quantity this crate computes is lattice or counting arithmetic:
//!
//! * [`model`]: validation of (n; d₁, …, d_k) and the derived invariants
//!   (dimension, index, d_max, d_min, …);
//! * [`hilbert`]: R-charge-graded section and local-cohomology counts of
//!   line bundles on P(d₁, …, d_k);
//! * [`ext`]: bigraded Hom tables between line bundles in MF(Y₋, W),
//!   assembled from the differential-free Koszul decomposition;
//! * [`lattice`]: the ℤ²-lattice of twist/shift autoequivalences, covering
//!   the Serre functor, canonical bundle, spherical twist/cotwist, power
//!   identities, and fractional Calabi–Yau periods;
//! * [`serredim`]: Serre-functor orbits of the split generator and
//!   upper/lower Serre dimension estimates with exact closed forms;
//! * [`oracle`]: deliberately naive brute-force reimplementations used by
//!   the test suites;
//! * [`selfcheck`]: the invariant battery behind the CLI `check` command.
//!
//! All counts are arbitrary-precision integers and all dimension estimates
//! are exact rationals; nothing in this crate rounds.

pub mod ext;
pub mod hilbert;
pub mod lattice;
pub mod model;
pub mod oracle;
pub mod selfcheck;
pub mod serredim;

pub use ext::{e_extremes, hom_table, koszul_pieces, GradedHomTable, HomTables, KoszulPiece};
pub use hilbert::{extremal_rcharge, h0_graded, htop_graded, GradedCount, SectionCounter};
pub use lattice::{
    canonical_bundle, fractional_cy, power_identity_report, serre_functor, twist_cotwist,
    LatticeError, LatticeFunctor, PowerIdentityReport, Side,
};
pub use model::{reduce_linear, CompleteIntersectionModel, ModelError};
pub use serredim::{
    generator_twists, orbit_point, sdim_closed_form, sdim_estimates, SdimReport, SerreOrbitPoint,
    SerredimError,
};
