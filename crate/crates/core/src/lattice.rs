//! The ℤ² lattice of twist/shift autoequivalences of MF(Y₋, W).
//!
//! Every autoequivalence considered here is of the form ⊗𝒪(a)[b] (square
//! brackets are the R-charge, which is the homological shift), so
//! composition is componentwise addition and functor identities become
//! integer lattice equalities: the Serre functor, the equivariant canonical
//! bundle, the spherical twist/cotwist of the divisor Z₋ ⊂ Y₋, their power
//! identities, and the fractional Calabi–Yau period in the hypersurface
//! case where 𝒪(d)[2] ≅ 𝒪 collapses the lattice.

use crate::model::CompleteIntersectionModel;
use num_integer::Integer;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("hypersurface (k = 1): no previous slice, so no spherical twist data")]
    HypersurfaceCase,
    #[error("not a hypersurface (k ≥ 2): the twist lattice is free, no fractional CY structure")]
    NotHypersurface,
}

/// The endofunctor ⊗𝒪(twist)\[shift\] as a lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LatticeFunctor {
    /// Twist a of 𝒪(a).
    pub twist: i64,
    /// Shift b of \[b\], i.e. the R-charge weight.
    pub shift: i64,
}

impl LatticeFunctor {
    pub const IDENTITY: Self = Self { twist: 0, shift: 0 };

    pub fn new(twist: i64, shift: i64) -> Self {
        Self { twist, shift }
    }

    /// A pure shift \[b\].
    pub fn shift_by(shift: i64) -> Self {
        Self { twist: 0, shift }
    }

    /// Composition 𝒪(a)\[b\] ∘ 𝒪(a′)\[b′\] = 𝒪(a+a′)\[b+b′\].
    pub fn compose(self, other: Self) -> Self {
        self + other
    }

    /// Integer power of the functor; negative exponents invert.
    pub fn power(self, exponent: i64) -> Self {
        self * exponent
    }
}

impl Add for LatticeFunctor {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.twist + rhs.twist, self.shift + rhs.shift)
    }
}

impl AddAssign for LatticeFunctor {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for LatticeFunctor {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LatticeFunctor {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.twist, -self.shift)
    }
}

impl Mul<i64> for LatticeFunctor {
    type Output = Self;
    fn mul(self, scalar: i64) -> Self {
        Self::new(self.twist * scalar, self.shift * scalar)
    }
}

impl fmt::Display for LatticeFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({})[{}]", self.twist, self.shift)
    }
}

/// Which side of the orbifold flip a functor acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// MF(Y₋, W), the residual category model.
    Yminus,
    /// MF(Y₊, W) ≅ D^b(X), the ambient side.
    Yplus,
}

/// The Serre functor 𝒪(n+1−d)[n−k] on Y₋, or its ambient counterpart
/// 𝒪(d−n−1)[n−k] on Y₊ (same shift, opposite twist).
pub fn serre_functor(model: &CompleteIntersectionModel, side: Side) -> LatticeFunctor {
    let twist = match side {
        Side::Yminus => model.index(),
        Side::Yplus => -model.index(),
    };
    LatticeFunctor::new(twist, model.dim_x())
}

/// The equivariant canonical bundle ω_{Y₋} = 𝒪(n+1−d)[−2k]; composing with
/// the pure shift [dim Y₋] recovers the Serre functor.
pub fn canonical_bundle(model: &CompleteIntersectionModel) -> LatticeFunctor {
    LatticeFunctor::new(model.index(), -2 * model.codim())
}

/// Spherical twist and cotwist of the divisor inclusion Z₋ ⊂ Y₋ obtained by
/// dropping the degree at `last` from the multidegree: the twist
/// T = ⊗𝒪_{Y₋}(d_k)[2] and the cotwist C = ⊗𝒪_{Z₋}(d_k).
///
/// `last` indexes the canonically sorted degrees; use [`twist_cotwist`] for
/// the default choice (the largest degree).
pub fn twist_cotwist_with_last(
    model: &CompleteIntersectionModel,
    last: usize,
) -> Result<(LatticeFunctor, LatticeFunctor), LatticeError> {
    if model.codim() < 2 {
        return Err(LatticeError::HypersurfaceCase);
    }
    let degrees = model.degrees();
    assert!(last < degrees.len(), "degree position out of range");
    let d_last = degrees[last];
    Ok((
        LatticeFunctor::new(d_last, 2),
        LatticeFunctor::new(d_last, 0),
    ))
}

/// [`twist_cotwist_with_last`] with the canonical slicing order: the last
/// degree is the largest one.
pub fn twist_cotwist(
    model: &CompleteIntersectionModel,
) -> Result<(LatticeFunctor, LatticeFunctor), LatticeError> {
    twist_cotwist_with_last(model, model.degrees().len() - 1)
}

/// Exact verification of the power identities relating Serre functors to
/// the spherical twist/cotwist across one slicing step M ⊃ X:
///
/// ```text
/// S_Z^(d_k/c) = C^(ind M / c) [d_k · dim M / c]
/// S_Y^(d_k/c) = T^(ind X / c) [(d_k · dim X − 2 ind X) / c]
/// ```
///
/// with c = gcd(d_k, ind M) = gcd(d_k, ind X). Both sides are composed as
/// lattice functors and compared for exact equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerIdentityReport {
    /// The degree d_k split off by the slice.
    pub last_degree: i64,
    /// c = gcd(d_k, ind M) = gcd(d_k, ind X).
    pub c: i64,
    /// Common Serre exponent d_k / c.
    pub serre_power: i64,
    /// Twist exponent ind X / c.
    pub twist_power: i64,
    /// Cotwist exponent ind M / c.
    pub cotwist_power: i64,
    /// Extra shift (d_k · dim X − 2 ind X) / c on the twist side.
    pub twist_extra_shift: i64,
    /// Extra shift d_k · dim M / c on the cotwist side.
    pub cotwist_extra_shift: i64,
    pub twist_identity_holds: bool,
    pub cotwist_identity_holds: bool,
}

impl PowerIdentityReport {
    pub fn passes(&self) -> bool {
        self.twist_identity_holds && self.cotwist_identity_holds
    }
}

pub fn power_identity_report_with_last(
    model: &CompleteIntersectionModel,
    last: usize,
) -> Result<PowerIdentityReport, LatticeError> {
    let (twist, cotwist) = twist_cotwist_with_last(model, last)?;
    let d_last = model.degrees()[last];
    let ind_x = model.index();
    let dim_x = model.dim_x();
    // The penultimate slice M has the same ambient space with one degree
    // removed, so ind M = ind X + d_k and dim M = dim X + 1.
    let ind_m = ind_x + d_last;
    let dim_m = dim_x + 1;
    let c = d_last.gcd(&ind_m);
    assert_eq!(c, d_last.gcd(&ind_x), "gcd must agree on both slices");

    let serre_power = d_last / c;
    let twist_power = ind_x / c;
    let cotwist_power = ind_m / c;
    let twist_extra_shift = (d_last * dim_x - 2 * ind_x) / c;
    let cotwist_extra_shift = d_last * dim_m / c;

    let serre_y = serre_functor(model, Side::Yminus);
    let serre_z = LatticeFunctor::new(ind_m, dim_m);
    let twist_identity_holds = serre_y.power(serre_power)
        == twist.power(twist_power) + LatticeFunctor::shift_by(twist_extra_shift);
    let cotwist_identity_holds = serre_z.power(serre_power)
        == cotwist.power(cotwist_power) + LatticeFunctor::shift_by(cotwist_extra_shift);

    Ok(PowerIdentityReport {
        last_degree: d_last,
        c,
        serre_power,
        twist_power,
        cotwist_power,
        twist_extra_shift,
        cotwist_extra_shift,
        twist_identity_holds,
        cotwist_identity_holds,
    })
}

/// [`power_identity_report_with_last`] for the canonical slicing order.
pub fn power_identity_report(
    model: &CompleteIntersectionModel,
) -> Result<PowerIdentityReport, LatticeError> {
    power_identity_report_with_last(model, model.degrees().len() - 1)
}

/// The minimal p ≥ 1 with 𝕊^p ≅ \[q\] in the hypersurface case, where the
/// relation 𝒪(d)[2] ≅ 𝒪 makes the functor lattice ℤ²/(d, 2)ℤ. Returns
/// (p, q) with p = d / gcd(d, n+1−d) and q the induced shift.
///
/// This is the lattice-level period: an upper bound for the categorical
/// period, which could a priori be a proper divisor.
pub fn fractional_cy(model: &CompleteIntersectionModel) -> Result<(i64, i64), LatticeError> {
    if model.codim() != 1 {
        return Err(LatticeError::NotHypersurface);
    }
    let d = model.d_total();
    let index = model.index();
    let serre = serre_functor(model, Side::Yminus);
    // p·(index, n−1) ≡ (0, q) mod (d, 2)ℤ forces p·index = t·d with t minimal.
    let p = d / d.gcd(&index);
    let t = p * index / d;
    let q = p * serre.shift - 2 * t;
    Ok((p, q))
}
