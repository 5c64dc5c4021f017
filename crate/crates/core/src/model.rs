//! The input datum (n; d₁, …, d_k) and its derived numerical invariants.
//!
//! Everything downstream is a pure function of a validated
//! [`CompleteIntersectionModel`]: the complete intersection X ⊂ Pⁿ of
//! multidegree (d₁, …, d_k) enters only through n, the degrees, and the
//! quantities derived from them.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("no degrees given: a complete intersection needs k ≥ 1 hypersurfaces")]
    EmptyDegrees,
    #[error("ambient projective space P^{n} is too small (need n ≥ 2)")]
    AmbientTooSmall { n: i64 },
    #[error("degree {degree} < 2: eliminate linear equations with reduce_linear first")]
    DegreeBelowTwo { degree: i64 },
    #[error("not Fano: total degree {d_total} exceeds n = {n}")]
    NotFano { d_total: i64, n: i64 },
    #[error("all degrees equal 1: X is a linear subspace and has no residual category")]
    AllLinear,
}

/// A Fano complete intersection X ⊂ Pⁿ of multidegree (d₁, …, d_k),
/// recorded with degrees sorted ascending.
///
/// Invariants guaranteed by [`CompleteIntersectionModel::validate`]:
/// k ≥ 1, n ≥ 2, every dᵢ ≥ 2, and Σdᵢ ≤ n. The boundary case Σdᵢ = n
/// (index 1) is accepted; Σdᵢ = n + 1 (Calabi–Yau, index 0) is rejected
/// because every downstream formula divides by or takes a gcd with the
/// index. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteIntersectionModel {
    n: i64,
    degrees: Vec<i64>,
}

impl CompleteIntersectionModel {
    /// Validates raw input and returns the canonical model (degrees sorted
    /// ascending), or the first violated constraint.
    pub fn validate(n: i64, degrees: Vec<i64>) -> Result<Self, ModelError> {
        if degrees.is_empty() {
            return Err(ModelError::EmptyDegrees);
        }
        if n < 2 {
            return Err(ModelError::AmbientTooSmall { n });
        }
        if let Some(&degree) = degrees.iter().find(|&&d| d < 2) {
            return Err(ModelError::DegreeBelowTwo { degree });
        }
        let d_total: i64 = degrees.iter().sum();
        if d_total > n {
            return Err(ModelError::NotFano { d_total, n });
        }
        let mut degrees = degrees;
        degrees.sort_unstable();
        Ok(Self { n, degrees })
    }

    /// Dimension of the ambient projective space Pⁿ.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The multidegree, sorted ascending.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Total degree d = Σdᵢ.
    pub fn d_total(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Codimension k of X in Pⁿ.
    pub fn codim(&self) -> i64 {
        self.degrees.len() as i64
    }

    /// dim X = n − k.
    pub fn dim_x(&self) -> i64 {
        self.n - self.codim()
    }

    /// Fano index ind X = n + 1 − d.
    pub fn index(&self) -> i64 {
        self.n + 1 - self.d_total()
    }

    /// Dimension of the hybrid-model space Y₋ (rank n+1 bundle over the
    /// (k−1)-dimensional weighted projective stack).
    pub fn dim_y_minus(&self) -> i64 {
        self.n + self.codim()
    }

    pub fn d_max(&self) -> i64 {
        *self.degrees.last().expect("degrees nonempty")
    }

    pub fn d_min(&self) -> i64 {
        *self.degrees.first().expect("degrees nonempty")
    }
}

/// Eliminates degree-1 equations: each linear dᵢ = 1 cuts Pⁿ down to Pⁿ⁻¹
/// without changing the complete intersection, so the pair
/// (n − #{dᵢ = 1}, remaining degrees) describes the same X.
///
/// Errors with [`ModelError::AllLinear`] when every degree is 1 (then X is
/// a linear subspace). An empty degree list passes through unchanged for
/// [`CompleteIntersectionModel::validate`] to report. Idempotent.
pub fn reduce_linear(n: i64, degrees: Vec<i64>) -> Result<(i64, Vec<i64>), ModelError> {
    if !degrees.is_empty() && degrees.iter().all(|&d| d == 1) {
        return Err(ModelError::AllLinear);
    }
    let removed = degrees.iter().filter(|&&d| d == 1).count() as i64;
    let kept: Vec<i64> = degrees.into_iter().filter(|&d| d != 1).collect();
    Ok((n - removed, kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_quintic_threefold_type() {
        let m = CompleteIntersectionModel::validate(5, vec![2, 3]).unwrap();
        assert_eq!(m.d_total(), 5);
        assert_eq!(m.codim(), 2);
        assert_eq!(m.dim_x(), 3);
        assert_eq!(m.index(), 1);
        assert_eq!(m.dim_y_minus(), 7);
        assert_eq!(m.d_max(), 3);
        assert_eq!(m.d_min(), 2);
    }

    #[test]
    fn validate_rejects_non_fano() {
        assert_eq!(
            CompleteIntersectionModel::validate(5, vec![3, 3]),
            Err(ModelError::NotFano { d_total: 6, n: 5 })
        );
        // Calabi–Yau boundary d = n + 1 is rejected, index-1 boundary d = n is kept.
        assert!(matches!(
            CompleteIntersectionModel::validate(4, vec![5]),
            Err(ModelError::NotFano { .. })
        ));
        assert!(CompleteIntersectionModel::validate(4, vec![4]).is_ok());
    }

    #[test]
    fn validate_rejects_linear_degree() {
        assert_eq!(
            CompleteIntersectionModel::validate(4, vec![1, 3]),
            Err(ModelError::DegreeBelowTwo { degree: 1 })
        );
    }

    #[test]
    fn validate_rejects_empty_and_small_ambient() {
        assert_eq!(
            CompleteIntersectionModel::validate(7, vec![]),
            Err(ModelError::EmptyDegrees)
        );
        assert_eq!(
            CompleteIntersectionModel::validate(1, vec![2]),
            Err(ModelError::AmbientTooSmall { n: 1 })
        );
    }

    #[test]
    fn degrees_are_canonically_sorted() {
        let m = CompleteIntersectionModel::validate(10, vec![4, 2, 3]).unwrap();
        assert_eq!(m.degrees(), &[2, 3, 4]);
        let m2 = CompleteIntersectionModel::validate(10, vec![3, 4, 2]).unwrap();
        assert_eq!(m, m2);
    }

    #[test]
    fn reduce_linear_drops_linear_equations() {
        assert_eq!(reduce_linear(5, vec![1, 2, 3]).unwrap(), (4, vec![2, 3]));
        assert_eq!(reduce_linear(5, vec![2, 3]).unwrap(), (5, vec![2, 3]));
        assert_eq!(reduce_linear(4, vec![1, 1, 1]), Err(ModelError::AllLinear));
    }

    #[test]
    fn reduce_linear_is_idempotent() {
        let once = reduce_linear(9, vec![1, 2, 1, 4]).unwrap();
        let twice = reduce_linear(once.0, once.1.clone()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn arithmetic_identities() {
        for (n, degrees) in [(5, vec![2, 3]), (9, vec![3, 4]), (10, vec![2, 3, 4])] {
            let m = CompleteIntersectionModel::validate(n, degrees).unwrap();
            assert_eq!(m.index() + m.d_total(), m.n() + 1);
            assert_eq!(m.dim_x() + m.codim(), m.n());
        }
    }
}
