//! Exact rational linear algebra and LP feasibility.
//!
//! All predicates in the crate reduce to [`solve_feasibility`], which either
//! returns a point satisfying the system or a Farkas certificate proving that
//! none exists. Both outcomes can be checked by substitution.

mod linalg;
mod simplex;

pub use linalg::{affine_rank, kernel_basis, kernel_of_rows, rank, rank_of_rows, Matrix};
pub use simplex::{solve_feasibility, FarkasCertificate, Feasibility, LinearSystem};

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Evidence for or against `0` lying in the interior of a convex hull.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum InteriorCertificate {
    /// Weights `lambda_j >= 1` with `sum lambda_j v_j = 0`, and the vectors span.
    Interior {
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        lambda: Vec<Rational>,
    },
    /// A nonzero `u` with `<u, v_j> >= 0` for every vector.
    NotInterior {
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        direction: Vec<Rational>,
    },
}

impl InteriorCertificate {
    pub fn is_interior(&self) -> bool {
        matches!(self, InteriorCertificate::Interior { .. })
    }

    /// Re-check the certificate against `vectors` by substitution (plus a rank
    /// computation for the spanning part of an interior claim).
    pub fn certifies(&self, vectors: &[Vec<Rational>], dim: usize) -> bool {
        match self {
            InteriorCertificate::Interior { lambda } => {
                lambda.len() == vectors.len()
                    && lambda.iter().all(|l| *l >= Rational::one())
                    && (0..dim).all(|i| {
                        vectors
                            .iter()
                            .zip(lambda)
                            .fold(Rational::zero(), |acc, (v, l)| acc + l * &v[i])
                            .is_zero()
                    })
                    && rank_of_rows(vectors, dim) == dim
            }
            InteriorCertificate::NotInterior { direction } => {
                direction.len() == dim
                    && direction.iter().any(|x| !x.is_zero())
                    && vectors.iter().all(|v| !dot(direction, v).is_negative())
            }
        }
    }
}

fn positive_combination(vectors: &[Vec<Rational>], dim: usize) -> Feasibility {
    let mut sys = LinearSystem::new(vectors.len());
    for i in 0..dim {
        let row = vectors.iter().map(|v| v[i].clone()).collect();
        sys.add_equality(row, Rational::zero());
    }
    for j in 0..vectors.len() {
        let mut row = alloc::vec![Rational::zero(); vectors.len()];
        row[j] = Rational::one();
        sys.add_inequality(row, Rational::one());
    }
    solve_feasibility(&sys)
}

/// Decide whether `0` is in the interior of `conv(vectors)` inside `R^dim`,
/// i.e. whether the vectors positively span `R^dim`.
pub fn interior_certificate(vectors: &[Vec<Rational>], dim: usize) -> InteriorCertificate {
    debug_assert!(vectors.iter().all(|v| v.len() == dim));
    if rank_of_rows(vectors, dim) < dim {
        // some nonzero u is orthogonal to every vector
        let direction = if vectors.is_empty() {
            let mut u = alloc::vec![Rational::zero(); dim];
            u[0] = Rational::one();
            u
        } else {
            kernel_of_rows(vectors, dim).swap_remove(0)
        };
        return InteriorCertificate::NotInterior { direction };
    }
    match positive_combination(vectors, dim) {
        Feasibility::Feasible(lambda) => InteriorCertificate::Interior { lambda },
        Feasibility::Infeasible(cert) => {
            // y^T V <= 0 with some entry < 0; u = -y.
            let direction = cert.equalities.iter().map(|y| -y).collect();
            InteriorCertificate::NotInterior { direction }
        }
    }
}

/// `0` in the interior of `conv(vectors)` in `R^dim`.
pub fn zero_in_interior(vectors: &[Vec<Rational>], dim: usize) -> bool {
    interior_certificate(vectors, dim).is_interior()
}

/// `0` in the relative interior of `conv(vectors)`: the positive-combination
/// test without the spanning requirement.
pub fn zero_in_relative_interior(vectors: &[Vec<Rational>], dim: usize) -> bool {
    matches!(positive_combination(vectors, dim), Feasibility::Feasible(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn interior_examples() {
        let square = [v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])];
        let c = interior_certificate(&square, 2);
        assert!(c.is_interior());
        assert!(c.certifies(&square, 2));

        let segment = [v(&[1, 0]), v(&[-1, 0])];
        assert!(!zero_in_interior(&segment, 2));
        assert!(zero_in_relative_interior(&segment, 2));
        let c = interior_certificate(&segment, 2);
        assert!(c.certifies(&segment, 2));

        let corner = [v(&[1, 0]), v(&[0, 1])];
        let c = interior_certificate(&corner, 2);
        assert!(!c.is_interior());
        assert!(c.certifies(&corner, 2));
        assert!(!zero_in_relative_interior(&corner, 2));
    }

    #[test]
    fn degenerate_dimensions() {
        // positive span of R^0
        assert!(zero_in_interior(&[vec![], vec![]], 0));
        assert!(zero_in_interior(&[], 0));
        assert!(!zero_in_interior(&[], 2));
        let c = interior_certificate(&[], 2);
        assert!(c.certifies(&[], 2));
    }
}
