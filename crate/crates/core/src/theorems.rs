//! Closed forms for the convexity dimension of complete uniform hypergraphs
//! and the Gale-dual characterisation of i-preserving configurations.

use alloc::vec::Vec;

use crate::embedding::PointConfiguration;
use crate::gale::{self, GaleTransform, Kind, NeighborlinessCertificate};
use crate::{Error, Result};

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(alloc::format!("need 1 <= k <= n-1, got n={n}, k={k}")));
    }
    Ok(())
}

fn band(n: usize, lo: i64, hi: i64) -> Vec<usize> {
    (1..n as i64).filter(|&x| x <= hi || x >= lo).map(|x| x as usize).collect()
}

/// `A_{n,i} = {1..i+1} ∪ {n-i-1..n-1}`, intersected with `1..n-1`.
pub fn exceptional_set_a(n: usize, i: usize) -> Vec<usize> {
    band(n, n as i64 - i as i64 - 1, i as i64 + 1)
}

/// `C_{n,i} = {1..i+2} ∪ {n-i-2..n-1}`, intersected with `1..n-1`.
pub fn exceptional_set_c(n: usize, i: usize) -> Vec<usize> {
    band(n, n as i64 - i as i64 - 2, i as i64 + 2)
}

/// Smallest `d` such that `K_n^(k)` has a convex embedding in `R^d`.
pub fn cd_complete(n: usize, k: usize) -> Result<usize> {
    check_nk(n, k)?;
    if n == 2 {
        return Ok(1);
    }
    if k == 1 || k == n - 1 {
        return Ok(2);
    }
    Ok(if n >= 2 * k + 2 {
        2 * k
    } else if n + 2 <= 2 * k {
        2 * n - 2 * k
    } else {
        n - 2
    })
}

fn skeleton_formula(n: usize, k: usize, i: usize, exceptional: Vec<usize>) -> Result<usize> {
    check_nk(n, k)?;
    if i >= n {
        return Err(Error::InvalidArgument(alloc::format!("need i <= n-1, got n={n}, i={i}")));
    }
    let (n_, k_, i_) = (n as i64, k as i64, i as i64);
    Ok(if n_ >= 2 * k_ + 2 * i_ + 2 {
        2 * k + 2 * i
    } else if n_ <= 2 * k_ - 2 * i_ - 2 {
        2 * n - 2 * k + 2 * i
    } else if exceptional.contains(&k) {
        n - 1
    } else {
        n - 2
    })
}

/// Smallest `d` admitting a projection of `Δ(n,k)` to `R^d` that preserves
/// the `i`-skeleton.
pub fn d_skeleton(n: usize, k: usize, i: usize) -> Result<usize> {
    skeleton_formula(n, k, i, exceptional_set_a(n, i))
}

/// Like [`d_skeleton`] but with every `i`-face strictly preserved and its
/// preimage equal to itself.
pub fn d_strong(n: usize, k: usize, i: usize) -> Result<usize> {
    skeleton_formula(n, k, i, exceptional_set_c(n, i))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Clause {
    /// The configuration is `(k+i)`-neighborly.
    Neighborly,
    /// Dimension `n-2` and not `(k-i-1)`-almost neighborly.
    NotAlmostNeighborly,
    /// `n = d+1`: the projection is an affine isomorphism.
    Isomorphism,
    NotPreserving,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Characterization {
    /// `k` after replacing it by `n-k` when `k > n/2`.
    pub k: usize,
    pub i: usize,
    /// The first clause that holds, in the order Neighborly, NotAlmostNeighborly, Isomorphism.
    pub clause: Clause,
    /// Every clause that holds (or `[NotPreserving]`).
    pub clauses: Vec<Clause>,
    /// The neighborliness checks that were run, on the Gale side.
    pub evidence: Vec<NeighborlinessCertificate>,
}

impl Characterization {
    pub fn preserving(&self) -> bool {
        self.clause != Clause::NotPreserving
    }

    /// Re-check the evidence against `s` and its Gale transform `g`, and that
    /// the clauses follow from it.
    pub fn certifies(&self, s: &PointConfiguration, g: &GaleTransform) -> bool {
        let (n, k, i) = (s.len(), self.k, self.i);
        if k == 0 || 2 * k > n || !g.certifies(s) {
            return false;
        }
        let mut expected = Vec::new();
        let mut evidence = self.evidence.iter();
        let neighborly = evidence.next();
        match neighborly {
            Some(c) if c.kind == Kind::Neighborly && c.level == k + i && c.certifies(s, Some(g)) => {
                if c.holds {
                    expected.push(Clause::Neighborly);
                }
            }
            _ => return false,
        }
        if s.dim() + 2 == n && k > i {
            match evidence.next() {
                Some(c) if c.kind == Kind::AlmostNeighborly && c.level == k - i - 1 && c.certifies(s, Some(g)) => {
                    if !c.holds {
                        expected.push(Clause::NotAlmostNeighborly);
                    }
                }
                _ => return false,
            }
        }
        if s.dim() + 1 == n {
            expected.push(Clause::Isomorphism);
        }
        if expected.is_empty() {
            expected.push(Clause::NotPreserving);
        }
        evidence.next().is_none() && self.clauses == expected && self.clause == expected[0]
    }
}

/// Decide whether the projection given by `s` preserves the `i`-skeleton of
/// `Δ(n,k)` using only the Gale transform of `s`.
pub fn characterize(s: &PointConfiguration, k: usize, i: usize) -> Result<Characterization> {
    let n = s.len();
    check_nk(n, k)?;
    if i >= n {
        return Err(Error::InvalidArgument(alloc::format!("need i <= n-1, got n={n}, i={i}")));
    }
    let g = gale::transform(s)?;
    let k = if 2 * k > n { n - k } else { k };
    let mut clauses = Vec::new();
    let mut evidence = Vec::new();

    let neighborly = gale::is_j_neighborly_dual(&g, k + i);
    if neighborly.holds {
        clauses.push(Clause::Neighborly);
    }
    evidence.push(neighborly);
    if s.dim() + 2 == n && k > i {
        let almost = gale::is_j_almost_neighborly_dual(&g, k - i - 1);
        if !almost.holds {
            clauses.push(Clause::NotAlmostNeighborly);
        }
        evidence.push(almost);
    }
    if s.dim() + 1 == n {
        clauses.push(Clause::Isomorphism);
    }
    if clauses.is_empty() {
        clauses.push(Clause::NotPreserving);
    }
    Ok(Characterization { k, i, clause: clauses[0], clauses, evidence })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_sets() {
        assert_eq!(exceptional_set_a(10, 1), [1, 2, 8, 9]);
        assert_eq!(exceptional_set_a(4, 1), [1, 2, 3]);
        assert_eq!(exceptional_set_c(8, 1), [1, 2, 3, 5, 6, 7]);
        assert_eq!(exceptional_set_a(2, 0), [1]);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(cd_complete(4, 2), Ok(2));
        assert_eq!(cd_complete(10, 3), Ok(6));
        assert_eq!(cd_complete(2, 1), Ok(1));
        assert_eq!(cd_complete(7, 6), Ok(2));
        assert_eq!(d_skeleton(3, 1, 2), Ok(2));
        assert_eq!(d_skeleton(8, 7, 2), Ok(6));
        assert_eq!(d_strong(5, 2, 0), Ok(4));
        assert_eq!(d_strong(8, 3, 1), Ok(7));
        assert!(cd_complete(4, 4).is_err());
        assert!(d_skeleton(4, 2, 4).is_err());
    }

    #[test]
    fn vertex_skeleton_is_convexity_dimension() {
        for n in 2..30 {
            for k in 1..n {
                assert_eq!(d_skeleton(n, k, 0), cd_complete(n, k), "n={n} k={k}");
            }
        }
    }
}
