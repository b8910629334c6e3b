//! The hypersimplex `Δ(n,k) = conv{x ∈ {0,1}^n : Σx = k}` and its faces.
//!
//! A face is written `(I, J)`: coordinates in `I` are pinned to 1 and those
//! in `J` to 0. Indices are 0-based throughout.

use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::exactlp::{frac, Rational};
use crate::subsets::{combinations, complement};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypersimplex {
    n: usize,
    k: usize,
}

/// A face `Δ^{I,J}` in canonical form.
///
/// Vertex faces have `|I| = k` and `J` the complement of `I`. Every other
/// face has `|I| <= k-1` and `|J| <= n-k-1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HypersimplexFace {
    pub ones: Vec<usize>,
    pub zeros: Vec<usize>,
    vertex: bool,
    dim: usize,
}

impl HypersimplexFace {
    pub fn is_vertex(&self) -> bool {
        self.vertex
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Outer normals `n_j = e_j - 1/n` (of `x_j <= 1`) and `m_j = -n_j` (of `x_j >= 0`),
/// written in the hyperplane `1^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetNormalPair {
    pub index: usize,
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetNormals {
    /// `2 <= k <= n-2`: one facet for each bound on each coordinate.
    Hypersimplex(Vec<FacetNormalPair>),
    /// `k = 1` or `k = n-1`: the polytope is a simplex with `n` facets.
    Simplex(Vec<Vec<Rational>>),
}

impl Hypersimplex {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidArgument(alloc::format!(
                "hypersimplex needs 1 <= k <= n-1, got n={n}, k={k}"
            )));
        }
        Ok(Hypersimplex { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// True for `k = 1` and `k = n-1`, where the hypersimplex is a simplex.
    pub fn is_simplex(&self) -> bool {
        self.k == 1 || self.k == self.n - 1
    }

    /// Vertices as `k`-subsets in lexicographic order.
    pub fn vertex_subsets(&self) -> Vec<Vec<usize>> {
        combinations(self.n, self.k)
    }

    /// Vertices as 0/1 vectors, in the order of [`Self::vertex_subsets`].
    pub fn vertices(&self) -> Vec<Vec<u8>> {
        self.vertex_subsets()
            .into_iter()
            .map(|s| {
                let mut v = alloc::vec![0u8; self.n];
                for i in s {
                    v[i] = 1;
                }
                v
            })
            .collect()
    }

    fn normal(&self, j: usize, sign: i64) -> Vec<Rational> {
        let n = self.n as i64;
        (0..self.n)
            .map(|i| {
                let e = if i == j { Rational::one() } else { Rational::zero() };
                (e - frac(1, n)) * frac(sign, 1)
            })
            .collect()
    }

    pub fn facet_normals(&self) -> FacetNormals {
        if self.is_simplex() {
            // k = 1: facets x_j >= 0; k = n-1: facets x_j <= 1
            let sign = if self.k == 1 { -1 } else { 1 };
            return FacetNormals::Simplex((0..self.n).map(|j| self.normal(j, sign)).collect());
        }
        FacetNormals::Hypersimplex(
            (0..self.n)
                .map(|j| FacetNormalPair {
                    index: j,
                    upper: self.normal(j, 1),
                    lower: self.normal(j, -1),
                })
                .collect(),
        )
    }

    /// Canonicalise `(I, J)`. Overlapping or out-of-range index sets and sets
    /// larger than `k` (resp. `n-k`) are rejected. If `|I| = k` or
    /// `|J| = n-k` the face is the corresponding vertex.
    pub fn face(&self, ones: &[usize], zeros: &[usize]) -> Result<HypersimplexFace> {
        let mut ones = ones.to_vec();
        let mut zeros = zeros.to_vec();
        ones.sort_unstable();
        ones.dedup();
        zeros.sort_unstable();
        zeros.dedup();
        let bad = |msg: &str| Err(Error::InvalidArgument(alloc::format!("invalid face: {msg}")));
        if ones.iter().chain(&zeros).any(|&x| x >= self.n) {
            return bad("index out of range");
        }
        if ones.iter().any(|x| zeros.binary_search(x).is_ok()) {
            return bad("I and J overlap");
        }
        if ones.len() > self.k || zeros.len() > self.n - self.k {
            return bad("too many pinned coordinates");
        }
        if ones.len() == self.k {
            zeros = complement(self.n, &ones);
        } else if zeros.len() == self.n - self.k {
            ones = complement(self.n, &zeros);
        } else {
            let dim = self.n - 1 - ones.len() - zeros.len();
            return Ok(HypersimplexFace { ones, zeros, vertex: false, dim });
        }
        Ok(HypersimplexFace { ones, zeros, vertex: true, dim: 0 })
    }

    /// All faces of dimension `i`, ordered by `(I, J)` lexicographically.
    pub fn i_faces(&self, i: usize) -> Vec<HypersimplexFace> {
        let (n, k) = (self.n, self.k);
        if i == 0 {
            return self
                .vertex_subsets()
                .into_iter()
                .map(|ones| HypersimplexFace {
                    zeros: complement(n, &ones),
                    ones,
                    vertex: true,
                    dim: 0,
                })
                .collect();
        }
        if i > n - 1 {
            return Vec::new();
        }
        let pinned = n - 1 - i;
        let mut out = Vec::new();
        for a in 0..=pinned.min(k - 1) {
            let b = pinned - a;
            if b > n - k - 1 {
                continue;
            }
            for ones in combinations(n, a) {
                let rest = complement(n, &ones);
                for pick in combinations(rest.len(), b) {
                    let zeros = pick.iter().map(|&p| rest[p]).collect();
                    out.push(HypersimplexFace { ones: ones.clone(), zeros, vertex: false, dim: i });
                }
            }
        }
        out.sort();
        out
    }

    /// Every face, by dimension.
    pub fn faces(&self) -> Vec<HypersimplexFace> {
        (0..self.n).flat_map(|i| self.i_faces(i)).collect()
    }

    /// Vertex subsets lying on the face, in lexicographic order.
    pub fn face_vertices(&self, face: &HypersimplexFace) -> Vec<Vec<usize>> {
        self.vertex_subsets()
            .into_iter()
            .filter(|s| {
                face.ones.iter().all(|x| s.binary_search(x).is_ok())
                    && face.zeros.iter().all(|x| s.binary_search(x).is_err())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;

    #[test]
    fn vertices_of_delta_4_2() {
        let h = Hypersimplex::new(4, 2).unwrap();
        let v = h.vertices();
        let expect: [[u8; 4]; 6] =
            [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]];
        assert_eq!(v, expect);
        assert_eq!(Hypersimplex::new(5, 1).unwrap().vertices().len(), 5);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Hypersimplex::new(4, 0).is_err());
        assert!(Hypersimplex::new(4, 4).is_err());
    }

    #[test]
    fn edge_counts() {
        assert_eq!(Hypersimplex::new(4, 2).unwrap().i_faces(1).len(), 12);
        assert_eq!(Hypersimplex::new(5, 2).unwrap().i_faces(1).len(), 30);
        // simplex regime: C(n, i+1) faces
        let h = Hypersimplex::new(6, 1).unwrap();
        for i in 0..6 {
            assert_eq!(binomial(6, i + 1), h.i_faces(i).len().into());
        }
    }

    #[test]
    fn facet_normals_sum_to_zero() {
        let h = Hypersimplex::new(4, 2).unwrap();
        let FacetNormals::Hypersimplex(pairs) = h.facet_normals() else { panic!() };
        assert_eq!(pairs[0].upper, [frac(3, 4), frac(-1, 4), frac(-1, 4), frac(-1, 4)]);
        for p in &pairs {
            let s = p.upper.iter().fold(Rational::zero(), |a, x| a + x);
            assert!(s.is_zero());
            for (u, l) in p.upper.iter().zip(&p.lower) {
                assert_eq!(*u, -l.clone());
            }
        }
        assert!(matches!(Hypersimplex::new(4, 1).unwrap().facet_normals(), FacetNormals::Simplex(v) if v.len() == 4));
    }

    #[test]
    fn face_vertices_examples() {
        let h = Hypersimplex::new(4, 2).unwrap();
        let f = h.face(&[0], &[2]).unwrap();
        assert_eq!(f.dim(), 1);
        assert_eq!(h.face_vertices(&f), [[0, 1], [0, 3]]);
        let v = h.face(&[1, 3], &[]).unwrap();
        assert!(v.is_vertex());
        assert_eq!(h.face_vertices(&v), [[1, 3]]);
        assert!(h.face(&[0], &[0]).is_err());
        assert!(h.face(&[0, 1, 2], &[]).is_err());
    }

    #[test]
    fn face_dimensions_match_vertex_spans() {
        for (n, k) in [(4, 2), (5, 2), (5, 3), (6, 3)] {
            let h = Hypersimplex::new(n, k).unwrap();
            for f in h.faces() {
                let verts = h.face_vertices(&f);
                let pts: Vec<Vec<Rational>> = verts
                    .iter()
                    .map(|s| (0..n).map(|i| frac(s.contains(&i) as i64, 1)).collect())
                    .collect();
                let refs: Vec<&[Rational]> = pts.iter().map(|p| p.as_slice()).collect();
                assert_eq!(crate::exactlp::affine_rank(&refs), f.dim() + 1, "{f:?}");
            }
        }
    }
}
