use std::collections::BTreeMap;

use convexdim_core::embedding::flat_separation;
use convexdim_core::exactlp::{affine_rank, int, Rational};
use convexdim_core::hypersimplex::{FacetNormals, Hypersimplex};
use convexdim_core::{binomial, combinations};
use num_bigint::BigUint;
use num_traits::Zero;

/// Faces of `Δ(n,k)` found as vertex subsets cut out by a supporting
/// hyperplane, counted by dimension.
fn faces_by_lp(n: usize, k: usize) -> BTreeMap<usize, usize> {
    let h = Hypersimplex::new(n, k).unwrap();
    let verts: Vec<Vec<Rational>> = h
        .vertices()
        .into_iter()
        .map(|v| v.into_iter().map(|x| int(x as i64)).collect())
        .collect();
    let m = verts.len();
    let mut counts = BTreeMap::new();
    for mask in 1usize..1 << m {
        let inside: Vec<&[Rational]> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| verts[i].as_slice()).collect();
        let outside: Vec<&[Rational]> = (0..m).filter(|i| mask >> i & 1 == 0).map(|i| verts[i].as_slice()).collect();
        if flat_separation(&inside, &outside).is_separated() {
            *counts.entry(affine_rank(&inside) - 1).or_insert(0) += 1;
        }
    }
    counts
}

#[test]
fn face_counts_agree_with_lp_enumeration() {
    for (n, k) in [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)] {
        let h = Hypersimplex::new(n, k).unwrap();
        let by_lp = faces_by_lp(n, k);
        for i in 0..n {
            assert_eq!(h.i_faces(i).len(), by_lp.get(&i).copied().unwrap_or(0), "n={n} k={k} i={i}");
        }
    }
}

#[test]
fn vertex_count_and_symmetry() {
    for n in 2..9 {
        for k in 1..n {
            let h = Hypersimplex::new(n, k).unwrap();
            assert_eq!(BigUint::from(h.vertices().len()), binomial(n, k));
            let g = Hypersimplex::new(n, n - k).unwrap();
            for i in 0..n {
                assert_eq!(h.i_faces(i).len(), g.i_faces(i).len());
            }
        }
    }
}

#[test]
fn every_face_has_the_right_vertices() {
    for (n, k) in [(5, 2), (6, 3), (6, 2)] {
        let h = Hypersimplex::new(n, k).unwrap();
        for f in h.faces() {
            let vs = h.face_vertices(&f);
            assert!(!vs.is_empty());
            if f.is_vertex() {
                assert_eq!(vs, std::slice::from_ref(&f.ones));
            }
            let free = n - f.ones.len() - f.zeros.len();
            assert_eq!(vs.len(), combinations(free, k - f.ones.len()).len());
        }
    }
}

#[test]
fn facet_normal_identities() {
    for n in 4..9 {
        for k in 2..n - 1 {
            let FacetNormals::Hypersimplex(pairs) = Hypersimplex::new(n, k).unwrap().facet_normals() else {
                panic!("n={n} k={k}")
            };
            assert_eq!(pairs.len(), n);
            let mut total = vec![Rational::zero(); n];
            for p in &pairs {
                for (t, (u, l)) in total.iter_mut().zip(p.upper.iter().zip(&p.lower)) {
                    assert_eq!(*u, -l.clone());
                    *t += u;
                }
                assert!(p.upper.iter().fold(Rational::zero(), |a, x| a + x).is_zero());
            }
            assert!(total.iter().all(Zero::is_zero));
        }
    }
}
