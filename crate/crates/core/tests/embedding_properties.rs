mod common;

use common::configuration;
use convexdim_core::embedding::{
    barycenter, complement_homothety, is_convex_embedding, is_vertex, k_barycenters, skeleton,
    strictly_preserved_direct, Hypergraph, Method, PointConfiguration, PreservationCertificate,
};
use convexdim_core::exactlp::{dot, int, Rational};
use convexdim_core::gale::{is_j_neighborly_primal, transform};
use convexdim_core::hypersimplex::Hypersimplex;
use convexdim_core::oracle::in_convex_hull;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn cross_check_k(s: &PointConfiguration) -> Vec<usize> {
    (2..s.len().saturating_sub(1)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// The direct LP test and the Gale-side interior test agree on every face.
    #[test]
    fn direct_and_gale_agree(s in configuration(4..=6, true), pick in 0usize..4) {
        let ks = cross_check_k(&s);
        prop_assume!(!ks.is_empty());
        let k = ks[pick % ks.len()];
        let i = s.len() - 1;
        let direct = skeleton(&s, k, i, Method::Direct, false).unwrap();
        let gale = skeleton(&s, k, i, Method::Gale, false).unwrap();
        prop_assert_eq!(direct.reports.len(), gale.reports.len());
        for (a, b) in direct.reports.iter().zip(&gale.reports) {
            prop_assert_eq!(&a.face, &b.face);
            prop_assert_eq!(a.strictly_preserved, b.strictly_preserved, "face {:?}", a.face);
            prop_assert!(a.certifies(&s, k, None));
            let g = transform(&s).unwrap();
            prop_assert!(b.certifies(&s, k, Some(&g)));
        }
    }

    /// Vertex certificates agree with an independent hull-membership oracle.
    #[test]
    fn vertex_check_matches_hull_oracle(s in configuration(3..=6, false), k in 1usize..3) {
        prop_assume!(k < s.len());
        let pts: Vec<Vec<Rational>> = k_barycenters(&s, k).unwrap().into_iter().map(|b| b.point).collect();
        for p in 0..pts.len() {
            let sep = is_vertex(&pts, p);
            let others: Vec<&[Rational]> = pts.iter().enumerate().filter(|(q, _)| *q != p).map(|(_, x)| x.as_slice()).collect();
            prop_assert!(sep.certifies(&[pts[p].as_slice()], &others));
            prop_assert_eq!(sep.is_separated(), !in_convex_hull(&pts[p], &others));
        }
    }

    /// k-barycenters are in convex position exactly when (n-k)-barycenters
    /// are, and the homothety between them is exact.
    #[test]
    fn complement_symmetry(s in configuration(3..=7, false), k in 1usize..6) {
        let n = s.len();
        prop_assume!(k < n);
        let h = Hypergraph::complete(n, k);
        let report = is_convex_embedding(&s, &h).unwrap();
        prop_assert!(report.certifies(&s, &h));
        let a = report.convex;
        let b = is_convex_embedding(&s, &Hypergraph::complete(n, n - k)).unwrap().convex;
        prop_assert_eq!(a, b);
        let (c, r) = complement_homothety(&s, k);
        for bary in k_barycenters(&s, k).unwrap() {
            let rest: Vec<usize> = (0..n).filter(|x| !bary.subset.contains(x)).collect();
            let img: Vec<Rational> = bary.point.iter().zip(&c).map(|(x, o)| o + &r * (x - o)).collect();
            prop_assert_eq!(img, barycenter(&s, &rest));
        }
    }

    /// Admissible projective maps preserve convex position of barycenter sets
    /// only through the points themselves; for k = 1 the answer is unchanged.
    #[test]
    fn projective_invariance_for_points(s in configuration(3..=7, false), a in 1i64..4) {
        let d = s.dim();
        // x -> x / (1 + <c, x>) with c chosen so the denominator stays positive
        let bound = s.points().iter().flatten().map(|x| x.abs()).max().unwrap() + Rational::one();
        let cvec: Vec<Rational> = (0..d).map(|i| Rational::new(((i as i64 % 2) * 2 - 1).into(), (bound.clone() * int(a) * int(d as i64 + 1)).to_integer())).collect();
        let moved: Vec<Vec<Rational>> = s.points().iter().map(|p| {
            let den = Rational::one() + dot(&cvec, p);
            assert!(den.is_positive());
            p.iter().map(|x| x / &den).collect()
        }).collect();
        let t = PointConfiguration::new(d, moved).unwrap();
        let h = Hypergraph::complete(s.len(), 1);
        prop_assert_eq!(
            is_convex_embedding(&s, &h).unwrap().convex,
            is_convex_embedding(&t, &h).unwrap().convex
        );
        for j in 0..3 {
            prop_assert_eq!(is_j_neighborly_primal(&s, j).holds, is_j_neighborly_primal(&t, j).holds);
        }
    }

    /// For k = 1 the skeleton of the simplex is preserved up to dimension i
    /// exactly when the points are (i+1)-neighborly.
    #[test]
    fn simplex_skeleton_is_neighborliness(s in configuration(3..=7, false), i in 0usize..3) {
        prop_assume!(i < s.len() - 1);
        let pres = skeleton(&s, 1, i, Method::Direct, true).unwrap().preserving;
        prop_assert_eq!(pres, is_j_neighborly_primal(&s, i + 1).holds);
    }

    /// Strict preservation implies preservation, and every certificate checks out.
    #[test]
    fn reports_are_consistent(s in configuration(4..=6, false), k in 1usize..4) {
        prop_assume!(k < s.len());
        let h = Hypersimplex::new(s.len(), k).unwrap();
        for face in h.faces() {
            let r = strictly_preserved_direct(&s, k, &face).unwrap();
            if r.strictly_preserved {
                prop_assert_eq!(r.preserved, Some(true));
            }
            let images: Vec<Vec<Rational>> = h.vertex_subsets().iter().map(|e| barycenter(&s, e)).collect();
            let on: Vec<bool> = h.vertex_subsets().iter().map(|e| h.face_vertices(&face).contains(e)).collect();
            let inside: Vec<&[Rational]> = images.iter().zip(&on).filter(|(_, o)| **o).map(|(p, _)| p.as_slice()).collect();
            let outside: Vec<&[Rational]> = images.iter().zip(&on).filter(|(_, o)| !**o).map(|(p, _)| p.as_slice()).collect();
            let PreservationCertificate::Direct(sep) = &r.certificate else { unreachable!() };
            prop_assert!(sep.certifies(&inside, &outside));
            prop_assert!(r.certifies(&s, k, None));
        }
    }
}

#[test]
fn pentagon_midpoints_are_convex() {
    let pts: Vec<Vec<Rational>> = [[0, 0], [4, 0], [5, 3], [2, 5], [-1, 3]]
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect();
    let s = PointConfiguration::new(2, pts).unwrap();
    assert!(is_convex_embedding(&s, &Hypergraph::complete(5, 1)).unwrap().convex);
    // midpoints of a convex pentagon: the diagonals' midpoints are interior
    assert!(!is_convex_embedding(&s, &Hypergraph::complete(5, 2)).unwrap().convex);
}
