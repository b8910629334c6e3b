//! Gale transforms and (almost) neighborliness, decided both on the primal
//! configuration and on its Gale dual.
//!
//! A configuration is j-neighborly when every set of at most j points is the
//! vertex set of a face, and j-almost neighborly when every set of at most j
//! points lies in a common proper face. Dually, these say that every open
//! (resp. closed) linear halfspace contains at least j+1 Gale vectors.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::embedding::{flat_separation, PointConfiguration, Separation};
use crate::exactlp::{
    dot, kernel_of_rows, rank_of_rows, solve_feasibility, FarkasCertificate, Feasibility,
    LinearSystem, Rational,
};
use crate::subsets::{combinations, complement, subsets_up_to};
use crate::Result;

/// The Gale vectors of an affinely spanning configuration of `n` points in
/// `R^d`, living in `R^(n-d-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaleTransform {
    pub dim: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub vectors: Vec<Vec<Rational>>,
}

impl GaleTransform {
    /// `n = d+1`: the configuration is a simplex and every vector lives in `R^0`.
    /// Whether these vectors are a Gale transform of `s`: the right count
    /// and dimension, every coordinate an affine dependence of `s`, and full
    /// rank.
    pub fn certifies(&self, s: &PointConfiguration) -> bool {
        let (n, d) = (s.len(), s.dim());
        if self.vectors.len() != n || self.dim + d + 1 != n || self.vectors.iter().any(|v| v.len() != self.dim) {
            return false;
        }
        let dependent = (0..self.dim).all(|c| {
            let sum: Rational = self.vectors.iter().map(|v| v[c].clone()).sum();
            sum.is_zero()
                && (0..d).all(|x| {
                    let t: Rational = self.vectors.iter().zip(s.points()).map(|(v, p)| &v[c] * &p[x]).sum();
                    t.is_zero()
                })
        });
        dependent && (self.dim == 0 || rank_of_rows(&self.vectors, self.dim) == self.dim)
    }

    pub fn is_simplex(&self) -> bool {
        self.dim == 0
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Rows of the canonical kernel basis of `[points; 1]`, read column-wise.
pub fn transform(s: &PointConfiguration) -> Result<GaleTransform> {
    s.require_spanning()?;
    let n = s.len();
    let mut rows: Vec<Vec<Rational>> =
        (0..s.dim()).map(|c| s.points().iter().map(|p| p[c].clone()).collect()).collect();
    rows.push(vec![Rational::one(); n]);
    let basis = kernel_of_rows(&rows, n);
    let dim = basis.len();
    let vectors = (0..n).map(|j| basis.iter().map(|b| b[j].clone()).collect()).collect();
    Ok(GaleTransform { dim, vectors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Kind {
    Neighborly,
    AlmostNeighborly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Route {
    Primal,
    Dual,
}

/// A supporting hyperplane `normal . x = offset` of a face containing `subset`.
///
/// For neighborliness every other point satisfies `<= offset - 1`. For almost
/// neighborliness the other points satisfy `<= offset` and the point
/// `strict` satisfies `<= offset - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Support {
    pub subset: Vec<usize>,
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub normal: Vec<Rational>,
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub offset: Rational,
    pub strict: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Witness {
    /// Every subset passed; on the primal route each one carries its support.
    Pass { supports: Vec<Support> },
    /// A subset that is not the vertex set of a face (blocking combination),
    /// or that lies in no proper face (one Farkas certificate per candidate
    /// strict point, in increasing order of that point).
    PrimalViolation { subset: Vec<usize>, blocked: Option<Separation>, farkas: Vec<FarkasCertificate> },
    /// A nonzero direction `u` with at most `level` Gale vectors having
    /// `<u, m> > 0` (neighborly) or `<u, m> >= 0` (almost neighborly).
    DualViolation {
        subset: Vec<usize>,
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        direction: Vec<Rational>,
    },
    /// No configuration has all of its points in a common proper face.
    AllPoints,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NeighborlinessCertificate {
    pub kind: Kind,
    pub route: Route,
    pub level: usize,
    pub holds: bool,
    pub witness: Witness,
}

fn pass(kind: Kind, route: Route, level: usize, supports: Vec<Support>) -> NeighborlinessCertificate {
    NeighborlinessCertificate { kind, route, level, holds: true, witness: Witness::Pass { supports } }
}

fn fail(kind: Kind, route: Route, level: usize, witness: Witness) -> NeighborlinessCertificate {
    NeighborlinessCertificate { kind, route, level, holds: false, witness }
}

pub fn is_j_neighborly_primal(s: &PointConfiguration, j: usize) -> NeighborlinessCertificate {
    let (kind, route) = (Kind::Neighborly, Route::Primal);
    let pts = s.points();
    let mut supports = Vec::new();
    for a in subsets_up_to(s.len(), j) {
        let rest = complement(s.len(), &a);
        let inside: Vec<&[Rational]> = a.iter().map(|&i| pts[i].as_slice()).collect();
        let outside: Vec<&[Rational]> = rest.iter().map(|&i| pts[i].as_slice()).collect();
        match flat_separation(&inside, &outside) {
            Separation::Separated { normal, offset } => {
                supports.push(Support { subset: a, normal, offset, strict: None })
            }
            blocked => {
                let w = Witness::PrimalViolation { subset: a, blocked: Some(blocked), farkas: vec![] };
                return fail(kind, route, j, w);
            }
        }
    }
    pass(kind, route, j, supports)
}

/// `normal . a = offset` on `a`, `<= offset` on the rest, `<= offset - 1` on `q`.
fn proper_support(pts: &[Vec<Rational>], a: &[usize], q: usize) -> Feasibility {
    solve_feasibility(&support_system(pts, a, q))
}

pub fn is_j_almost_neighborly_primal(s: &PointConfiguration, j: usize) -> NeighborlinessCertificate {
    let (kind, route) = (Kind::AlmostNeighborly, Route::Primal);
    let pts = s.points();
    let mut supports = Vec::new();
    'subsets: for a in subsets_up_to(s.len(), j) {
        let mut farkas = Vec::new();
        for q in complement(s.len(), &a) {
            match proper_support(pts, &a, q) {
                Feasibility::Feasible(x) => {
                    let (normal, offset) = (x[..s.dim()].to_vec(), x[s.dim()].clone());
                    supports.push(Support { subset: a, normal, offset, strict: Some(q) });
                    continue 'subsets;
                }
                Feasibility::Infeasible(c) => farkas.push(c),
            }
        }
        let w = if a.len() == s.len() {
            Witness::AllPoints
        } else {
            Witness::PrimalViolation { subset: a, blocked: None, farkas }
        };
        return fail(kind, route, j, w);
    }
    pass(kind, route, j, supports)
}

/// Some `u` with `<u, m0> <= -1` and `<u, m> <= 0` on `rest`.
fn negative_direction(rest: &[&[Rational]], dim: usize, strict: Option<&[Rational]>) -> Option<Vec<Rational>> {
    let mut sys = LinearSystem::new(dim);
    let neg = |m: &[Rational]| m.iter().map(|x| -x.clone()).collect::<Vec<_>>();
    match strict {
        Some(m0) => {
            sys.add_inequality(neg(m0), Rational::one());
            for m in rest {
                sys.add_inequality(neg(m), Rational::zero());
            }
        }
        None => {
            for m in rest {
                sys.add_inequality(neg(m), Rational::one());
            }
        }
    }
    match solve_feasibility(&sys) {
        Feasibility::Feasible(u) => Some(u),
        Feasibility::Infeasible(_) => None,
    }
}

pub fn is_j_neighborly_dual(g: &GaleTransform, j: usize) -> NeighborlinessCertificate {
    let (kind, route) = (Kind::Neighborly, Route::Dual);
    let n = g.len();
    if g.is_simplex() {
        return pass(kind, route, j, vec![]);
    }
    for c in combinations(n, j.min(n - 1)) {
        let rest: Vec<&[Rational]> =
            complement(n, &c).into_iter().map(|i| g.vectors[i].as_slice()).collect();
        let owned: Vec<Vec<Rational>> = rest.iter().map(|m| m.to_vec()).collect();
        if rank_of_rows(&owned, g.dim) < g.dim {
            let direction = kernel_of_rows(&owned, g.dim).swap_remove(0);
            return fail(kind, route, j, Witness::DualViolation { subset: c, direction });
        }
        for m0 in &rest {
            if let Some(direction) = negative_direction(&rest, g.dim, Some(m0)) {
                return fail(kind, route, j, Witness::DualViolation { subset: c, direction });
            }
        }
    }
    pass(kind, route, j, vec![])
}

/// For `j >= n` no proper face contains every point, so the answer is false
/// even for a simplex, where the closed-halfspace condition is vacuous.
pub fn is_j_almost_neighborly_dual(g: &GaleTransform, j: usize) -> NeighborlinessCertificate {
    let (kind, route) = (Kind::AlmostNeighborly, Route::Dual);
    let n = g.len();
    if j >= n {
        return fail(kind, route, j, Witness::AllPoints);
    }
    if g.is_simplex() {
        return pass(kind, route, j, vec![]);
    }
    for c in combinations(n, j) {
        let rest: Vec<&[Rational]> =
            complement(n, &c).into_iter().map(|i| g.vectors[i].as_slice()).collect();
        if let Some(direction) = negative_direction(&rest, g.dim, None) {
            return fail(kind, route, j, Witness::DualViolation { subset: c, direction });
        }
    }
    pass(kind, route, j, vec![])
}

impl NeighborlinessCertificate {
    /// Re-check the witness by substitution. Dual passes carry no evidence and
    /// are accepted as stated.
    pub fn certifies(&self, s: &PointConfiguration, g: Option<&GaleTransform>) -> bool {
        let pts = s.points();
        match (&self.witness, self.holds) {
            (Witness::Pass { supports }, true) => {
                if self.route == Route::Dual {
                    return supports.is_empty();
                }
                let expected = subsets_up_to(s.len(), self.level);
                supports.len() == expected.len()
                    && supports.iter().zip(&expected).all(|(sup, a)| {
                        sup.subset == *a
                            && pts.iter().enumerate().all(|(i, p)| {
                                let v = dot(&sup.normal, p);
                                if a.contains(&i) {
                                    v == sup.offset
                                } else if sup.strict.is_none() || sup.strict == Some(i) {
                                    v <= &sup.offset - Rational::one()
                                } else {
                                    v <= sup.offset
                                }
                            })
                    })
            }
            (Witness::PrimalViolation { subset, blocked, farkas }, false) => {
                let inside: Vec<&[Rational]> = subset.iter().map(|&i| pts[i].as_slice()).collect();
                let rest = complement(s.len(), subset);
                let outside: Vec<&[Rational]> = rest.iter().map(|&i| pts[i].as_slice()).collect();
                if subset.len() > self.level {
                    return false;
                }
                match self.kind {
                    Kind::Neighborly => blocked
                        .as_ref()
                        .is_some_and(|b| !b.is_separated() && b.certifies(&inside, &outside)),
                    Kind::AlmostNeighborly => {
                        farkas.len() == rest.len()
                            && rest.iter().zip(farkas).all(|(&q, f)| {
                                let sys = support_system(pts, subset, q);
                                f.certifies(&sys)
                            })
                    }
                }
            }
            (Witness::DualViolation { subset, direction }, false) => {
                let Some(g) = g else { return false };
                let count = g
                    .vectors
                    .iter()
                    .filter(|m| {
                        let v = dot(direction, m);
                        match self.kind {
                            Kind::Neighborly => v.is_positive(),
                            Kind::AlmostNeighborly => !v.is_negative(),
                        }
                    })
                    .count();
                subset.len() <= self.level
                    && direction.iter().any(|x| !x.is_zero())
                    && count <= self.level
            }
            (Witness::AllPoints, false) => {
                self.kind == Kind::AlmostNeighborly && self.level >= s.len()
            }
            _ => false,
        }
    }
}

fn support_system(pts: &[Vec<Rational>], a: &[usize], q: usize) -> LinearSystem {
    let d = pts[0].len();
    let mut sys = LinearSystem::new(d + 1);
    let row = |p: &[Rational], sign: i64| -> Vec<Rational> {
        let s = Rational::from_integer(sign.into());
        p.iter().map(|x| x * &s).chain(core::iter::once(-s.clone())).collect()
    };
    for &i in a {
        sys.add_equality(row(&pts[i], 1), Rational::zero());
    }
    for (i, p) in pts.iter().enumerate() {
        if a.contains(&i) {
            continue;
        }
        let rhs = if i == q { Rational::one() } else { Rational::zero() };
        sys.add_inequality(row(p, -1), rhs);
    }
    sys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;

    fn config(dim: usize, pts: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(dim, pts.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn square_transform() {
        let g = transform(&config(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(g.dim, 1);
        assert_eq!(g.vectors, [[int(1)], [int(-1)], [int(-1)], [int(1)]]);
    }

    #[test]
    fn triangle_barycenter_transform() {
        let g = transform(&config(2, &[&[0, 0], &[3, 0], &[0, 3], &[1, 1]])).unwrap();
        let scale = g.vectors[3][0].clone();
        let normalised: Vec<Rational> = g.vectors.iter().map(|v| &v[0] / &scale * int(-3)).collect();
        assert_eq!(normalised, [int(1), int(1), int(1), int(-3)]);
        assert!(is_j_neighborly_dual(&g, 0).holds);
        assert!(!is_j_neighborly_dual(&g, 1).holds);
        assert!(!is_j_almost_neighborly_dual(&g, 1).holds);
    }

    #[test]
    fn simplex_transform_is_trivial() {
        let g = transform(&config(2, &[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert!(g.is_simplex());
        assert!(g.vectors.iter().all(|v| v.is_empty()));
    }

    #[test]
    fn non_spanning_rejected() {
        assert!(transform(&config(2, &[&[0, 0], &[1, 1], &[2, 2]])).is_err());
    }

    #[test]
    fn square_neighborliness() {
        let s = config(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let g = transform(&s).unwrap();
        for j in 0..=4 {
            let p = is_j_neighborly_primal(&s, j);
            let d = is_j_neighborly_dual(&g, j);
            assert_eq!(p.holds, j <= 1);
            assert_eq!(d.holds, j <= 1);
            assert!(p.certifies(&s, Some(&g)) && d.certifies(&s, Some(&g)));
            let p = is_j_almost_neighborly_primal(&s, j);
            let d = is_j_almost_neighborly_dual(&g, j);
            assert_eq!(p.holds, j <= 1, "{j}");
            assert_eq!(d.holds, j <= 1, "{j}");
            assert!(p.certifies(&s, Some(&g)) && d.certifies(&s, Some(&g)));
        }
        let w = is_j_almost_neighborly_primal(&s, 2).witness;
        assert!(matches!(w, Witness::PrimalViolation { subset, .. } if subset == [0, 3]));
    }
}
