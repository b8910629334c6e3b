//! (i,j)-partitions of a point set and their relation to the faces of the
//! k-set polytope.
//!
//! An (i,j)-partition is a pair `(A, B)` with `|A| = i`, `|B| = j`, cut out by
//! an oriented hyperplane `H`: `A = S ∩ H` and `B` the points strictly on the
//! positive side.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::embedding::{kset_polytope_vertices, preserved_faces, PointConfiguration};
use crate::exactlp::{
    affine_rank, dot, kernel_of_rows, solve_feasibility, FarkasCertificate, Feasibility,
    LinearSystem, Rational,
};
use crate::subsets::{combinations, complement};
use crate::{Error, Result};

/// Largest configuration accepted by [`enumerate_partitions`].
pub const MAX_POINTS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IJPartition {
    /// Points on the hyperplane.
    pub on: Vec<usize>,
    /// Points strictly on the positive side.
    pub above: Vec<usize>,
    /// `normal . x = offset` on `on`, `> offset` on `above`, `< offset` elsewhere.
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub normal: Vec<Rational>,
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub offset: Rational,
    /// Affine dimension of the points on the hyperplane, `-1` when there are none.
    pub dim: isize,
}

impl IJPartition {
    pub fn i(&self) -> usize {
        self.on.len()
    }

    pub fn j(&self) -> usize {
        self.above.len()
    }

    pub fn certifies(&self, s: &PointConfiguration) -> bool {
        self.normal.iter().any(|x| !x.is_zero())
            && s.points().iter().enumerate().all(|(idx, p)| {
                let v = dot(&self.normal, p);
                if self.on.contains(&idx) {
                    v == self.offset
                } else if self.above.contains(&idx) {
                    v > self.offset
                } else {
                    v < self.offset
                }
            })
    }
}

/// Counts `D_{i,j}` of (i,j)-partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionTable {
    pub counts: BTreeMap<(usize, usize), usize>,
}

impl PartitionTable {
    pub fn from_partitions(parts: &[IJPartition]) -> Self {
        let mut counts = BTreeMap::new();
        for p in parts {
            *counts.entry((p.i(), p.j())).or_insert(0) += 1;
        }
        PartitionTable { counts }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.counts.get(&(i, j)).copied().unwrap_or(0)
    }
}

type Candidate = (Vec<usize>, Vec<usize>);

/// Hyperplane `(w, c)` through `m` points of `R^m`, if they are affinely independent.
fn hyperplane_through(points: &[&[Rational]]) -> Option<(Vec<Rational>, Rational)> {
    let m = points[0].len();
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| p.iter().cloned().chain(core::iter::once(-Rational::one())).collect())
        .collect();
    let kernel = kernel_of_rows(&rows, m + 1);
    if kernel.len() != 1 {
        return None;
    }
    let v = kernel.into_iter().next()?;
    if v[..m].iter().all(Zero::is_zero) {
        return None;
    }
    Some((v[..m].to_vec(), v[m].clone()))
}

/// Coordinates of `p - base` in the basis `dirs` (assumed to contain it).
fn coordinates(dirs: &[Vec<Rational>], base: &[Rational], p: &[Rational]) -> Vec<Rational> {
    let m = base.len();
    let cols = dirs.len() + 1;
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|r| {
            dirs.iter().map(|d| d[r].clone()).chain(core::iter::once(base[r].clone() - &p[r])).collect()
        })
        .collect();
    let kernel = kernel_of_rows(&rows, cols);
    let v = kernel.last().expect("point lies in the span");
    v[..dirs.len()].to_vec()
}

/// Sign patterns of all oriented hyperplanes (including those missing every
/// point) on a configuration that affinely spans `R^m`. The all-zero pattern
/// is not included.
///
/// Every pattern either misses every point or lies next to a hyperplane
/// spanned by `m` of the points; near such a hyperplane `H` the pattern on
/// `S ∩ H` is itself a pattern of `S ∩ H` inside `H`, so the search recurses
/// into `H` with one dimension less.
fn candidates(points: &[Vec<Rational>], ids: &[usize]) -> BTreeSet<Candidate> {
    let mut out = BTreeSet::new();
    out.insert((vec![], ids.to_vec()));
    out.insert((vec![], vec![]));
    let m = points[0].len();
    if m == 0 {
        return out;
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for t in combinations(points.len(), m) {
        let tp: Vec<&[Rational]> = t.iter().map(|&i| points[i].as_slice()).collect();
        let Some((w, c)) = hyperplane_through(&tp) else { continue };
        let on: Vec<usize> = (0..points.len()).filter(|&i| dot(&w, &points[i]) == c).collect();
        if !seen.insert(on.clone()) {
            continue;
        }
        let above: Vec<usize> = (0..points.len()).filter(|&i| dot(&w, &points[i]) > c).collect();
        let below: Vec<usize> = (0..points.len()).filter(|&i| dot(&w, &points[i]) < c).collect();

        let base = tp[0];
        let dirs: Vec<Vec<Rational>> =
            tp[1..].iter().map(|q| q.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let local: Vec<Vec<Rational>> = on.iter().map(|&i| coordinates(&dirs, base, &points[i])).collect();
        let local_ids: Vec<usize> = on.iter().map(|&i| ids[i]).collect();
        let mut near = candidates(&local, &local_ids);
        near.insert((local_ids.clone(), vec![]));

        for side in [&above, &below] {
            let side_ids: Vec<usize> = side.iter().map(|&i| ids[i]).collect();
            for (a, b) in &near {
                let mut bb: Vec<usize> = side_ids.iter().chain(b).copied().collect();
                bb.sort_unstable();
                out.insert((a.clone(), bb));
            }
        }
    }
    out
}

/// The system in `(w, c)`: `w.x = c` on `on`, `w.x >= c+1` on `above`,
/// `w.x <= c-1` on the rest.
pub fn realization_system(s: &PointConfiguration, on: &[usize], above: &[usize]) -> LinearSystem {
    let d = s.dim();
    let mut sys = LinearSystem::new(d + 1);
    let lifted = |p: &[Rational], sign: i64| -> Vec<Rational> {
        let sg = Rational::from_integer(sign.into());
        p.iter().map(|x| x * &sg).chain(core::iter::once(-sg.clone())).collect()
    };
    for (i, p) in s.points().iter().enumerate() {
        if on.contains(&i) {
            sys.add_equality(lifted(p, 1), Rational::zero());
        } else if above.contains(&i) {
            sys.add_inequality(lifted(p, 1), Rational::one());
        } else {
            sys.add_inequality(lifted(p, -1), Rational::one());
        }
    }
    sys
}

/// An oriented hyperplane realising `(on, above)` with `on` a proper subset,
/// or the Farkas certificate showing there is none.
pub fn realize(
    s: &PointConfiguration,
    on: &[usize],
    above: &[usize],
) -> core::result::Result<(Vec<Rational>, Rational), FarkasCertificate> {
    debug_assert!(on.len() < s.len());
    let d = s.dim();
    match solve_feasibility(&realization_system(s, on, above)) {
        Feasibility::Feasible(x) => {
            let mut w = x[..d].to_vec();
            let mut c = x[d].clone();
            if w.iter().all(Zero::is_zero) {
                // only possible when every point is on one side; tilt to a genuine hyperplane
                w[0] = Rational::one();
                let vals = s.points().iter().map(|p| p[0].clone());
                c = if above.is_empty() {
                    vals.max().unwrap() + Rational::one()
                } else {
                    vals.min().unwrap() - Rational::one()
                };
            }
            Ok((w, c))
        }
        Feasibility::Infeasible(cert) => Err(cert),
    }
}

/// A hyperplane containing every point, if the configuration does not span.
pub fn common_hyperplane(s: &PointConfiguration) -> Option<(Vec<Rational>, Rational)> {
    let d = s.dim();
    let rows: Vec<Vec<Rational>> = s
        .points()
        .iter()
        .map(|p| p.iter().cloned().chain(core::iter::once(-Rational::one())).collect())
        .collect();
    kernel_of_rows(&rows, d + 1)
        .into_iter()
        .find(|v| v[..d].iter().any(|x| !x.is_zero()))
        .map(|v| (v[..d].to_vec(), v[d].clone()))
}

fn make(s: &PointConfiguration, on: Vec<usize>, above: Vec<usize>, normal: Vec<Rational>, offset: Rational) -> IJPartition {
    let refs: Vec<&[Rational]> = on.iter().map(|&i| s.point(i)).collect();
    let dim = affine_rank(&refs) as isize - 1;
    IJPartition { on, above, normal, offset, dim }
}

/// All (i,j)-partitions, sorted by `(on, above)`.
pub fn enumerate_partitions(s: &PointConfiguration) -> Result<Vec<IJPartition>> {
    let n = s.len();
    if n > MAX_POINTS {
        return Err(Error::TooLarge { what: "n", value: n, limit: MAX_POINTS });
    }
    if s.dim() == 0 {
        return Err(Error::InvalidArgument("partitions need dimension >= 1".into()));
    }
    let ids: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    let found = if s.spans() {
        candidates(s.points(), &ids)
    } else {
        // work inside the affine hull; the hull itself is one more hyperplane section
        let pts = s.points();
        let basis: Vec<usize> = {
            let mut chosen = vec![0];
            for i in 1..n {
                let mut trial: Vec<&[Rational]> = chosen.iter().map(|&j| pts[j].as_slice()).collect();
                trial.push(&pts[i]);
                if affine_rank(&trial) == chosen.len() + 1 {
                    chosen.push(i);
                }
            }
            chosen
        };
        let base = &pts[basis[0]];
        let dirs: Vec<Vec<Rational>> = basis[1..]
            .iter()
            .map(|&j| pts[j].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let local: Vec<Vec<Rational>> = pts.iter().map(|p| coordinates(&dirs, base, p)).collect();
        let (w, c) = common_hyperplane(s).expect("non-spanning configuration lies in a hyperplane");
        out.push(make(s, ids.clone(), vec![], w, c));
        candidates(&local, &ids)
    };
    for (on, above) in found {
        if let Ok((w, c)) = realize(s, &on, &above) {
            out.push(make(s, on, above, w, c));
        }
    }
    out.sort_by(|a, b| (&a.on, &a.above).cmp(&(&b.on, &b.above)));
    Ok(out)
}

/// Subsets of size `k` cut out by an open halfspace.
pub fn k_sets(s: &PointConfiguration, k: usize) -> Result<Vec<Vec<usize>>> {
    Ok(enumerate_partitions(s)?
        .into_iter()
        .filter(|p| p.on.is_empty() && p.above.len() == k)
        .map(|p| p.above)
        .collect())
}

/// The vertices of the k-set polytope are exactly the barycenters of k-sets.
pub fn verify_vertex_bijection(s: &PointConfiguration, k: usize) -> Result<bool> {
    let vertices: BTreeSet<Vec<usize>> = kset_polytope_vertices(s, k)?.into_iter().collect();
    let ksets: BTreeSet<Vec<usize>> = k_sets(s, k)?.into_iter().collect();
    Ok(vertices == ksets)
}

/// Each e-dimensional (i,j)-partition `(X, Y)` with `j+1 <= k <= i+j-1`
/// gives the preserved face `I = Y`, `J = S \ (X ∪ Y)` with an e-dimensional
/// image, and every such preserved face arises this way (`e >= 1`).
pub fn verify_face_correspondence(s: &PointConfiguration, k: usize, e: usize) -> Result<bool> {
    let n = s.len();
    let from_partitions: BTreeSet<(Vec<usize>, Vec<usize>)> = enumerate_partitions(s)?
        .into_iter()
        .filter(|p| p.dim == e as isize && p.j() < k && k < p.i() + p.j())
        .map(|p| {
            let mut used = p.on.clone();
            used.extend(&p.above);
            used.sort_unstable();
            let zeros = complement(n, &used);
            (p.above, zeros)
        })
        .collect();
    let from_faces: BTreeSet<(Vec<usize>, Vec<usize>)> = preserved_faces(s, k)?
        .into_iter()
        .filter(|(f, dim)| *dim == e && !(f.ones.is_empty() && f.zeros.is_empty()))
        .map(|(f, _)| (f.ones, f.zeros))
        .collect();
    Ok(from_partitions == from_faces)
}

/// No `d+1` points on a common hyperplane.
pub fn is_general_position(s: &PointConfiguration) -> bool {
    let d = s.dim();
    combinations(s.len(), (d + 1).min(s.len())).into_iter().all(|t| {
        let refs: Vec<&[Rational]> = t.iter().map(|&i| s.point(i)).collect();
        affine_rank(&refs) == t.len()
    })
}

/// Face numbers of the k-set polytope, counted two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EulerCheck {
    /// `f_{-1}, f_0, ..., f_{d-1}` from the preserved faces of the hypersimplex.
    pub faces: Vec<usize>,
    /// The same numbers from the partition counts.
    pub partitions: Vec<usize>,
    pub holds: bool,
}

/// Largest configuration accepted by [`verify_euler_relation`].
pub const MAX_EULER_POINTS: usize = 10;

/// In general position, `f_{-1} = 1`, `f_0 = D_{0,k}` and
/// `f_{i-1} = Σ_{j=k-i+1}^{k-1} D_{i,j}` for `2 <= i <= d`.
pub fn verify_euler_relation(s: &PointConfiguration, k: usize) -> Result<EulerCheck> {
    let n = s.len();
    if n > MAX_EULER_POINTS {
        return Err(Error::TooLarge { what: "n", value: n, limit: MAX_EULER_POINTS });
    }
    if !is_general_position(s) || !s.spans() {
        return Err(Error::NotGeneralPosition);
    }
    let d = s.dim();
    let mut faces = vec![0usize; d + 1];
    faces[0] = 1;
    for (_, e) in preserved_faces(s, k)? {
        if e < d {
            faces[e + 1] += 1;
        }
    }
    let table = PartitionTable::from_partitions(&enumerate_partitions(s)?);
    let mut partitions = vec![1usize];
    partitions.push(table.get(0, k));
    for i in 2..=d {
        partitions.push(((k + 1).saturating_sub(i)..k).map(|j| table.get(i, j)).sum());
    }
    let holds = faces == partitions;
    Ok(EulerCheck { faces, partitions, holds })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;

    fn config(pts: &[&[i64]]) -> PointConfiguration {
        let d = pts[0].len();
        PointConfiguration::new(d, pts.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn square_partitions() {
        let s = config(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let parts = enumerate_partitions(&s).unwrap();
        assert!(parts.iter().all(|p| p.certifies(&s)));
        let t = PartitionTable::from_partitions(&parts);
        // 4 singletons, 4 adjacent pairs, 4 triples, plus empty and full
        assert_eq!((t.get(0, 0), t.get(0, 1), t.get(0, 2), t.get(0, 3), t.get(0, 4)), (1, 4, 4, 4, 1));
        // the four sides, oriented both ways
        assert_eq!(t.get(2, 0) + t.get(2, 2), 8);
        assert_eq!(k_sets(&s, 2).unwrap().len(), 4);
        assert!(verify_vertex_bijection(&s, 2).unwrap());
    }

    #[test]
    fn collinear_points() {
        let s = config(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        let parts = enumerate_partitions(&s).unwrap();
        assert!(parts.iter().any(|p| p.on == [0, 1, 2]));
        assert!(parts.iter().all(|p| p.certifies(&s)));
    }

    #[test]
    fn non_spanning_has_full_section() {
        let s = config(&[&[0, 0], &[1, 1], &[3, 3]]);
        let parts = enumerate_partitions(&s).unwrap();
        assert!(parts.iter().any(|p| p.on == [0, 1, 2]));
        assert!(parts.iter().all(|p| p.certifies(&s)));
    }

    #[test]
    fn guard_rejects_large_inputs() {
        let pts: Vec<Vec<Rational>> = (0..13).map(|t| vec![int(t), int(t * t)]).collect();
        let s = PointConfiguration::new(2, pts).unwrap();
        assert!(matches!(enumerate_partitions(&s), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn pentagon_euler() {
        let s = config(&[&[0, 0], &[4, 0], &[5, 3], &[2, 5], &[-1, 3]]);
        for k in 1..5 {
            let c = verify_euler_relation(&s, k).unwrap();
            assert!(c.holds, "{k}: {c:?}");
            assert!(verify_face_correspondence(&s, k, 1).unwrap());
        }
    }
}
