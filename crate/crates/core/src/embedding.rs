//! k-subset barycenters, convex position, and faces of `Δ(n,k)` preserved by
//! the projection `x ↦ Σ x_i s_i / k`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::exactlp::{
    affine_rank, dot, frac, interior_certificate, solve_feasibility, Feasibility,
    InteriorCertificate, LinearSystem, Rational,
};
use crate::gale::{self, GaleTransform};
use crate::hypersimplex::{Hypersimplex, HypersimplexFace};
use crate::subsets::combinations;
use crate::{Error, Result};

/// An ordered list of distinct points of `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PointConfiguration {
    dim: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    points: Vec<Vec<Rational>>,
}

impl PointConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("configuration has no points".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
            }
        }
        let mut seen: BTreeMap<&[Rational], usize> = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p.as_slice()) {
                return Err(Error::DuplicatePoints { first, second: i });
            }
            seen.insert(p, i);
        }
        Ok(PointConfiguration { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        let refs: Vec<&[Rational]> = self.points.iter().map(Vec::as_slice).collect();
        affine_rank(&refs) - 1
    }

    pub fn spans(&self) -> bool {
        self.affine_dim() == self.dim
    }

    pub(crate) fn require_spanning(&self) -> Result<()> {
        let rank = self.affine_dim();
        if rank != self.dim {
            return Err(Error::NotSpanning { rank, expected: self.dim });
        }
        Ok(())
    }
}

/// A `k`-uniform hypergraph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hypergraph {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.len() != k || e.iter().any(|&x| x >= n) {
                return Err(Error::InvalidArgument(alloc::format!(
                    "edge {e:?} is not a {k}-subset of 0..{n}"
                )));
            }
            clean.push(e);
        }
        Ok(Hypergraph { n, k, edges: clean })
    }

    pub fn complete(n: usize, k: usize) -> Self {
        Hypergraph { n, k, edges: combinations(n, k) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Barycenter {
    pub subset: Vec<usize>,
    #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
    pub point: Vec<Rational>,
}

pub fn barycenter(s: &PointConfiguration, subset: &[usize]) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); s.dim];
    for &i in subset {
        for (x, y) in p.iter_mut().zip(&s.points[i]) {
            *x += y;
        }
    }
    let k = frac(1, subset.len() as i64);
    p.iter_mut().for_each(|x| *x *= &k);
    p
}

/// Barycenters of all `k`-subsets, in lexicographic subset order.
pub fn k_barycenters(s: &PointConfiguration, k: usize) -> Result<Vec<Barycenter>> {
    if k == 0 || k > s.len() {
        return Err(Error::InvalidArgument(alloc::format!(
            "k = {k} outside 1..={}",
            s.len()
        )));
    }
    Ok(combinations(s.len(), k)
        .into_iter()
        .map(|subset| Barycenter { point: barycenter(s, &subset), subset })
        .collect())
}

/// Outcome of separating an affine flat from a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Separation {
    /// `normal . p = offset` on the inside points and `<= offset - 1` outside.
    Separated {
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        normal: Vec<Rational>,
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        offset: Rational,
    },
    /// Affine weights on the inside points (summing to 1) and convex weights
    /// on the outside points giving the same point.
    Blocked {
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        inside: Vec<Rational>,
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        outside: Vec<Rational>,
    },
}

impl Separation {
    pub fn is_separated(&self) -> bool {
        matches!(self, Separation::Separated { .. })
    }

    pub fn certifies(&self, inside: &[&[Rational]], outside: &[&[Rational]]) -> bool {
        match self {
            Separation::Separated { normal, offset } => {
                inside.iter().all(|p| dot(normal, p) == *offset)
                    && outside.iter().all(|p| dot(normal, p) <= offset - Rational::one())
            }
            Separation::Blocked { inside: a, outside: z } => {
                let dim = inside.iter().chain(outside).map(|p| p.len()).next().unwrap_or(0);
                let sum = |w: &[Rational]| w.iter().fold(Rational::zero(), |acc, x| acc + x);
                let combo = |pts: &[&[Rational]], w: &[Rational]| {
                    let mut c = vec![Rational::zero(); dim];
                    for (p, x) in pts.iter().zip(w) {
                        for (ci, pi) in c.iter_mut().zip(p.iter()) {
                            *ci += x * pi;
                        }
                    }
                    c
                };
                a.len() == inside.len()
                    && z.len() == outside.len()
                    && z.iter().all(|x| !x.is_negative())
                    && sum(a).is_one()
                    && sum(z).is_one()
                    && combo(inside, a) == combo(outside, z)
            }
        }
    }
}

/// Find an affine functional constant on `inside` and at least 1 smaller on
/// every `outside` point, or show that `conv(outside)` meets `aff(inside)`.
pub fn flat_separation(inside: &[&[Rational]], outside: &[&[Rational]]) -> Separation {
    let dim = inside.iter().chain(outside).map(|p| p.len()).next().unwrap_or(0);
    let (no, ni) = (outside.len(), inside.len());
    // variables: z_o >= 0 for outside, then free y_b for inside
    let mut sys = LinearSystem::new(no + ni);
    for c in 0..dim {
        let row = outside
            .iter()
            .map(|p| p[c].clone())
            .chain(inside.iter().map(|p| -p[c].clone()))
            .collect();
        sys.add_equality(row, Rational::zero());
    }
    let indicator = |outer: bool| {
        (0..no + ni)
            .map(|v| if (v < no) == outer { Rational::one() } else { Rational::zero() })
            .collect::<Vec<_>>()
    };
    sys.add_equality(indicator(true), Rational::one());
    sys.add_equality(indicator(false), Rational::one());
    for o in 0..no {
        let mut row = vec![Rational::zero(); no + ni];
        row[o] = Rational::one();
        sys.add_inequality(row, Rational::zero());
    }
    match solve_feasibility(&sys) {
        Feasibility::Feasible(x) => {
            let outside = x[..no].to_vec();
            let inside = x[no..].to_vec();
            Separation::Blocked { inside, outside }
        }
        Feasibility::Infeasible(cert) => {
            let normal = cert.equalities[..dim].to_vec();
            let offset = cert.equalities[dim + 1].clone();
            Separation::Separated { normal, offset }
        }
    }
}

/// Whether `points[p]` is a vertex of `conv(points)`. A point that coincides
/// with another one is never a vertex.
pub fn is_vertex(points: &[Vec<Rational>], p: usize) -> Separation {
    let inside = [points[p].as_slice()];
    let outside: Vec<&[Rational]> =
        points.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, x)| x.as_slice()).collect();
    flat_separation(&inside, &outside)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EdgeCertificate {
    /// The barycenter is a vertex, cut off by the functional.
    Vertex(Separation),
    /// The barycenter equals the barycenter of an earlier edge.
    Coincident { other: usize },
    /// The barycenter is a convex combination of the other barycenters.
    Interior(Separation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EmbeddingReport {
    pub convex: bool,
    pub barycenters: Vec<Barycenter>,
    pub certificates: Vec<EdgeCertificate>,
}

impl EmbeddingReport {
    /// Re-check every certificate against `s` and `h` by substitution.
    pub fn certifies(&self, s: &PointConfiguration, h: &Hypergraph) -> bool {
        if self.barycenters.len() != h.edges.len() || self.certificates.len() != h.edges.len() {
            return false;
        }
        let fresh = self.barycenters.iter().zip(&h.edges).all(|(b, e)| b.subset == *e && b.point == barycenter(s, e));
        let points: Vec<&[Rational]> = self.barycenters.iter().map(|b| b.point.as_slice()).collect();
        let each = self.certificates.iter().enumerate().all(|(i, c)| {
            let others: Vec<&[Rational]> =
                points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| *p).collect();
            match c {
                EdgeCertificate::Vertex(sep) => sep.is_separated() && sep.certifies(&[points[i]], &others),
                EdgeCertificate::Interior(sep) => !sep.is_separated() && sep.certifies(&[points[i]], &others),
                EdgeCertificate::Coincident { other } => *other != i && points.get(*other) == Some(&points[i]),
            }
        });
        let convex = self.certificates.iter().all(|c| matches!(c, EdgeCertificate::Vertex(_)));
        fresh && each && convex == self.convex
    }
}

/// Are the barycenters of the edges of `h` distinct and in convex position?
pub fn is_convex_embedding(s: &PointConfiguration, h: &Hypergraph) -> Result<EmbeddingReport> {
    if h.n != s.len() {
        return Err(Error::DimensionMismatch { expected: s.len(), found: h.n });
    }
    let barycenters: Vec<Barycenter> = h
        .edges
        .iter()
        .map(|e| Barycenter { subset: e.clone(), point: barycenter(s, e) })
        .collect();
    let mut first: BTreeMap<&[Rational], usize> = BTreeMap::new();
    let mut coincident: Vec<Option<usize>> = vec![None; barycenters.len()];
    for (i, b) in barycenters.iter().enumerate() {
        match first.get(b.point.as_slice()) {
            Some(&j) => {
                coincident[i] = Some(j);
                coincident[j].get_or_insert(i);
            }
            None => {
                first.insert(&b.point, i);
            }
        }
    }
    let points: Vec<Vec<Rational>> = barycenters.iter().map(|b| b.point.clone()).collect();
    let certificates: Vec<EdgeCertificate> = (0..points.len())
        .map(|i| match coincident[i] {
            Some(other) => EdgeCertificate::Coincident { other },
            None => {
                let sep = is_vertex(&points, i);
                if sep.is_separated() {
                    EdgeCertificate::Vertex(sep)
                } else {
                    EdgeCertificate::Interior(sep)
                }
            }
        })
        .collect();
    let convex = certificates.iter().all(|c| matches!(c, EdgeCertificate::Vertex(_)));
    Ok(EmbeddingReport { convex, barycenters, certificates })
}

/// The `k`-subsets whose barycenter is a vertex of the k-set polytope.
pub fn kset_polytope_vertices(s: &PointConfiguration, k: usize) -> Result<Vec<Vec<usize>>> {
    let report = is_convex_embedding(s, &Hypergraph::complete(s.len(), k))?;
    Ok(report
        .barycenters
        .into_iter()
        .zip(report.certificates)
        .filter(|(_, c)| matches!(c, EdgeCertificate::Vertex(_)))
        .map(|(b, _)| b.subset)
        .collect())
}

/// The homothety mapping each `k`-barycenter to the `(n-k)`-barycenter of
/// the complement: centre at the full barycenter, ratio `-k/(n-k)`.
pub fn complement_homothety(s: &PointConfiguration, k: usize) -> (Vec<Rational>, Rational) {
    let all: Vec<usize> = (0..s.len()).collect();
    let center = barycenter(s, &all);
    (center, frac(-(k as i64), (s.len() - k) as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Method {
    Direct,
    Gale,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum PreservationCertificate {
    /// From the direct test: a supporting functional or a blocking combination.
    Direct(Separation),
    /// From the Gale test on `{τ(n_j) : j ∈ I} ∪ {τ(m_j) : j ∈ J}`.
    Gale {
        #[cfg_attr(feature = "serde", serde(with = "crate::text"))]
        vectors: Vec<Vec<Rational>>,
        certificate: InteriorCertificate,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PreservationReport {
    pub face: HypersimplexFace,
    pub method: Method,
    /// `None` when the method only decides strict preservation.
    pub preserved: Option<bool>,
    pub strictly_preserved: bool,
    /// Dimension of the image of the face, when computed.
    pub image_dim: Option<usize>,
    pub certificate: PreservationCertificate,
}

impl PreservationReport {
    /// Re-check the report against `s` by substitution. Gale certificates
    /// also need the transform they were computed from.
    pub fn certifies(&self, s: &PointConfiguration, k: usize, g: Option<&GaleTransform>) -> bool {
        let Ok(images) = VertexImages::new(s, k) else { return false };
        if images.h.face(&self.face.ones, &self.face.zeros).as_ref() != Ok(&self.face) {
            return false;
        }
        match (&self.certificate, self.method) {
            (PreservationCertificate::Direct(sep), Method::Direct) => {
                let (inside, outside) = images.split(&self.face);
                let preserved = sep.is_separated();
                let image_dim = affine_rank(&inside) - 1;
                sep.certifies(&inside, &outside)
                    && self.preserved == Some(preserved)
                    && self.image_dim == Some(image_dim)
                    && self.strictly_preserved == (preserved && image_dim == self.face.dim())
            }
            (PreservationCertificate::Gale { vectors, certificate }, Method::Gale) => {
                let Some(g) = g else { return false };
                let strict = certificate.is_interior();
                !images.h.is_simplex()
                    && g.certifies(s)
                    && *vectors == gale_face_vectors(g, &self.face)
                    && certificate.certifies(vectors, g.dim)
                    && self.strictly_preserved == strict
                    && self.preserved == strict.then_some(true)
            }
            _ => false,
        }
    }
}

/// Barycenters of every vertex of `Δ(n,k)`, indexed like `vertex_subsets`.
pub(crate) struct VertexImages {
    pub h: Hypersimplex,
    pub points: Vec<Vec<Rational>>,
    pub subsets: Vec<Vec<usize>>,
}

impl VertexImages {
    pub fn new(s: &PointConfiguration, k: usize) -> Result<Self> {
        let h = Hypersimplex::new(s.len(), k)?;
        let subsets = h.vertex_subsets();
        let points = subsets.iter().map(|e| barycenter(s, e)).collect();
        Ok(VertexImages { h, points, subsets })
    }

    fn on_face(&self, v: usize, face: &HypersimplexFace) -> bool {
        let e = &self.subsets[v];
        face.ones.iter().all(|x| e.binary_search(x).is_ok())
            && face.zeros.iter().all(|x| e.binary_search(x).is_err())
    }

    pub fn split(&self, face: &HypersimplexFace) -> (Vec<&[Rational]>, Vec<&[Rational]>) {
        let mut inside = Vec::new();
        let mut outside = Vec::new();
        for (v, p) in self.points.iter().enumerate() {
            if self.on_face(v, face) {
                inside.push(p.as_slice());
            } else {
                outside.push(p.as_slice());
            }
        }
        (inside, outside)
    }

    pub fn image_dim(&self, face: &HypersimplexFace) -> usize {
        affine_rank(&self.split(face).0) - 1
    }

    pub fn direct(&self, face: &HypersimplexFace) -> PreservationReport {
        let (inside, outside) = self.split(face);
        let sep = flat_separation(&inside, &outside);
        let preserved = sep.is_separated();
        let image_dim = affine_rank(&inside) - 1;
        PreservationReport {
            face: face.clone(),
            method: Method::Direct,
            preserved: Some(preserved),
            strictly_preserved: preserved && image_dim == face.dim(),
            image_dim: Some(image_dim),
            certificate: PreservationCertificate::Direct(sep),
        }
    }
}

/// The Gale-side vectors for a face: `τ(n_j) = g_j` for `j ∈ I` and
/// `τ(m_j) = -g_j` for `j ∈ J`.
pub fn gale_face_vectors(g: &GaleTransform, face: &HypersimplexFace) -> Vec<Vec<Rational>> {
    let ones = face.ones.iter().map(|&j| g.vectors[j].clone());
    let zeros = face.zeros.iter().map(|&j| g.vectors[j].iter().map(|x| -x.clone()).collect());
    ones.chain(zeros).collect()
}

fn gale_report(g: &GaleTransform, face: &HypersimplexFace) -> PreservationReport {
    let vectors = gale_face_vectors(g, face);
    let certificate = interior_certificate(&vectors, g.dim);
    let strict = certificate.is_interior();
    PreservationReport {
        face: face.clone(),
        method: Method::Gale,
        preserved: strict.then_some(true),
        strictly_preserved: strict,
        image_dim: None,
        certificate: PreservationCertificate::Gale { vectors, certificate },
    }
}

fn check_face(h: &Hypersimplex, face: &HypersimplexFace) -> Result<HypersimplexFace> {
    // re-canonicalise so foreign faces are validated against this hypersimplex
    h.face(&face.ones, &face.zeros)
}

/// Strict preservation of a face, decided by an LP on the barycenters and an
/// affine-dimension count.
pub fn strictly_preserved_direct(
    s: &PointConfiguration,
    k: usize,
    face: &HypersimplexFace,
) -> Result<PreservationReport> {
    let images = VertexImages::new(s, k)?;
    let face = check_face(&images.h, face)?;
    Ok(images.direct(&face))
}

/// Strict preservation of a face, decided on the Gale side. For `k = 1` and
/// `k = n-1` the hypersimplex is a simplex and the direct test is used.
pub fn strictly_preserved_gale(
    s: &PointConfiguration,
    k: usize,
    face: &HypersimplexFace,
) -> Result<PreservationReport> {
    let h = Hypersimplex::new(s.len(), k)?;
    let face = check_face(&h, face)?;
    if h.is_simplex() {
        return strictly_preserved_direct(s, k, &face);
    }
    let g = gale::transform(s)?;
    Ok(gale_report(&g, &face))
}

/// Result of checking the whole `i`-skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SkeletonReport {
    pub preserving: bool,
    /// The first face (by dimension, then `(I, J)`) that is not strictly preserved.
    pub first_failure: Option<PreservationReport>,
    /// Reports for every face checked, in order. With short-circuiting this
    /// ends at the first failure.
    pub reports: Vec<PreservationReport>,
}

/// Is every face of dimension at most `i` strictly preserved? Uses the direct test.
pub fn is_i_preserving(s: &PointConfiguration, k: usize, i: usize) -> Result<SkeletonReport> {
    skeleton(s, k, i, Method::Direct, true)
}

/// [`is_i_preserving`] with a chosen method, optionally checking every face
/// instead of stopping at the first failure.
pub fn skeleton(
    s: &PointConfiguration,
    k: usize,
    i: usize,
    method: Method,
    stop_at_failure: bool,
) -> Result<SkeletonReport> {
    let images = VertexImages::new(s, k)?;
    if i >= s.len() {
        return Err(Error::InvalidArgument(alloc::format!("i = {i} exceeds n-1")));
    }
    let gale = match method {
        Method::Gale if !images.h.is_simplex() => Some(gale::transform(s)?),
        _ => None,
    };
    let mut reports = Vec::new();
    let mut first_failure = None;
    for dim in 0..=i {
        for face in images.h.i_faces(dim) {
            let report = match &gale {
                Some(g) => gale_report(g, &face),
                None => images.direct(&face),
            };
            let failed = !report.strictly_preserved;
            if failed && first_failure.is_none() {
                first_failure = Some(report.clone());
            }
            reports.push(report);
            if failed && stop_at_failure {
                return Ok(SkeletonReport { preserving: false, first_failure, reports });
            }
        }
    }
    Ok(SkeletonReport { preserving: first_failure.is_none(), first_failure, reports })
}

/// Every face of `Δ(n,k)` preserved by the projection, with the dimension of
/// its image. These are in bijection with the faces of the k-set polytope.
pub fn preserved_faces(s: &PointConfiguration, k: usize) -> Result<Vec<(HypersimplexFace, usize)>> {
    let images = VertexImages::new(s, k)?;
    let full = s.affine_dim();
    let mut out = Vec::new();
    for face in images.h.faces() {
        let e = images.image_dim(&face);
        let whole = face.ones.is_empty() && face.zeros.is_empty();
        // an image of full dimension can only be the whole polytope
        if e == full && !whole {
            continue;
        }
        if images.direct(&face).preserved == Some(true) {
            out.push((face, e));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;

    pub(crate) fn config(dim: usize, pts: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(dim, pts.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    fn square() -> PointConfiguration {
        config(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn triangle_bary() -> PointConfiguration {
        config(2, &[&[0, 0], &[3, 0], &[0, 3], &[1, 1]])
    }

    #[test]
    fn duplicate_points_rejected() {
        let e = PointConfiguration::new(1, vec![vec![int(0)], vec![int(0)]]);
        assert_eq!(e, Err(Error::DuplicatePoints { first: 0, second: 1 }));
    }

    #[test]
    fn barycenters_of_square() {
        let b = k_barycenters(&square(), 2).unwrap();
        assert_eq!(b.len(), 6);
        assert_eq!(b[2].subset, [0, 3]);
        assert_eq!(b[2].point, [frac(1, 2), frac(1, 2)]);
        assert_eq!(b[3].point, [frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn vertex_examples() {
        let sq: Vec<Vec<Rational>> = square().points().to_vec();
        for p in 0..4 {
            let sep = is_vertex(&sq, p);
            assert!(sep.is_separated());
        }
        let mids: Vec<Vec<Rational>> =
            k_barycenters(&square(), 2).unwrap().into_iter().map(|b| b.point).collect();
        let sep = is_vertex(&mids, 2);
        assert!(!sep.is_separated());
        let inside = [mids[2].as_slice()];
        let outside: Vec<&[Rational]> =
            mids.iter().enumerate().filter(|(i, _)| *i != 2).map(|(_, p)| p.as_slice()).collect();
        assert!(sep.certifies(&inside, &outside));

        let tri: Vec<Vec<Rational>> =
            k_barycenters(&triangle_bary(), 2).unwrap().into_iter().map(|b| b.point).collect();
        // midpoint of (0,0) and (1,1) minimises x + y
        assert_eq!(tri[2].as_slice(), [frac(1, 2), frac(1, 2)]);
        assert!(is_vertex(&tri, 2).is_separated());
    }

    #[test]
    fn convex_embedding_examples() {
        let sq = square();
        let r = is_convex_embedding(&sq, &Hypergraph::complete(4, 2)).unwrap();
        assert!(!r.convex);
        assert_eq!(r.certificates[2], EdgeCertificate::Coincident { other: 3 });
        let pentagon = config(2, &[&[0, 0], &[4, 0], &[5, 3], &[2, 5], &[-1, 3]]);
        assert!(is_convex_embedding(&pentagon, &Hypergraph::complete(5, 1)).unwrap().convex);
        // triangle plus barycenter, k = 1: the interior point is not a vertex
        let r = is_convex_embedding(&triangle_bary(), &Hypergraph::complete(4, 1)).unwrap();
        assert!(!r.convex);
        assert!(matches!(r.certificates[3], EdgeCertificate::Interior(_)));
    }

    #[test]
    fn kset_vertices_of_triangle_plus_barycenter() {
        assert_eq!(kset_polytope_vertices(&triangle_bary(), 2).unwrap().len(), 6);
        assert_eq!(kset_polytope_vertices(&square(), 2).unwrap().len(), 4);
    }

    #[test]
    fn square_vertex_not_preserved() {
        let h = Hypersimplex::new(4, 2).unwrap();
        let f = h.face(&[0, 3], &[]).unwrap();
        for method in [Method::Direct, Method::Gale] {
            let r = match method {
                Method::Direct => strictly_preserved_direct(&square(), 2, &f),
                Method::Gale => strictly_preserved_gale(&square(), 2, &f),
            }
            .unwrap();
            assert!(!r.strictly_preserved, "{method:?}");
        }
        let r = strictly_preserved_gale(&square(), 2, &f).unwrap();
        let PreservationCertificate::Gale { vectors, .. } = r.certificate else { panic!() };
        assert_eq!(vectors, [[int(1)], [int(1)], [int(1)], [int(1)]]);
    }

    #[test]
    fn triangle_barycenter_preserves_vertices_only() {
        let t = triangle_bary();
        assert!(is_i_preserving(&t, 2, 0).unwrap().preserving);
        let r = is_i_preserving(&t, 2, 1).unwrap();
        assert!(!r.preserving);
        assert_eq!(r.first_failure.unwrap().face.dim(), 1);
    }

    #[test]
    fn homothety_maps_to_complements() {
        let t = triangle_bary();
        for k in 1..4 {
            let (c, r) = complement_homothety(&t, k);
            for b in k_barycenters(&t, k).unwrap() {
                let comp = crate::subsets::complement(4, &b.subset);
                let img: Vec<Rational> =
                    b.point.iter().zip(&c).map(|(a, o)| o + &r * (a - o)).collect();
                assert_eq!(img, barycenter(&t, &comp));
            }
        }
    }
}
