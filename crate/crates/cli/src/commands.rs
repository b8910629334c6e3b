//! The work behind each subcommand, separated from argument parsing.

use anyhow::{bail, ensure};
use convexdim_core::constructions::{
    cyclic_config, direct_sum, multipartite_lift, pyramid, simplex, simplex_with_barycenter,
};
use convexdim_core::embedding::{is_convex_embedding, skeleton, Method, PointConfiguration};
use convexdim_core::gale::{is_j_almost_neighborly_primal, is_j_neighborly_primal, transform};
use convexdim_core::theorems::characterize;
use convexdim_core::binomial;
use serde_json::json;

use crate::config::ConfigFile;
use crate::report::{
    CheckCertificates, CheckInputs, CheckVerdict, ConstructCertificate, ConstructInputs, ConstructVerdict,
    MethodChoice, RunReport,
};

/// Guards on exhaustive work.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_points: usize,
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_points: 12, max_vertices: 5000 }
    }
}

impl Limits {
    pub fn admit(&self, n: usize, k: usize) -> anyhow::Result<()> {
        ensure!(n <= self.max_points, "{n} points exceeds the limit of {} (see --max-points)", self.max_points);
        let vertices = binomial(n, k);
        ensure!(
            vertices <= self.max_vertices.into(),
            "C({n},{k}) = {vertices} exceeds the limit of {} (see --max-vertices)",
            self.max_vertices
        );
        Ok(())
    }
}

/// Outcome of `check`: the report, plus a description of any disagreement
/// between methods.
pub struct CheckOutcome {
    pub report: RunReport,
    pub preserving: bool,
    pub disagreement: Option<String>,
}

pub fn check(config: &ConfigFile, k: usize, i: usize, method: MethodChoice, limits: Limits) -> anyhow::Result<CheckOutcome> {
    let s = config.to_configuration()?;
    let n = s.len();
    ensure!((1..n).contains(&k), "need 1 <= k <= n-1, got k={k} with n={n}");
    ensure!(i < n, "need i <= n-1, got i={i} with n={n}");
    limits.admit(n, k)?;
    if method != MethodChoice::Direct && !s.spans() {
        bail!("the Gale method needs a configuration that spans R^{}", s.dim());
    }

    let gale_transform = if s.spans() { Some(transform(&s)?) } else { None };
    let characterization = if s.spans() { Some(characterize(&s, k, i)?) } else { None };
    let mut runs = Vec::new();
    if method != MethodChoice::Gale {
        runs.push(skeleton(&s, k, i, Method::Direct, false)?);
    }
    if method != MethodChoice::Direct {
        runs.push(skeleton(&s, k, i, Method::Gale, false)?);
    }
    let preserving = runs[0].preserving;
    let mut disagreement = None;
    if let [direct, gale] = runs.as_slice() {
        if let Some((a, _)) = direct.reports.iter().zip(&gale.reports).find(|(a, b)| a.strictly_preserved != b.strictly_preserved) {
            disagreement = Some(format!("direct and Gale methods disagree on face {:?}", a.face));
        }
    }
    if let Some(c) = &characterization {
        if c.preserving() != preserving && disagreement.is_none() {
            disagreement = Some(format!("characterisation ({:?}) disagrees with the face search", c.clause));
        }
    }
    let verdict = CheckVerdict {
        preserving,
        first_failure: runs[0].first_failure.as_ref().map(|r| r.face.clone()),
        clause: characterization.as_ref().map(|c| c.clause),
        clauses: characterization.as_ref().map(|c| c.clauses.clone()).unwrap_or_default(),
        agree: disagreement.is_none(),
    };
    let mut runs = runs.into_iter();
    let direct = if method != MethodChoice::Gale { runs.next().unwrap().reports } else { vec![] };
    let gale = if method != MethodChoice::Direct { runs.next().unwrap().reports } else { vec![] };
    let certificates = CheckCertificates { gale_transform, direct, gale, characterization };
    let inputs = CheckInputs { config: config.clone(), k, i, method };
    Ok(CheckOutcome { report: RunReport::new("check", inputs, verdict, certificates), preserving, disagreement })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Cyclic { n: usize, d: usize },
    SimplexBarycenter { n: usize },
    Simplex { d: usize },
    DirectSum { a: usize, b: usize },
    Pyramid { a: usize, b: usize, r: usize },
    Multipartite { d: usize, k: usize, n: usize },
}

impl Construction {
    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Cyclic { .. } => "cyclic",
            Construction::SimplexBarycenter { .. } => "simplex-barycenter",
            Construction::Simplex { .. } => "simplex",
            Construction::DirectSum { .. } => "direct-sum",
            Construction::Pyramid { .. } => "pyramid",
            Construction::Multipartite { .. } => "multipartite",
        }
    }

    fn params(&self) -> serde_json::Value {
        match *self {
            Construction::Cyclic { n, d } => json!({ "n": n, "d": d }),
            Construction::SimplexBarycenter { n } => json!({ "n": n }),
            Construction::Simplex { d } => json!({ "d": d }),
            Construction::DirectSum { a, b } => json!({ "a": a, "b": b }),
            Construction::Pyramid { a, b, r } => json!({ "a": a, "b": b, "r": r }),
            Construction::Multipartite { d, k, n } => json!({ "d": d, "k": k, "n": n }),
        }
    }

    pub fn build(&self) -> anyhow::Result<PointConfiguration> {
        Ok(match *self {
            Construction::Cyclic { n, d } => cyclic_config(n, d)?,
            Construction::SimplexBarycenter { n } => simplex_with_barycenter(n)?,
            Construction::Simplex { d } => {
                ensure!(d >= 1, "need d >= 1");
                simplex(d)
            }
            Construction::DirectSum { a, b } => {
                ensure!(a >= 1 && b >= 1, "need a, b >= 1");
                direct_sum(&simplex(a), &simplex(b))?
            }
            Construction::Pyramid { a, b, r } => {
                ensure!(a >= 1 && b >= 1, "need a, b >= 1");
                pyramid(&direct_sum(&simplex(a), &simplex(b))?, r)?
            }
            Construction::Multipartite { d, k, n } => multipartite_lift(d, k, n)?.0,
        })
    }

    /// Re-check the property the construction is known for and report it
    /// with certificates.
    pub fn verify(&self, limits: Limits) -> anyhow::Result<(RunReport, bool)> {
        let s = self.build()?;
        if !matches!(self, Construction::Multipartite { .. }) {
            ensure!(s.len() <= limits.max_points, "{} points exceeds the limit of {}", s.len(), limits.max_points);
        }
        let neighborly = |j: usize, want: bool| (is_j_neighborly_primal(&s, j), want);
        let almost = |j: usize, want: bool| (is_j_almost_neighborly_primal(&s, j), want);
        let exactly_almost = |m: usize| {
            let checks = vec![almost(m, true), almost(m + 1, false)];
            (format!("exactly {m}-almost neighborly"), ConstructCertificate::Neighborliness { checks })
        };
        let (property, cert) = match *self {
            Construction::Cyclic { n, d } => {
                let mut checks = vec![neighborly(d / 2, true)];
                if n >= d + 2 {
                    checks.push(neighborly(d / 2 + 1, false));
                }
                (format!("exactly {}-neighborly", d / 2), ConstructCertificate::Neighborliness { checks })
            }
            Construction::SimplexBarycenter { .. } => {
                ("not 1-almost neighborly".to_string(), ConstructCertificate::Neighborliness { checks: vec![almost(1, false)] })
            }
            Construction::Simplex { d } => {
                (format!("{d}-neighborly"), ConstructCertificate::Neighborliness { checks: vec![neighborly(d, true)] })
            }
            Construction::DirectSum { a, b } => exactly_almost(a.min(b)),
            Construction::Pyramid { a, b, r } => exactly_almost(a.min(b) + r),
            Construction::Multipartite { d, k, n } => {
                let (s, h) = multipartite_lift(d, k, n)?;
                ensure!(h.edges.len() <= limits.max_vertices, "{} edges exceeds the limit of {}", h.edges.len(), limits.max_vertices);
                let report = is_convex_embedding(&s, &h)?;
                let property = format!("{} barycenters in convex position", h.edges.len());
                (property, ConstructCertificate::Embedding { hypergraph: h, report })
            }
        };
        let holds = match &cert {
            ConstructCertificate::Embedding { report, .. } => report.convex,
            ConstructCertificate::Neighborliness { checks } => checks.iter().all(|(c, want)| c.holds == *want),
        };
        let inputs = ConstructInputs { kind: self.kind().into(), params: self.params(), config: ConfigFile::from_configuration(&s) };
        Ok((RunReport::new("construct", inputs, ConstructVerdict { property, holds }, cert), holds))
    }
}
