//! Machine-readable run reports and their re-validation.

use anyhow::{bail, Context};
use convexdim_core::embedding::{EmbeddingReport, Hypergraph, PreservationReport};
use convexdim_core::gale::{GaleTransform, NeighborlinessCertificate};
use convexdim_core::hypersimplex::{Hypersimplex, HypersimplexFace};
use convexdim_core::theorems::{Characterization, Clause};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::ConfigFile;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub verdict: Value,
    pub certificates: Value,
    /// Wall-clock time; only present when asked for, since it breaks
    /// byte-for-byte reproducibility.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, inputs: impl Serialize, verdict: impl Serialize, certificates: impl Serialize) -> Self {
        RunReport {
            command: command.into(),
            inputs: serde_json::to_value(inputs).expect("inputs serialise"),
            verdict: serde_json::to_value(verdict).expect("verdict serialises"),
            certificates: serde_json::to_value(certificates).expect("certificates serialise"),
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialises");
        out.push('\n');
        out
    }

    pub fn part<T: DeserializeOwned>(value: &Value, what: &str) -> anyhow::Result<T> {
        serde_json::from_value(value.clone()).with_context(|| format!("malformed {what}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    Direct,
    Gale,
    Both,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckInputs {
    pub config: ConfigFile,
    pub k: usize,
    pub i: usize,
    pub method: MethodChoice,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub preserving: bool,
    pub first_failure: Option<HypersimplexFace>,
    /// `None` when the configuration does not span its space.
    pub clause: Option<Clause>,
    pub clauses: Vec<Clause>,
    /// Every method and the characterisation reached the same verdict.
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckCertificates {
    pub gale_transform: Option<GaleTransform>,
    pub direct: Vec<PreservationReport>,
    pub gale: Vec<PreservationReport>,
    pub characterization: Option<Characterization>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructInputs {
    pub kind: String,
    pub params: Value,
    pub config: ConfigFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructVerdict {
    pub property: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructCertificate {
    /// The barycenters of the listed edges are distinct vertices.
    Embedding { hypergraph: Hypergraph, report: EmbeddingReport },
    /// Each certificate's verdict must equal the paired expectation.
    Neighborliness { checks: Vec<(NeighborlinessCertificate, bool)> },
}

/// Re-validate a report by substitution: every certificate is checked
/// against the inputs, and the verdict against the certificates. No linear
/// program is solved. Returns a short description of what was checked.
pub fn verify(report: &RunReport) -> anyhow::Result<String> {
    match report.command.as_str() {
        "check" => verify_check(report),
        "construct" => verify_construct(report),
        other => bail!("reports of `{other}` carry no certificates"),
    }
}

fn verify_check(report: &RunReport) -> anyhow::Result<String> {
    let inputs: CheckInputs = RunReport::part(&report.inputs, "inputs")?;
    let verdict: CheckVerdict = RunReport::part(&report.verdict, "verdict")?;
    let certs: CheckCertificates = RunReport::part(&report.certificates, "certificates")?;
    let s = inputs.config.to_configuration()?;
    let (k, i) = (inputs.k, inputs.i);
    let h = Hypersimplex::new(s.len(), k)?;
    let faces: Vec<HypersimplexFace> = (0..=i).flat_map(|dim| h.i_faces(dim)).collect();

    if let Some(g) = &certs.gale_transform {
        if !g.certifies(&s) {
            bail!("the Gale transform is not a Gale transform of the configuration");
        }
    }
    let mut verdicts = Vec::new();
    for (name, reports, wanted) in [
        ("direct", &certs.direct, inputs.method != MethodChoice::Gale),
        ("gale", &certs.gale, inputs.method != MethodChoice::Direct),
    ] {
        if !wanted {
            if !reports.is_empty() {
                bail!("unexpected {name} reports");
            }
            continue;
        }
        if reports.iter().map(|r| &r.face).ne(faces.iter()) {
            bail!("{name} reports do not cover the faces of dimension <= {i} in order");
        }
        for r in reports {
            if !r.certifies(&s, k, certs.gale_transform.as_ref()) {
                bail!("{name} certificate for face {:?} does not check out", r.face);
            }
        }
        let failure = reports.iter().find(|r| !r.strictly_preserved).map(|r| r.face.clone());
        verdicts.push((failure.is_none(), failure));
    }
    let (preserving, first_failure) = verdicts.first().cloned().context("no face reports")?;
    let mut agree = verdicts.iter().all(|(p, _)| *p == preserving);
    match (&certs.characterization, &certs.gale_transform) {
        (Some(c), Some(g)) => {
            if !c.certifies(&s, g) {
                bail!("the characterisation evidence does not check out");
            }
            agree &= c.preserving() == preserving;
            if verdict.clause != Some(c.clause) || verdict.clauses != c.clauses {
                bail!("verdict clauses differ from the characterisation");
            }
        }
        (None, _) if !s.spans() => {
            if verdict.clause.is_some() {
                bail!("clause reported for a non-spanning configuration");
            }
        }
        _ => bail!("missing characterisation"),
    }
    if verdict.preserving != preserving || verdict.first_failure != first_failure || verdict.agree != agree {
        bail!("verdict does not follow from the certificates");
    }
    let count = certs.direct.len() + certs.gale.len();
    Ok(format!("{count} face certificates and the verdict check out"))
}

fn verify_construct(report: &RunReport) -> anyhow::Result<String> {
    let inputs: ConstructInputs = RunReport::part(&report.inputs, "inputs")?;
    let verdict: ConstructVerdict = RunReport::part(&report.verdict, "verdict")?;
    let cert: ConstructCertificate = RunReport::part(&report.certificates, "certificates")?;
    let s = inputs.config.to_configuration()?;
    let holds = match &cert {
        ConstructCertificate::Embedding { hypergraph, report } => {
            if hypergraph.n != s.len() || !report.certifies(&s, hypergraph) {
                bail!("embedding certificates do not check out");
            }
            report.convex
        }
        ConstructCertificate::Neighborliness { checks } => {
            for (c, _) in checks {
                if c.route != convexdim_core::gale::Route::Primal || !c.certifies(&s, None) {
                    bail!("neighborliness certificate at level {} does not check out", c.level);
                }
            }
            checks.iter().all(|(c, want)| c.holds == *want)
        }
    };
    if holds != verdict.holds {
        bail!("verdict does not follow from the certificates");
    }
    Ok(format!("certificates for `{}` check out", verdict.property))
}
