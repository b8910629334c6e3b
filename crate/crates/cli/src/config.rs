//! The JSON point-configuration file format.

use std::path::Path;

use anyhow::{bail, Context};
use convexdim_core::embedding::PointConfiguration;
use convexdim_core::Rational;
use serde::{Deserialize, Serialize};

/// `{"dim": 2, "points": [["0", "1/2"], [1, 0]], "labels": ["a", "b"]}`.
/// Coordinates are written as `"p/q"` strings and may be read back from
/// strings or JSON integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub dim: usize,
    #[serde(with = "convexdim_core::text")]
    pub points: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ConfigFile {
    pub fn from_configuration(s: &PointConfiguration) -> Self {
        ConfigFile { dim: s.dim(), points: s.points().to_vec(), labels: None }
    }

    pub fn to_configuration(&self) -> anyhow::Result<PointConfiguration> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.points.len() {
                bail!("{} labels for {} points", labels.len(), self.points.len());
            }
        }
        Ok(PointConfiguration::new(self.dim, self.points.clone())?)
    }

    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let file: ConfigFile = serde_json::from_str(text).context("malformed configuration file")?;
        file.to_configuration()?;
        Ok(file)
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("configuration serialises");
        out.push('\n');
        out
    }
}
