use std::path::PathBuf;

use serde::Deserialize;

use qva_core::arith::HalfInt;
use qva_core::deformation::{preset, QSeriesSpec};
use qva_core::qalgebra::QSpec;

pub const DEFAULT_ORDER: i64 = 8;

/// Raw config file contents; every field may be overridden on the command line.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub l: Option<usize>,
    pub q: Option<Vec<Vec<String>>>,
    pub p: Option<Vec<Vec<Vec<String>>>>,
    pub order: Option<i64>,
    pub suites: Option<Vec<String>>,
    pub max_weight: Option<Weight>,
    pub mode_radius: Option<i64>,
    pub box_radius: Option<i64>,
    pub report_path: Option<PathBuf>,
}

/// A weight written either as a JSON number or a string such as `"3/2"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Weight {
    Int(i64),
    Text(String),
}

impl Weight {
    pub fn resolve(&self) -> Result<HalfInt, String> {
        match self {
            Weight::Int(n) => Ok(HalfInt::from_int(*n)),
            Weight::Text(t) => t.parse().map_err(|e| format!("max_weight: {e}")),
        }
    }
}

impl Config {
    pub fn load(path: &std::path::Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Builds the parameter set, preferring a named preset when given.
    pub fn spec(&self, preset_name: Option<&str>) -> Result<QSeriesSpec, String> {
        let order = self.order.unwrap_or(DEFAULT_ORDER);
        if order < 1 {
            return Err("order must be positive".into());
        }
        if let Some(name) = preset_name {
            return preset(name, order).map_err(|e| e.to_string());
        }
        let q = self.q.as_ref().ok_or("config has no q matrix and no preset was given")?;
        let l = self.l.unwrap_or(q.len());
        if q.len() != l || q.iter().any(|r| r.len() != l) {
            return Err(format!("q must be a {l} x {l} matrix"));
        }
        let q = QSpec::from_strings(q).map_err(|e| e.to_string())?;
        match &self.p {
            None => Ok(QSeriesSpec::constant(q, order)),
            Some(p) => {
                if p.len() != l || p.iter().any(|r| r.len() != l) {
                    return Err(format!("p must be a {l} x {l} matrix of coefficient lists"));
                }
                QSeriesSpec::from_strings(q, p, order).map_err(|e| e.to_string())
            }
        }
    }
}
