//! JSON file formats and number formatting for reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::correspondence::Correspondence;
use crate::error::{Error, Result};
use crate::point_set::PointSet1D;

/// A pair of point lists with free-form metadata (generator, seed, ...).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl Instance {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        Self {
            x,
            y,
            meta: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    pub fn sets(&self) -> Result<(PointSet1D, PointSet1D)> {
        Ok((PointSet1D::new(self.x.clone())?, PointSet1D::new(self.y.clone())?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointsFile {
    pub points: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrFile {
    pub pairs: Vec<(usize, usize)>,
}

impl CorrFile {
    /// Validates against the sizes of the two (sorted) sets.
    pub fn into_correspondence(self, n: usize, m: usize) -> Result<Correspondence> {
        Correspondence::new(self.pairs, n, m)
    }
}

impl From<&Correspondence> for CorrFile {
    fn from(c: &Correspondence) -> Self {
        Self {
            pairs: c.pairs().to_vec(),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Reads a point set from either a points file or a bare JSON array.
pub fn read_points(path: &Path) -> Result<PointSet1D> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        File(PointsFile),
        Bare(Vec<f64>),
    }
    let values = match read_json::<Either>(path)? {
        Either::File(f) => f.points,
        Either::Bare(v) => v,
    };
    PointSet1D::new(values)
}

pub fn read_correspondence(path: &Path, n: usize, m: usize) -> Result<Correspondence> {
    read_json::<CorrFile>(path)?.into_correspondence(n, m)
}

/// Decimal rendering with at most `digits` significant digits, trailing zeros
/// trimmed. Non-finite values render as `NaN`, `inf`, `-inf`.
pub fn format_sig(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".into();
    }
    let exp = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - exp).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.truncate(s.trim_end_matches('0').trim_end_matches('.').len());
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// [`format_sig`] with the report precision of 12 digits.
pub fn fmt12(v: f64) -> String {
    format_sig(v, 12)
}
