//! The `.mtc` modular-data file format.
//!
//! A TOML document with the keys
//!
//! ```toml
//! rank = 2
//! labels = ["1", "s"]          # optional, default x1, x2, ...
//! unit = "1"                   # optional label or 1-based index
//! S = [["1/2*E(8) - 1/2*E(8)^3", "1/2*E(8) - 1/2*E(8)^3"],
//!      ["1/2*E(8) - 1/2*E(8)^3", "-1/2*E(8) + 1/2*E(8)^3"]]
//! T = ["1", "E(4)"]
//! ```
//!
//! Every entry is a cyclotomic expression (see [`super::parse_expr`]);
//! floating point literals are not accepted.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::expr::parse_expr;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modular_data::ModularData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnitSelector {
    Index(usize),
    Label(String),
}

/// Raw contents of an `.mtc` file before any expression is parsed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularDataFile {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<UnitSelector>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<String>>,
    #[serde(rename = "T")]
    pub t: Vec<String>,
}

fn located(e: Error, place: &str) -> Error {
    match e {
        Error::Syntax { position, expected } => Error::Syntax {
            position,
            expected: format!("{expected} in {place}"),
        },
        Error::Domain(m) => Error::Domain(format!("{m} in {place}")),
        other => other,
    }
}

impl ModularDataFile {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Syntax {
            position: e.span().map_or(0, |s| s.start),
            expected: e.message().trim().to_string(),
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain data serializes")
    }

    /// Text form of existing modular data.
    pub fn from_modular_data(md: &ModularData) -> Self {
        let r = md.rank();
        ModularDataFile {
            rank: r,
            labels: Some(md.labels().to_vec()),
            unit: Some(UnitSelector::Label(md.label(md.unit()).to_string())),
            s: (0..r)
                .map(|i| md.s().row(i).iter().map(ToString::to_string).collect())
                .collect(),
            t: md.theta().iter().map(|t| t.to_cyclotomic().to_string()).collect(),
        }
    }

    /// Parse every expression and build the modular data, without validation.
    pub fn to_modular_data(&self) -> Result<ModularData> {
        let r = self.rank;
        if r == 0 {
            return Err(Error::Dimension("rank must be positive".into()));
        }
        if self.s.len() != r {
            return Err(Error::Dimension(format!("S has {} rows, rank is {r}", self.s.len())));
        }
        if let Some(i) = self.s.iter().position(|row| row.len() != r) {
            return Err(Error::Dimension(format!(
                "S row {} has {} entries, rank is {r}",
                i + 1,
                self.s[i].len()
            )));
        }
        if self.t.len() != r {
            return Err(Error::Dimension(format!("T has {} entries, rank is {r}", self.t.len())));
        }
        let labels = match &self.labels {
            Some(l) if l.len() != r => {
                return Err(Error::Dimension(format!("{} labels, rank is {r}", l.len())))
            }
            Some(l) => l.clone(),
            None => (1..=r).map(|i| format!("x{i}")).collect(),
        };
        let mut entries = Vec::with_capacity(r * r);
        for (i, row) in self.s.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                entries.push(parse_expr(e).map_err(|err| located(err, &format!("S[{}][{}]", i + 1, j + 1)))?);
            }
        }
        let s = Matrix::new(r, r, entries)?;
        let t: Vec<Cyclotomic> = self
            .t
            .iter()
            .enumerate()
            .map(|(i, e)| parse_expr(e).map_err(|err| located(err, &format!("T[{}]", i + 1))))
            .collect::<Result<_>>()?;
        let unit = match &self.unit {
            None => None,
            Some(UnitSelector::Index(i)) if (1..=r).contains(i) => Some(i - 1),
            Some(UnitSelector::Index(i)) => {
                return Err(Error::Domain(format!("unit index {i} outside 1..={r}")))
            }
            Some(UnitSelector::Label(l)) => Some(
                labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::Domain(format!("unit label `{l}` not among the labels")))?,
            ),
        };
        ModularData::construct(labels, s, &t, unit)
    }
}

/// Parse `.mtc` text into validated modular data.
pub fn parse_file(text: &str) -> Result<ModularData> {
    let md = ModularDataFile::from_toml(text)?.to_modular_data()?;
    md.validate().into_result()?;
    Ok(md)
}

pub fn read_file(path: &Path) -> Result<ModularData> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_file(&text)
}

/// Render modular data in the `.mtc` format.
pub fn write_file_string(md: &ModularData) -> String {
    ModularDataFile::from_modular_data(md).to_toml()
}
