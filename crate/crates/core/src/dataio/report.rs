//! Rendering of results as aligned text tables or as JSON documents.
//!
//! The JSON schema for spectra is
//!
//! ```text
//! { "context": { "kind", "object", "n", "l"?, "m"?, "crossing"? },
//!   "rows": [ { "index": 1-based, "label", "hom_dim",
//!               "entries": [ { "eigenvalue": "E(q)^k", "multiplicity": int } ] } ] }
//! ```
//!
//! Eigenvalues are written in the expression syntax of [`super::parse_expr`].

use serde::{Deserialize, Serialize};

use super::expr::parse_expr;
use crate::cyclo::RootOfUnity;
use crate::error::{Error, Result};
use crate::fusion_ring::ObjectMultiset;
use crate::indicators::IndicatorTable;
use crate::modular_data::ValidationReport;
use crate::spectra::{
    OperatorKind, SpectrumContext, SpectrumEntry, SpectrumReport, SpectrumRow,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Structured,
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    eigenvalue: String,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize)]
struct RowDoc {
    index: usize,
    label: String,
    hom_dim: u64,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
struct SpectrumDoc {
    context: SpectrumContext,
    rows: Vec<RowDoc>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn serialize_spectrum(sr: &SpectrumReport) -> String {
    let doc = SpectrumDoc {
        context: sr.context.clone(),
        rows: sr
            .rows
            .iter()
            .map(|r| RowDoc {
                index: r.index + 1,
                label: r.label.clone(),
                hom_dim: r.hom_dim,
                entries: r
                    .entries
                    .iter()
                    .map(|e| EntryDoc {
                        eigenvalue: e.eigenvalue.to_expr_string(),
                        multiplicity: e.multiplicity,
                    })
                    .collect(),
            })
            .collect(),
    };
    to_json(&doc)
}

/// Inverse of [`serialize_spectrum`].
pub fn parse_spectrum(text: &str) -> Result<SpectrumReport> {
    let doc: SpectrumDoc = serde_json::from_str(text).map_err(|e| Error::Syntax {
        position: e.column(),
        expected: e.to_string(),
    })?;
    let mut rows = Vec::with_capacity(doc.rows.len());
    for r in doc.rows {
        let mut entries = Vec::with_capacity(r.entries.len());
        for e in r.entries {
            let value = parse_expr(&e.eigenvalue)?;
            let eigenvalue = RootOfUnity::from_cyclotomic(&value).ok_or_else(|| {
                Error::Data(format!("eigenvalue {} is not a root of unity", e.eigenvalue))
            })?;
            entries.push(SpectrumEntry {
                eigenvalue,
                multiplicity: e.multiplicity,
            });
        }
        rows.push(SpectrumRow {
            index: r.index.checked_sub(1).ok_or_else(|| Error::Data("row index 0".into()))?,
            label: r.label,
            hom_dim: r.hom_dim,
            entries,
        });
    }
    Ok(SpectrumReport {
        context: doc.context,
        rows,
    })
}

fn align(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join(" | ").trim_end())
    };
    let mut out = line(header.to_vec());
    let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&format!("{}\n", rule.join("-+-")));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn describe(ctx: &SpectrumContext) -> String {
    let op = match ctx.kind {
        OperatorKind::Rotation => format!("rotation on Hom(b, {}^{})", ctx.object, ctx.n),
        OperatorKind::JucysMurphy => format!(
            "Jucys-Murphy braid A^{}_{{{},{}}} on {}^{}",
            ctx.n,
            ctx.l.unwrap_or(0),
            ctx.m.unwrap_or(0),
            ctx.object,
            ctx.n
        ),
        OperatorKind::Sigma => format!("braid generator on {0} (x) {0}", ctx.object),
        OperatorKind::SigmaSigmaSigma => format!("s1 s2 s1 on {0} (x) {0} (x) {0}", ctx.object),
    };
    match ctx.crossing {
        Some(c) => format!("# {op}, {} crossing\n", serde_json::to_value(c).unwrap().as_str().unwrap()),
        None => format!("# {op}\n"),
    }
}

/// The three-column `object | possible eigenvalues | multiplicities` table.
pub fn render_spectrum_table(sr: &SpectrumReport) -> String {
    let rows: Vec<Vec<String>> = sr
        .rows
        .iter()
        .map(|r| {
            let ev: Vec<String> = r.entries.iter().map(|e| e.eigenvalue.to_pi_string()).collect();
            let mult: Vec<String> = r.entries.iter().map(|e| e.multiplicity.to_string()).collect();
            vec![
                r.label.clone(),
                format!("({})", ev.join(", ")),
                format!("({})", mult.join(",")),
            ]
        })
        .collect();
    describe(&sr.context) + &align(&["object", "possible eigenvalues", "multiplicities"], &rows)
}

pub fn render_spectrum(sr: &SpectrumReport, format: Format) -> String {
    match format {
        Format::Table => render_spectrum_table(sr),
        Format::Structured => serialize_spectrum(sr),
    }
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    m: i64,
    l: i64,
    rows: Vec<String>,
    columns: Vec<String>,
    values: Vec<Vec<String>>,
}

/// An indicator table with row labels (center simples) and column labels
/// (base simples).
pub fn render_indicators(
    t: &IndicatorTable,
    row_labels: &[String],
    col_labels: &[String],
    format: Format,
) -> String {
    let values: Vec<Vec<String>> = t
        .values
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    match format {
        Format::Structured => to_json(&TableDoc {
            m: t.m,
            l: t.l,
            rows: row_labels.to_vec(),
            columns: col_labels.to_vec(),
            values,
        }),
        Format::Table => {
            let mut header = vec![String::from("b \\ a")];
            header.extend(col_labels.iter().cloned());
            let rows: Vec<Vec<String>> = row_labels
                .iter()
                .zip(values)
                .map(|(l, v)| std::iter::once(l.clone()).chain(v).collect())
                .collect();
            let h: Vec<&str> = header.iter().map(String::as_str).collect();
            format!("# indicators nu_{{{},{}}}\n", t.m, t.l) + &align(&h, &rows)
        }
    }
}

pub fn render_validation(v: &ValidationReport, format: Format) -> String {
    match format {
        Format::Structured => to_json(v),
        Format::Table => {
            let rows: Vec<Vec<String>> = v
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        if c.passed { "pass" } else { "FAIL" }.to_string(),
                        c.detail.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            align(&["check", "result", "detail"], &rows)
        }
    }
}

/// `a (x) b = 1 x1 + 2 x2 + ...` written with `+`.
pub fn render_decomposition(lhs: &str, m: &ObjectMultiset, labels: &[String]) -> String {
    let terms: Vec<String> = m
        .entries()
        .into_iter()
        .map(|(i, k)| if k == 1 { labels[i].clone() } else { format!("{k}{}", labels[i]) })
        .collect();
    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
    format!("{lhs} = {rhs}")
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    object: String,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize)]
struct ProductDoc {
    left: String,
    right: String,
    decomposition: Vec<TermDoc>,
}

/// Structured form of a list of fusion products `(left, right, result)`.
pub fn serialize_products(products: &[(String, String, ObjectMultiset)], labels: &[String]) -> String {
    let docs: Vec<ProductDoc> = products
        .iter()
        .map(|(a, b, m)| ProductDoc {
            left: a.clone(),
            right: b.clone(),
            decomposition: m
                .entries()
                .into_iter()
                .map(|(i, k)| TermDoc {
                    object: labels[i].clone(),
                    multiplicity: k,
                })
                .collect(),
        })
        .collect();
    to_json(&docs)
}
