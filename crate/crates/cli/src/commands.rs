use std::path::{Path, PathBuf};

use mtc_core::cyclo::field::gcd;
use mtc_core::dataio::{
    catalog, read_file, render_decomposition, render_indicators, render_spectrum, render_validation,
    serialize_products, Format, ModularDataFile,
};
use mtc_core::{
    braid_jm_spectrum, gfs_matrix, rotation_report, sigma3_spectrum_n2, sigma_spectrum_n2, CenterData, Crossing,
    Error, FusionRing, IndicatorEngine, IndicatorTable, Matrix, ModularData, ObjectMultiset, Result,
};
use serde_json::json;

use crate::{Command, Common, FormatArg, Outcome};

fn format(c: &Common) -> Format {
    match c.format {
        FormatArg::Table => Format::Table,
        FormatArg::Structured => Format::Structured,
    }
}

/// Reads and validates modular data.
fn load(input: &str) -> Result<ModularData> {
    match input.strip_prefix("catalog:") {
        Some(name) => catalog(name),
        None => read_file(Path::new(input)),
    }
}

/// Reads modular data without running the modular relations, so that
/// `validate` can report every failing check.
fn load_unchecked(input: &str) -> Result<ModularData> {
    match input.strip_prefix("catalog:") {
        Some(name) => catalog(name),
        None => {
            let text = std::fs::read_to_string(input).map_err(|e| Error::Io(format!("{input}: {e}")))?;
            ModularDataFile::from_toml(&text)?.to_modular_data()
        }
    }
}

fn select(md: &ModularData, selector: &str) -> Result<usize> {
    md.find(selector)
        .ok_or_else(|| Error::Domain(format!("no simple object `{selector}`")))
}

pub fn dispatch(cmd: &Command) -> Result<(Outcome, Option<&PathBuf>)> {
    let (common, outcome) = match cmd {
        Command::Validate(c) => (c, validate(c)?),
        Command::Fusion { common, object, with } => (common, fusion(common, object.as_deref(), with.as_deref())?),
        Command::Indicators { common, n, k, object } => (common, indicators(common, *n, *k, object.as_deref())?),
        Command::Rotation { common, object, n } => {
            let md = load(&common.input)?;
            let a = select(&md, object)?;
            if *n == 0 {
                return Err(Error::Domain("--n must be positive".into()));
            }
            let cd = CenterData::of(&md)?;
            let report = rotation_report(&IndicatorEngine::new(&cd), a, *n)?;
            (common, ok(render_spectrum(&report, format(common))))
        }
        Command::Braid { common, object, n, l, m, under } => {
            let md = load(&common.input)?;
            let a = select(&md, object)?;
            let crossing = if *under { Crossing::Under } else { Crossing::Over };
            let report = braid_jm_spectrum(&md, a, *n, *l, *m, crossing)?;
            (common, ok(render_spectrum(&report, format(common))))
        }
        Command::Report { common, object, braid_sigma, braid_sss } => {
            if !braid_sigma && !braid_sss {
                return Err(Error::Domain("report needs --braid-sigma or --braid-sss".into()));
            }
            (common, report(common, object, *braid_sss)?)
        }
    };
    Ok((outcome, common.out.as_ref()))
}

fn ok(text: String) -> Outcome {
    Outcome { text, passed: true }
}

fn validate(c: &Common) -> Result<Outcome> {
    let md = load_unchecked(&c.input)?;
    let report = md.validate();
    let passed = report.passed();
    let invariants = if passed { md.derive_invariants().ok() } else { None };
    let text = match format(c) {
        Format::Table => {
            let mut text = render_validation(&report, Format::Table);
            if let Some(inv) = &invariants {
                text.push_str(&format!("\nrank: {}\n", md.rank()));
                text.push_str(&format!("conductor: {}\n", inv.conductor));
                text.push_str(&format!("central charge: {}\n", inv.central_charge.to_expr_string()));
                text.push_str(&format!("global dimension: {}\n", inv.global_dim));
                for (label, d) in md.labels().iter().zip(&inv.dims) {
                    text.push_str(&format!("d({label}) = {d}\n"));
                }
            }
            text
        }
        Format::Structured => {
            let mut doc = serde_json::to_value(&report).expect("plain data serializes");
            doc["passed"] = json!(passed);
            doc["invariants"] = match &invariants {
                Some(inv) => json!({
                    "rank": md.rank(),
                    "conductor": inv.conductor,
                    "central_charge": inv.central_charge.to_expr_string(),
                    "global_dimension": inv.global_dim.to_string(),
                    "dimensions": inv.dims.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
                None => json!(null),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
    };
    Ok(Outcome { text, passed })
}

fn fusion(c: &Common, object: Option<&str>, with: Option<&str>) -> Result<Outcome> {
    let md = load(&c.input)?;
    let fr = FusionRing::verlinde(&md)?;
    let r = md.rank();
    let lefts = match object {
        Some(s) => vec![select(&md, s)?],
        None => (0..r).collect(),
    };
    let rights = match with {
        Some(s) => vec![select(&md, s)?],
        None => (0..r).collect(),
    };
    let mut products = Vec::new();
    for &a in &lefts {
        for &b in &rights {
            let x = fr.fuse(&ObjectMultiset::simple(r, a), &ObjectMultiset::simple(r, b));
            products.push((md.label(a).to_string(), md.label(b).to_string(), x));
        }
    }
    let text = match format(c) {
        Format::Structured => serialize_products(&products, md.labels()),
        Format::Table => products
            .iter()
            .map(|(a, b, x)| render_decomposition(&format!("{a} (x) {b}"), x, md.labels()) + "\n")
            .collect(),
    };
    Ok(ok(text))
}

fn indicators(c: &Common, n: u32, k: i64, object: Option<&str>) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Domain("--n must be positive".into()));
    }
    let md = load(&c.input)?;
    let cd = CenterData::of(&md)?;
    let columns: Vec<usize> = match object {
        Some(s) => vec![select(&md, s)?],
        None => (0..md.rank()).collect(),
    };
    // Coprime (n, k) goes straight through the SL2(Z) word; anything else
    // needs the Galois reduction.
    let full = if gcd(n as u64, k.unsigned_abs()) == 1 {
        gfs_matrix(&cd, n as i64, k)?.values
    } else {
        let engine = IndicatorEngine::new(&cd);
        let mut values = Matrix::zeros(cd.rank(), md.rank());
        for b in 0..cd.rank() {
            for &a in &columns {
                values.set(b, a, engine.nu(b, n, k, &ObjectMultiset::simple(md.rank(), a))?);
            }
        }
        values
    };
    let values = Matrix::from_fn(cd.rank(), columns.len(), |b, j| full.get(b, columns[j]).clone());
    let table = IndicatorTable { m: n as i64, l: k, values };
    let cols: Vec<String> = columns.iter().map(|&a| md.label(a).to_string()).collect();
    Ok(ok(render_indicators(&table, cd.md().labels(), &cols, format(c))))
}

fn report(c: &Common, object: &str, triple: bool) -> Result<Outcome> {
    let md = load(&c.input)?;
    let fr = FusionRing::verlinde(&md)?;
    let a = select(&md, object)?;
    let (power, spectrum) = if triple {
        (3, sigma3_spectrum_n2(&md, &fr, a)?)
    } else {
        (2, sigma_spectrum_n2(&md, &fr, a)?)
    };
    let text = match format(c) {
        Format::Structured => render_spectrum(&spectrum, Format::Structured),
        Format::Table => {
            let label = md.label(a);
            let lhs = vec![label; power].join(" (x) ");
            let decomposition = fr.power_decompose(a, power as u32);
            format!(
                "{}\n\n{}",
                render_decomposition(&lhs, &decomposition, md.labels()),
                render_spectrum(&spectrum, Format::Table)
            )
        }
    };
    Ok(ok(text))
}
