//! Eigenvalues with multiplicities of rotation operators on
//! `Hom(b, a^{(x) n})` and of Jucys-Murphy braids acting on `a^{(x) n}`.

use serde::{Deserialize, Serialize};

use crate::center::CenterData;
use crate::cyclo::{recognize, CycloSum, Cyclotomic, Rational, RootOfUnity};
use crate::error::{Error, Result};
use crate::fusion_ring::{FusionRing, ObjectMultiset};
use crate::indicators::{nu2_direct, IndicatorEngine};
use crate::modular_data::ModularData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    /// Rotation `rho^b_{n,a}` on `Hom(b, a^n)`, `b` a center simple.
    Rotation,
    /// Jucys-Murphy braid `A^n_{l,m}`.
    JucysMurphy,
    /// A braid generator `sigma_i` on `a (x) a`.
    Sigma,
    /// `sigma_i sigma_{i+1} sigma_i` on `a (x) a (x) a`.
    SigmaSigmaSigma,
}

/// Over-crossings use the data as given; under-crossings use the reversed
/// braiding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Crossing {
    #[default]
    Over,
    Under,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumContext {
    pub kind: OperatorKind,
    /// Label of the object `a`.
    pub object: String,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub crossing: Option<Crossing>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub eigenvalue: RootOfUnity,
    pub multiplicity: u64,
}

/// Candidates and multiplicities on one hom space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    /// 0-based index of the simple `b` labelling the hom space.
    pub index: usize,
    pub label: String,
    pub hom_dim: u64,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumRow {
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn multiplicity_of(&self, lambda: RootOfUnity) -> u64 {
        self.entries
            .iter()
            .filter(|e| e.eigenvalue == lambda)
            .map(|e| e.multiplicity)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub context: SpectrumContext,
    pub rows: Vec<SpectrumRow>,
}

impl SpectrumReport {
    /// Every eigenvalue with positive multiplicity on some row, sorted.
    pub fn spectrum(&self) -> Vec<RootOfUnity> {
        let mut out: Vec<RootOfUnity> = self
            .rows
            .iter()
            .flat_map(|r| r.entries.iter())
            .filter(|e| e.multiplicity > 0)
            .map(|e| e.eigenvalue)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// `P^b_{n,a}(x) = sum_k (nu^b_{n,k}(a) / n) x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityPolynomial {
    pub n: u32,
    pub coeffs: Vec<Cyclotomic>,
}

impl MultiplicityPolynomial {
    pub fn from_indicators(nu: &[Cyclotomic]) -> Self {
        let n = nu.len() as u32;
        let inv = Rational::from_signeds(1, n.max(1) as i64);
        MultiplicityPolynomial {
            n,
            coeffs: nu.iter().map(|x| x.scale(&inv)).collect(),
        }
    }

    pub fn eval_root(&self, x: RootOfUnity) -> Cyclotomic {
        let mut acc = CycloSum::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            let p = x.pow(k as i64);
            acc.add_shifted(c, p.order(), p.exponent() as i64);
        }
        acc.finish()
    }

    /// `P(lambda^-1)`, required to be a non-negative integer.
    pub fn multiplicity(&self, lambda: RootOfUnity) -> Result<u64> {
        let v = self.eval_root(lambda.inv());
        recognize(&v).as_count().ok_or_else(|| {
            Error::Integrality(format!(
                "multiplicity of {} evaluates to {v}",
                lambda.to_pi_string()
            ))
        })
    }
}

/// `lambda_0 zeta_n^j` for `j = 1..=n`, with `lambda_0` the principal
/// `n`-th root of `target`: all solutions of `lambda^n = target`.
pub fn nth_roots(target: RootOfUnity, n: u32) -> Vec<RootOfUnity> {
    let base = target.principal_root(n);
    (1..=n as i64)
        .map(|j| base * RootOfUnity::new(n, j).expect("positive order"))
        .collect()
}

fn check_total(row: &SpectrumRow) -> Result<()> {
    if row.total() != row.hom_dim {
        return Err(Error::Internal(format!(
            "multiplicities on {} sum to {} but the hom space has dimension {}",
            row.label,
            row.total(),
            row.hom_dim
        )));
    }
    Ok(())
}

/// Spectrum of `rho^b_{n,a}` on `Hom(b, a^{(x) n})` for a center simple `b`.
pub fn rotation_spectrum(
    engine: &IndicatorEngine<'_>,
    b: usize,
    a: &ObjectMultiset,
    n: u32,
) -> Result<SpectrumRow> {
    let cd = engine.center();
    let poly = MultiplicityPolynomial::from_indicators(&engine.nu_sequence(b, n, a)?);
    let entries = nth_roots(cd.theta(b).inv(), n)
        .into_iter()
        .map(|lambda| {
            Ok(SpectrumEntry {
                eigenvalue: lambda,
                multiplicity: poly.multiplicity(lambda)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let row = SpectrumRow {
        index: b,
        label: cd.md().label(b).to_string(),
        hom_dim: engine.hom_dim(b, a, n),
        entries,
    };
    check_total(&row)?;
    Ok(row)
}

/// Rotation spectra on every center simple.
pub fn rotation_report(engine: &IndicatorEngine<'_>, a: usize, n: u32) -> Result<SpectrumReport> {
    let cd = engine.center();
    let x = ObjectMultiset::simple(cd.base_rank(), a);
    let rows = (0..cd.rank())
        .map(|b| rotation_spectrum(engine, b, &x, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumReport {
        context: SpectrumContext {
            kind: OperatorKind::Rotation,
            object: cd.base().label(a).to_string(),
            n,
            l: None,
            m: None,
            crossing: None,
        },
        rows,
    })
}

/// `K^b_{n,a}(omega) = sum_c [omega^n = theta_c^-1] dim Hom(c, b) P^c_{n,a}(omega^-1)`
/// for a semisimple center object `b`.
pub fn semisimple_k(
    engine: &IndicatorEngine<'_>,
    b: &ObjectMultiset,
    a: &ObjectMultiset,
    n: u32,
    omega: RootOfUnity,
) -> Result<u64> {
    let cd = engine.center();
    if b.rank() != cd.rank() {
        return Err(Error::Dimension("center object has the wrong rank".into()));
    }
    let mut total = 0;
    for (c, mult) in b.entries() {
        if omega.pow(n as i64) != cd.theta(c).inv() {
            continue;
        }
        let poly = MultiplicityPolynomial::from_indicators(&engine.nu_sequence(c, n, a)?);
        total += mult * poly.multiplicity(omega)?;
    }
    Ok(total)
}

fn validate_braid_args(rank: usize, a: usize, n: u32, l: u32, m: u32) -> Result<()> {
    if a >= rank {
        return Err(Error::Domain(format!("object index {} out of range", a + 1)));
    }
    if n == 0 || l + m >= n {
        return Err(Error::Domain(format!(
            "need l + m < n, got n = {n}, l = {l}, m = {m}"
        )));
    }
    Ok(())
}

/// Spectrum of `A^n_{l,m}` on `a^{(x) n}`, split by the simple `b` of each
/// hom space `Hom(b, a^n)`, using an engine over the center of the
/// braided category in question.
pub fn braid_jm_spectrum_with(
    engine: &IndicatorEngine<'_>,
    a: usize,
    n: u32,
    l: u32,
    m: u32,
) -> Result<SpectrumReport> {
    let cd = engine.center();
    let base = cd.base();
    let fr = cd.base_ring();
    let r = base.rank();
    validate_braid_args(r, a, n, l, m)?;
    let rot = n - (l + m);
    let theta_a_inv = base.theta()[a].inv();
    let head = fr.power_decompose(base.dual(a), l + m);
    let x = ObjectMultiset::simple(r, a);
    let mut rows = Vec::with_capacity(r);
    for b in 0..r {
        let mut obj = ObjectMultiset::zero(cd.rank());
        let mut candidates: Vec<RootOfUnity> = Vec::new();
        for (c, mult) in head.entries() {
            let i = cd.pair_index(c, b);
            let mut single = ObjectMultiset::zero(cd.rank());
            for _ in 0..mult {
                single.add(&ObjectMultiset::simple(cd.rank(), i));
            }
            obj.add(&single);
            for w in nth_roots(cd.theta(i).inv(), rot) {
                if !candidates.contains(&w) {
                    candidates.push(w);
                }
            }
        }
        let entries = candidates
            .into_iter()
            .map(|w| {
                Ok(SpectrumEntry {
                    eigenvalue: theta_a_inv * w,
                    multiplicity: semisimple_k(engine, &obj, &x, rot, w)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let row = SpectrumRow {
            index: b,
            label: base.label(b).to_string(),
            hom_dim: fr.hom_dim(b, a, n),
            entries,
        };
        check_total(&row)?;
        rows.push(row);
    }
    Ok(SpectrumReport {
        context: SpectrumContext {
            kind: OperatorKind::JucysMurphy,
            object: base.label(a).to_string(),
            n,
            l: Some(l),
            m: Some(m),
            crossing: None,
        },
        rows,
    })
}

/// Spectrum of `A^n_{l,m}` (or of its under-crossing variant) acting on
/// `a^{(x) n}` in the braided category `md`.
pub fn braid_jm_spectrum(
    md: &ModularData,
    a: usize,
    n: u32,
    l: u32,
    m: u32,
    crossing: Crossing,
) -> Result<SpectrumReport> {
    validate_braid_args(md.rank(), a, n, l, m)?;
    let cd = match crossing {
        Crossing::Over => CenterData::of(md)?,
        Crossing::Under => CenterData::of(&md.reverse())?,
    };
    let engine = IndicatorEngine::new(&cd);
    let mut report = braid_jm_spectrum_with(&engine, a, n, l, m)?;
    report.context.crossing = Some(crossing);
    Ok(report)
}

/// Rows of `K^{c x b~}_{2,omega}` for every `b`, computed from `S`, `T`
/// and `N` without building the center.
fn k2_rows(md: &ModularData, fr: &FusionRing, a: usize, c: usize) -> Result<Vec<SpectrumRow>> {
    let r = md.rank();
    let theta = md.theta();
    let theta_a_inv = theta[a].inv();
    let half = Rational::from_signeds(1, 2);
    let cbar = md.dual(c);
    let mut rows = Vec::with_capacity(r);
    for b in 0..r {
        let hom = fr.multi_hom_dim(b, &[cbar, a, a]);
        let nu = nu2_direct(md, fr, c, b, a);
        let nb = Cyclotomic::from_integer(hom as i64);
        let target = theta[b] * theta[c].inv();
        let candidates = nth_roots(target, 2);
        if candidates.is_empty() && hom > 0 {
            return Err(Error::Internal("no admissible eigenvalue candidates".into()));
        }
        let mut entries = Vec::with_capacity(2);
        for w in candidates {
            let wi = w.inv();
            let v = (&nu.mul_root(wi.order(), wi.exponent() as i64)? + &nb).scale(&half);
            let k = recognize(&v).as_count().ok_or_else(|| {
                Error::Integrality(format!(
                    "K for object {} at {} evaluates to {v}",
                    md.label(b),
                    w.to_pi_string()
                ))
            })?;
            entries.push(SpectrumEntry {
                eigenvalue: theta_a_inv * w,
                multiplicity: k,
            });
        }
        let row = SpectrumRow {
            index: b,
            label: md.label(b).to_string(),
            hom_dim: hom,
            entries,
        };
        check_total(&row)?;
        rows.push(row);
    }
    Ok(rows)
}

/// Spectrum of a braid generator `sigma_i` on `a (x) a`, one row per
/// `Hom(b, a (x) a)`.
pub fn sigma_spectrum_n2(md: &ModularData, fr: &FusionRing, a: usize) -> Result<SpectrumReport> {
    validate_braid_args(md.rank(), a, 2, 0, 0)?;
    Ok(SpectrumReport {
        context: SpectrumContext {
            kind: OperatorKind::Sigma,
            object: md.label(a).to_string(),
            n: 2,
            l: Some(0),
            m: Some(0),
            crossing: None,
        },
        rows: k2_rows(md, fr, a, md.unit())?,
    })
}

/// Spectrum of `sigma_i sigma_{i+1} sigma_i` on `a (x) a (x) a`, one row per
/// `Hom(b, a^3)`.
pub fn sigma3_spectrum_n2(md: &ModularData, fr: &FusionRing, a: usize) -> Result<SpectrumReport> {
    validate_braid_args(md.rank(), a, 3, 1, 0)?;
    Ok(SpectrumReport {
        context: SpectrumContext {
            kind: OperatorKind::SigmaSigmaSigma,
            object: md.label(a).to_string(),
            n: 3,
            l: Some(1),
            m: Some(0),
            crossing: None,
        },
        rows: k2_rows(md, fr, a, md.dual(a))?,
    })
}
