//! Modular data `(S, T)`: construction, validation of the defining
//! relations, derived invariants and braiding reversal.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::cyclo::field::lcm;
use crate::cyclo::{recognize, CycloSum, Cyclotomic, Recognition, RootOfUnity};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Normalized unitary `S` together with the twists `theta` (the diagonal
/// of `T`), the unit index and the duality permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData {
    labels: Vec<String>,
    s: Matrix,
    theta: Vec<RootOfUnity>,
    unit: usize,
    dual: Vec<usize>,
}

/// Quantities derived from [`ModularData`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedInvariants {
    /// Quantum dimensions `d_a = S[unit][a] / S[unit][unit]`.
    pub dims: Vec<Cyclotomic>,
    /// `D = sum of d_a^2`.
    pub global_dim: Cyclotomic,
    /// Least common multiple of the twist orders.
    pub conductor: u64,
    pub central_charge: RootOfUnity,
}

/// Outcome of one relation checked by [`ModularData::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `Err(Error::Validation)` listing every failed check.
    pub fn into_result(self) -> Result<()> {
        if self.passed() {
            return Ok(());
        }
        let msgs: Vec<String> = self
            .failures()
            .map(|c| match &c.detail {
                Some(d) => format!("{} ({d})", c.name),
                None => c.name.clone(),
            })
            .collect();
        Err(Error::Validation(msgs.join("; ")))
    }
}

pub const CHECK_SYMMETRIC: &str = "S symmetric";
pub const CHECK_UNITARY: &str = "S unitary";
pub const CHECK_S2: &str = "S^2 = C";
pub const CHECK_C2: &str = "C^2 = I";
pub const CHECK_CS: &str = "CS = SC";
pub const CHECK_CT: &str = "CT = TC";
pub const CHECK_ST3: &str = "(ST)^3 = xi S^2";
pub const CHECK_UNIT_TWIST: &str = "theta[unit] = 1";
pub const CHECK_UNIT_ROW: &str = "unit row real positive";
pub const CHECK_REVERSED: &str = "S[dual a][b] = conj(S[a][b])";

fn at(i: usize, j: usize) -> String {
    format!("first mismatch at ({}, {})", i + 1, j + 1)
}

fn is_positive(x: &Cyclotomic) -> bool {
    x.real_sign() == Some(Ordering::Greater)
}

impl ModularData {
    /// Build modular data from an `S` matrix and twist values.
    ///
    /// Each twist must be exactly a root of unity. Without `unit`, the
    /// unit is the unique index whose twist is 1 and whose `S` row is real
    /// and positive. The dual permutation is read off `S^2`; if `S^2` is not
    /// a permutation matrix every object is taken self-dual and
    /// [`validate`](Self::validate) reports the failure.
    pub fn construct(
        labels: Vec<String>,
        s: Matrix,
        theta: &[Cyclotomic],
        unit: Option<usize>,
    ) -> Result<Self> {
        let mut roots = Vec::with_capacity(theta.len());
        for (i, t) in theta.iter().enumerate() {
            let r = RootOfUnity::from_cyclotomic(t).ok_or_else(|| {
                Error::Construction(format!("twist {} ({t}) is not a root of unity", i + 1))
            })?;
            roots.push(r);
        }
        Self::from_roots(labels, s, roots, unit)
    }

    pub fn from_roots(
        labels: Vec<String>,
        s: Matrix,
        theta: Vec<RootOfUnity>,
        unit: Option<usize>,
    ) -> Result<Self> {
        let r = theta.len();
        if r == 0 {
            return Err(Error::Dimension("rank must be positive".into()));
        }
        if s.rows() != r || s.cols() != r {
            return Err(Error::Dimension(format!(
                "S is {}x{} but there are {r} twists",
                s.rows(),
                s.cols()
            )));
        }
        if labels.len() != r {
            return Err(Error::Dimension(format!(
                "{} labels for rank {r}",
                labels.len()
            )));
        }
        let unit = match unit {
            Some(u) if u < r => u,
            Some(u) => {
                return Err(Error::Construction(format!(
                    "unit index {} out of range 1..={r}",
                    u + 1
                )))
            }
            None => {
                let candidates: Vec<usize> = (0..r)
                    .filter(|&i| theta[i].is_one() && s.row(i).iter().all(is_positive))
                    .collect();
                match candidates.as_slice() {
                    [u] => *u,
                    [] => return Err(Error::Construction("no unit candidate".into())),
                    many => {
                        let list: Vec<String> = many.iter().map(|i| (i + 1).to_string()).collect();
                        return Err(Error::Construction(format!(
                            "several unit candidates ({}); specify the unit explicitly",
                            list.join(", ")
                        )));
                    }
                }
            }
        };
        let dual = dual_from_square(&s)?.unwrap_or_else(|| (0..r).collect());
        Ok(ModularData {
            labels,
            s,
            theta,
            unit,
            dual,
        })
    }

    /// Assemble without any checks.
    pub(crate) fn from_parts(
        labels: Vec<String>,
        s: Matrix,
        theta: Vec<RootOfUnity>,
        unit: usize,
        dual: Vec<usize>,
    ) -> Self {
        ModularData {
            labels,
            s,
            theta,
            unit,
            dual,
        }
    }

    pub fn rank(&self) -> usize {
        self.theta.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Find an object by label, or by 1-based index.
    pub fn find(&self, selector: &str) -> Option<usize> {
        if let Some(i) = self.labels.iter().position(|l| l == selector) {
            return Some(i);
        }
        match selector.parse::<usize>() {
            Ok(i) if (1..=self.rank()).contains(&i) => Some(i - 1),
            _ => None,
        }
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn s_entry(&self, a: usize, b: usize) -> &Cyclotomic {
        self.s.get(a, b)
    }

    pub fn theta(&self) -> &[RootOfUnity] {
        &self.theta
    }

    pub fn t_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.theta)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// Check every defining relation exactly; failures become report
    /// entries rather than errors.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank();
        let s = &self.s;
        let mut checks = Vec::new();
        let mut push = |name: &str, res: std::result::Result<(), String>| {
            checks.push(Check {
                name: name.to_string(),
                passed: res.is_ok(),
                detail: res.err(),
            })
        };

        push(
            CHECK_SYMMETRIC,
            s.first_difference(&s.transpose()).map_or(Ok(()), |(i, j)| Err(at(i, j))),
        );

        let unitary = s
            .try_mul(&s.conj().transpose())
            .map_err(|e| e.to_string())
            .and_then(|p| p.first_difference(&Matrix::identity(r)).map_or(Ok(()), |(i, j)| Err(at(i, j))));
        push(CHECK_UNITARY, unitary);

        let c = Matrix::permutation(&self.dual);
        let s2 = s.try_mul(s).expect("square S");
        push(
            CHECK_S2,
            s2.first_difference(&c).map_or(Ok(()), |(i, j)| Err(at(i, j))),
        );

        let involution = (0..r).find(|&a| self.dual[self.dual[a]] != a);
        push(
            CHECK_C2,
            involution.map_or(Ok(()), |a| Err(format!("dual of dual of {} differs", a + 1))),
        );

        // (CS)[a][b] = S[dual a][b], (SC)[a][b] = S[a][dual b].
        let cs = (0..r)
            .flat_map(|a| (0..r).map(move |b| (a, b)))
            .find(|&(a, b)| s.get(self.dual[a], b) != s.get(a, self.dual[b]));
        push(CHECK_CS, cs.map_or(Ok(()), |(i, j)| Err(at(i, j))));

        let ct = (0..r).find(|&a| self.theta[self.dual[a]] != self.theta[a]);
        push(
            CHECK_CT,
            ct.map_or(Ok(()), |a| Err(format!("theta differs on {} and its dual", a + 1))),
        );

        let st3 = match self.derive_invariants() {
            Err(e) => Err(e.to_string()),
            Ok(inv) => {
                let st = s.scale_cols(&self.theta, 1).expect("square S");
                let st3 = st
                    .try_mul(&st)
                    .and_then(|m| m.try_mul(&st))
                    .expect("square S");
                let xi = inv.central_charge;
                let rhs = s2.scale_rows(&vec![xi; r], 1).expect("square S");
                st3.first_difference(&rhs).map_or(Ok(()), |(i, j)| Err(at(i, j)))
            }
        };
        push(CHECK_ST3, st3);

        push(
            CHECK_UNIT_TWIST,
            if self.theta[self.unit].is_one() {
                Ok(())
            } else {
                Err(format!("theta[{}] = {}", self.unit + 1, self.theta[self.unit]))
            },
        );

        let bad = (0..r).find(|&b| !is_positive(s.get(self.unit, b)));
        push(
            CHECK_UNIT_ROW,
            bad.map_or(Ok(()), |b| Err(format!("entry ({}, {})", self.unit + 1, b + 1))),
        );

        let rev = (0..r)
            .flat_map(|a| (0..r).map(move |b| (a, b)))
            .find(|&(a, b)| *s.get(self.dual[a], b) != s.get(a, b).conj());
        push(CHECK_REVERSED, rev.map_or(Ok(()), |(i, j)| Err(at(i, j))));

        ValidationReport { checks }
    }

    pub fn derive_invariants(&self) -> Result<DerivedInvariants> {
        let u = self.unit;
        let s_uu = self.s.get(u, u);
        let inv = s_uu.inverse()?;
        let dims: Vec<Cyclotomic> = self.s.row(u).iter().map(|x| x * &inv).collect();
        let mut d = CycloSum::new();
        for x in &dims {
            d.add_product(x, x);
        }
        let global_dim = d.finish();
        let conductor = self
            .theta
            .iter()
            .fold(1u64, |m, t| lcm(m, t.order() as u64));
        let mut xi = CycloSum::new();
        for (x, t) in self.s.row(u).iter().zip(&self.theta) {
            xi.add_shifted(&(x * x), t.order(), t.exponent() as i64);
        }
        let xi = &xi.finish() * &inv;
        let central_charge = match recognize(&xi).kind {
            Recognition::Integer(n) if n == 1 => RootOfUnity::one(),
            Recognition::Integer(n) if n == -1 => RootOfUnity::new(2, 1)?,
            Recognition::RootMultiple { coefficient, root } if coefficient == 1 => root,
            _ => {
                return Err(Error::Data(format!(
                    "central charge {xi} is not a root of unity"
                )))
            }
        };
        Ok(DerivedInvariants {
            dims,
            global_dim,
            conductor,
            central_charge,
        })
    }

    /// The same category with reversed braiding:
    /// `S~[a][b] = S[dual a][b]`, `theta~ = theta^-1`.
    pub fn reverse(&self) -> ModularData {
        let r = self.rank();
        let s = Matrix::from_fn(r, r, |a, b| self.s.get(self.dual[a], b).clone());
        ModularData {
            labels: self.labels.clone(),
            s,
            theta: self.theta.iter().map(RootOfUnity::inv).collect(),
            unit: self.unit,
            dual: self.dual.clone(),
        }
    }
}

/// The permutation `C` with `S^2 = C`, if `S^2` is a permutation matrix.
fn dual_from_square(s: &Matrix) -> Result<Option<Vec<usize>>> {
    let s2 = s.try_mul(s)?;
    let r = s.rows();
    let mut dual = Vec::with_capacity(r);
    for a in 0..r {
        let ones: Vec<usize> = (0..r).filter(|&b| s2.get(a, b).is_one()).collect();
        let zeros = (0..r).filter(|&b| s2.get(a, b).is_zero()).count();
        match ones.as_slice() {
            [b] if zeros == r - 1 => dual.push(*b),
            _ => return Ok(None),
        }
    }
    Ok(Some(dual))
}
