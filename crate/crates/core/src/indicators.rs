//! Generalized Frobenius-Schur indicators `nu^b_{m,l}(a)`.
//!
//! Two routes are provided. [`gfs_matrix`] evaluates the indicator matrix
//! as `pi(g) A` for a word `g` in the generators of `SL2(Z)`, where `pi`
//! sends `s` to `S_Z` and `t` to `T_Z`. [`IndicatorEngine::nu`] instead
//! derives `nu_{n,k}` from `nu_{n/g,1}` of the `g`-th tensor power by a
//! Galois automorphism, `g = gcd(k, n)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::center::CenterData;
use crate::cyclo::field::gcd;
use crate::cyclo::{CycloSum, Cyclotomic, RootOfUnity};
use crate::error::{Error, Result};
use crate::fusion_ring::{FusionRing, ObjectMultiset};
use crate::matrix::Matrix;
use crate::modular_data::ModularData;

/// Generators of `SL2(Z)`: `s = [[0,-1],[1,0]]`, `t = [[1,1],[0,1]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sl2Token {
    S,
    T,
    TInv,
}

pub type Mat2 = [[i64; 2]; 2];

fn mat2_mul(x: Mat2, y: Mat2) -> Mat2 {
    let mut z = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    z
}

impl Sl2Token {
    pub fn matrix(self) -> Mat2 {
        match self {
            Sl2Token::S => [[0, -1], [1, 0]],
            Sl2Token::T => [[1, 1], [0, 1]],
            Sl2Token::TInv => [[1, -1], [0, 1]],
        }
    }
}

/// A word `g = g_1 g_2 ... g_k` with `(m, l) g = (1, 0)`, equivalently
/// `(1, 0) g^-1 = (m, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Word {
    tokens: Vec<Sl2Token>,
    target: (i64, i64),
}

impl Sl2Word {
    pub fn tokens(&self) -> &[Sl2Token] {
        &self.tokens
    }

    pub fn target(&self) -> (i64, i64) {
        self.target
    }

    /// The product of the token matrices, left to right.
    pub fn matrix(&self) -> Mat2 {
        self.tokens
            .iter()
            .fold([[1, 0], [0, 1]], |acc, t| mat2_mul(acc, t.matrix()))
    }

    /// Re-check `(m, l) g = (1, 0)` and `det g = 1` in integer arithmetic.
    pub fn verify(&self) -> bool {
        let g = self.matrix();
        let (m, l) = self.target;
        let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        let row = [m * g[0][0] + l * g[1][0], m * g[0][1] + l * g[1][1]];
        det == 1 && row == [1, 0]
    }
}

impl fmt::Display for Sl2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<&str> = self
            .tokens
            .iter()
            .map(|t| match t {
                Sl2Token::S => "s",
                Sl2Token::T => "t",
                Sl2Token::TInv => "t^-1",
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Euclidean construction of a word `g` with `(1, 0) g^-1 = (m, l)`.
pub fn sl2_word(m: i64, l: i64) -> Result<Sl2Word> {
    if gcd(m.unsigned_abs(), l.unsigned_abs()) != 1 {
        return Err(Error::Domain(format!("gcd({m}, {l}) must be 1")));
    }
    let mut tokens = Vec::new();
    let (mut x, mut y) = (m, l);
    // Right multiplication: t^k sends (x, y) to (x, y + kx), s sends it to (y, -x).
    loop {
        if (x, y) == (1, 0) {
            break;
        }
        if x != 0 {
            let k = -y.div_euclid(x.abs()) * x.signum();
            let tok = if k > 0 { Sl2Token::T } else { Sl2Token::TInv };
            tokens.extend(std::iter::repeat_n(tok, k.unsigned_abs() as usize));
            y += k * x;
            if (x, y) == (1, 0) {
                break;
            }
        }
        tokens.push(Sl2Token::S);
        (x, y) = (y, -x);
    }
    let word = Sl2Word {
        tokens,
        target: (m, l),
    };
    if !word.verify() {
        return Err(Error::Internal(format!("word for ({m}, {l}) failed verification")));
    }
    Ok(word)
}

/// The indicator matrix `V_{m,l}`: entry `[(c, b)][a] = nu^{c x b~}_{m,l}(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorTable {
    pub m: i64,
    pub l: i64,
    pub values: Matrix,
}

impl IndicatorTable {
    pub fn get(&self, b: usize, a: usize) -> &Cyclotomic {
        self.values.get(b, a)
    }
}

/// `V_{m,l} = pi(g) A`.
pub fn gfs_matrix(cd: &CenterData, m: i64, l: i64) -> Result<IndicatorTable> {
    if !cd.central_charge().is_one() {
        return Err(Error::Unsupported(format!(
            "central charge {} != 1: pi is only projective",
            cd.central_charge()
        )));
    }
    let word = sl2_word(m, l)?;
    let mut x = cd.forget_matrix();
    let mut pending_t = 0i64;
    for tok in word.tokens().iter().rev() {
        match tok {
            Sl2Token::T => pending_t += 1,
            Sl2Token::TInv => pending_t -= 1,
            Sl2Token::S => {
                if pending_t != 0 {
                    x = cd.apply_t(&x, pending_t)?;
                    pending_t = 0;
                }
                x = cd.apply_s(&x)?;
            }
        }
    }
    if pending_t != 0 {
        x = cd.apply_t(&x, pending_t)?;
    }
    Ok(IndicatorTable { m, l, values: x })
}

/// Which `n`-th root of `theta_b = zeta_M^t` stands in for `theta_b^(1/n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootConvention {
    /// `zeta_{Mn}^t`.
    #[default]
    Canonical,
    /// `zeta_{Mn}^(t + M)`.
    Shifted,
}

impl RootConvention {
    pub fn root(self, theta: RootOfUnity, n: u32) -> RootOfUnity {
        let m = theta.order();
        let t = theta.exponent() as i64;
        let shift = match self {
            RootConvention::Canonical => 0,
            RootConvention::Shifted => m as i64,
        };
        RootOfUnity::new(m * n, t + shift).expect("positive order")
    }
}

/// Indicator computations over one center, caching `V_{m,l}` tables.
pub struct IndicatorEngine<'a> {
    cd: &'a CenterData,
    convention: RootConvention,
    tables: Mutex<HashMap<(i64, i64), Arc<IndicatorTable>>>,
}

impl<'a> IndicatorEngine<'a> {
    pub fn new(cd: &'a CenterData) -> Self {
        Self::with_convention(cd, RootConvention::Canonical)
    }

    pub fn with_convention(cd: &'a CenterData, convention: RootConvention) -> Self {
        IndicatorEngine {
            cd,
            convention,
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn center(&self) -> &'a CenterData {
        self.cd
    }

    pub fn convention(&self) -> RootConvention {
        self.convention
    }

    pub fn table(&self, m: i64, l: i64) -> Result<Arc<IndicatorTable>> {
        if let Some(t) = self.tables.lock().unwrap().get(&(m, l)) {
            return Ok(t.clone());
        }
        let t = Arc::new(gfs_matrix(self.cd, m, l)?);
        self.tables.lock().unwrap().insert((m, l), t.clone());
        Ok(t)
    }

    /// `dim Hom(Forget(b), a^{(x) n})`.
    pub fn hom_dim(&self, b: usize, a: &ObjectMultiset, n: u32) -> u64 {
        let pw = self.cd.base_ring().power_multiset(a, n);
        pw.entries().iter().map(|&(x, m)| m * self.cd.forget(b, x)).sum()
    }

    /// `nu^b_{n,k}(a)` for a center simple `b` and a base object `a`, by
    /// Galois reduction to `nu^b_{n/g,1}(a^g)`. `k = 0` gives the hom
    /// dimension; any other integer `k` is allowed.
    pub fn nu(&self, b: usize, n: u32, k: i64, a: &ObjectMultiset) -> Result<Cyclotomic> {
        if n == 0 {
            return Err(Error::Domain("indicator degree n must be positive".into()));
        }
        if b >= self.cd.rank() || a.rank() != self.cd.base_rank() {
            return Err(Error::Dimension("object index outside the center or base".into()));
        }
        if k == 0 {
            return Ok(Cyclotomic::from_integer(self.hom_dim(b, a, n) as i64));
        }
        let g = gcd(k.unsigned_abs(), n as u64);
        let n1 = (n as u64 / g) as u32;
        let k1 = (k / g as i64).rem_euclid(n1 as i64);
        let root = self.convention.root(self.cd.theta(b), n);
        let table = self.table(n1 as i64, 1)?;
        let ag = self.cd.base_ring().power_multiset(a, g as u32);
        let mut sum = CycloSum::new();
        for (x, mult) in ag.entries() {
            sum.add(&table.get(b, x).scale(&(mult as i64).into()));
        }
        let rg = root.pow(g as i64);
        let inner = sum.finish().mul_root(rg.order(), rg.exponent() as i64)?;
        let moved = inner.galois_apply(k1, n1)?;
        let back = root.pow(-k);
        moved.mul_root(back.order(), back.exponent() as i64)
    }

    /// `nu^b_{n,k}(a)` for `k = 0, ..., n - 1`.
    pub fn nu_sequence(&self, b: usize, n: u32, a: &ObjectMultiset) -> Result<Vec<Cyclotomic>> {
        (0..n as i64).map(|k| self.nu(b, n, k, a)).collect()
    }
}

/// `nu^b_{n,k}(a)` by Galois reduction, with the canonical root convention.
pub fn nu_general(cd: &CenterData, b: usize, n: u32, k: i64, a: &ObjectMultiset) -> Result<Cyclotomic> {
    IndicatorEngine::new(cd).nu(b, n, k, a)
}

/// `nu^{c x b~}_{2,1}(a) = sum_{d,e} (theta_d / theta_e)^2 S[c][d] S[dual b][e] N^a_{d,e}`,
/// computed from the base data alone.
pub fn nu2_direct(md: &ModularData, fr: &FusionRing, c: usize, b: usize, a: usize) -> Cyclotomic {
    let r = md.rank();
    let s = md.s();
    let theta = md.theta();
    let bd = md.dual(b);
    let mut acc = CycloSum::new();
    for d in 0..r {
        if s.get(c, d).is_zero() {
            continue;
        }
        for e in 0..r {
            let n = fr.n(a, d, e);
            if n == 0 {
                continue;
            }
            let w = (theta[d] * theta[e].inv()).pow(2);
            let term = (s.get(c, d) * s.get(bd, e)).scale(&(n as i64).into());
            acc.add_shifted(&term, w.order(), w.exponent() as i64);
        }
    }
    acc.finish()
}
