//! Built-in modular data.

use std::sync::OnceLock;

use crate::cyclo::{CycloSum, Cyclotomic, Rational, RootOfUnity};
use crate::error::{Error, Result};
use crate::fusion_ring::FusionRing;
use crate::matrix::Matrix;
use crate::modular_data::ModularData;

pub const CATALOG_NAMES: [&str; 5] = ["vec", "semion", "toric-code", "fibonacci", "haagerup-center"];

fn z(q: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(q, k).expect("small order")
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

fn frac(n: i64, d: i64) -> Cyclotomic {
    Cyclotomic::from_fraction(n, d)
}

fn root(q: u32, k: i64) -> RootOfUnity {
    RootOfUnity::new(q, k).expect("positive order")
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The quadratic Gauss sum `sum_{k=1}^{12} (k|13) zeta_13^k`, equal to `sqrt(13)`.
pub fn sqrt13() -> Cyclotomic {
    let residues = [1, 3, 4, 9, 10, 12];
    let mut s = CycloSum::new();
    for k in 1..13 {
        let sign = if residues.contains(&k) { 1 } else { -1 };
        s.add_shifted(&int(sign), 13, k);
    }
    s.finish()
}

fn vec_md() -> Result<ModularData> {
    ModularData::from_roots(labels(&["1"]), Matrix::identity(1), vec![RootOfUnity::one()], None)
}

fn semion() -> Result<ModularData> {
    let sqrt2 = &z(8, 1) + &z(8, -1);
    let h = sqrt2.inverse()?;
    let s = Matrix::from_rows(vec![vec![h.clone(), h.clone()], vec![h.clone(), -&h]])?;
    ModularData::from_roots(labels(&["1", "s"]), s, vec![RootOfUnity::one(), root(4, 1)], None)
}

fn toric_code() -> Result<ModularData> {
    let signs = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
    let s = Matrix::from_fn(4, 4, |i, j| frac(signs[i][j], 2));
    let one = RootOfUnity::one();
    ModularData::from_roots(labels(&["1", "e", "m", "f"]), s, vec![one, one, one, root(2, 1)], None)
}

fn fibonacci() -> Result<ModularData> {
    // phi = 1 + zeta_5 + zeta_5^4; sqrt(2 + phi) = 2 sin(2 pi / 5) = -i (zeta_5 - zeta_5^4).
    let phi = &(&int(1) + &z(5, 1)) + &z(5, 4);
    let norm = (&(&z(5, 1) - &z(5, 4)) * &z(4, 3)).inverse()?;
    let s = Matrix::from_rows(vec![
        vec![norm.clone(), &phi * &norm],
        vec![&phi * &norm, -&norm],
    ])?;
    ModularData::from_roots(labels(&["1", "tau"]), s, vec![RootOfUnity::one(), root(5, 2)], None)
}

/// Twists of the 12 simples as `exp(pi i p / q)`.
const HAAGERUP_TWISTS: [(i64, i64); 12] = [
    (0, 1),
    (0, 1),
    (0, 1),
    (0, 1),
    (2, 3),
    (-2, 3),
    (12, 13),
    (-4, 13),
    (4, 13),
    (10, 13),
    (-12, 13),
    (-10, 13),
];

const HAAGERUP_C_INDEX: [[i64; 6]; 6] = [
    [1, 2, 3, 4, 5, 6],
    [2, 4, 6, 5, 3, 1],
    [3, 6, 4, 1, 2, 5],
    [4, 5, 1, 3, 6, 2],
    [5, 3, 2, 6, 1, 4],
    [6, 1, 5, 2, 4, 3],
];

fn haagerup_center() -> Result<ModularData> {
    let g = sqrt13();
    // y = 3 / sqrt(13) = 3 sqrt(13) / 13, x = (13 - 3 sqrt(13)) / 26.
    let y = g.scale(&Rational::from_signeds(3, 13));
    let x = &frac(1, 2) - &g.scale(&Rational::from_signeds(3, 26));
    let one_minus_x = &int(1) - &x;
    // c(j) = -2 y cos(2 pi j / 13) = -y (zeta^j + zeta^-j).
    let c = |j: i64| -&(&y * &(&z(13, j) + &z(13, -j)));
    let o = int(0);
    let n = |k: i64| int(k);
    let mut rows: Vec<Vec<Cyclotomic>> = vec![
        [x.clone(), one_minus_x.clone(), n(1), n(1), n(1), n(1)]
            .into_iter()
            .chain(std::iter::repeat_n(y.clone(), 6))
            .collect(),
        [one_minus_x, x, n(1), n(1), n(1), n(1)]
            .into_iter()
            .chain(std::iter::repeat_n(-&y, 6))
            .collect(),
    ];
    for pattern in [[2, -1, -1, -1], [-1, 2, -1, -1], [-1, -1, -1, 2], [-1, -1, 2, -1]] {
        let mut row = vec![n(1), n(1)];
        row.extend(pattern.iter().map(|&k| n(k)));
        row.extend(std::iter::repeat_n(o.clone(), 6));
        rows.push(row);
    }
    for idx in HAAGERUP_C_INDEX {
        let mut row = vec![y.clone(), -&y, o.clone(), o.clone(), o.clone(), o.clone()];
        row.extend(idx.iter().map(|&j| c(j)));
        rows.push(row);
    }
    let third = Rational::from_signeds(1, 3);
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.scale(&third)).collect())
        .collect();
    let s = Matrix::from_rows(rows)?;
    let theta = HAAGERUP_TWISTS
        .iter()
        .map(|&(p, q)| RootOfUnity::new(2 * q as u32, p))
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = (1..=12).map(|i| format!("x{i}")).collect();
    ModularData::from_roots(names, s, theta, None)
}

fn build(name: &str) -> Result<ModularData> {
    let md = match name {
        "vec" => vec_md()?,
        "semion" => semion()?,
        "toric-code" => toric_code()?,
        "fibonacci" => fibonacci()?,
        "haagerup-center" => haagerup_center()?,
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    md.validate().into_result()?;
    FusionRing::verlinde(&md)?;
    Ok(md)
}

/// A built-in fixture by name; see [`CATALOG_NAMES`]. Each fixture is built
/// once, validated (relations and Verlinde integrality) and then shared.
pub fn catalog(name: &str) -> Result<ModularData> {
    static CACHE: [OnceLock<Result<ModularData>>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let i = CATALOG_NAMES
        .iter()
        .position(|n| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    CACHE[i].get_or_init(|| build(name)).clone()
}
