use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use malachite_base::num::arithmetic::traits::{DivExact, Gcd, Lcm};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::conversion::traits::RoundingFrom;
use malachite_base::rounding_modes::RoundingMode;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;
use num_complex::Complex64;

use super::field::{self, gcd, lcm, tables};
use crate::error::{Error, Result};

/// An exact element of a cyclotomic field Q(zeta_n).
///
/// Stored on the power basis `1, zeta_n, ..., zeta_n^(phi(n)-1)` as integer
/// numerators over one positive common denominator, in lowest terms.
/// Rationals are always demoted to order 1, so `order()` is a field that
/// contains the value but not necessarily the smallest one.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    num: Vec<Integer>,
    den: Integer,
}

fn must<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("cyclotomic arithmetic: {e}"),
    }
}

fn lcm_order(a: u32, b: u32) -> Result<u32> {
    let l = lcm(a as u64, b as u64);
    field::check_order(l)?;
    Ok(l as u32)
}

fn int_lcm(a: &Integer, b: &Integer) -> Integer {
    Integer::from(a.unsigned_abs_ref().lcm(b.unsigned_abs_ref()))
}

fn is_zero(x: &Integer) -> bool {
    *x == Integer::ZERO
}

/// Reduce a dense vector indexed by exponents modulo `order` onto the power
/// basis of Q(zeta_order).
fn reduce_cyclic(order: u32, mut v: Vec<Integer>) -> Vec<Integer> {
    let t = must(tables(order));
    let deg = t.degree;
    debug_assert_eq!(v.len(), order as usize);
    for d in (deg..order as usize).rev() {
        if is_zero(&v[d]) {
            continue;
        }
        let c = std::mem::replace(&mut v[d], Integer::ZERO);
        let base = d - deg;
        for &(e, p) in &t.tail {
            match p {
                1 => v[base + e] -= &c,
                -1 => v[base + e] += &c,
                _ => v[base + e] -= &c * Integer::from(p),
            }
        }
    }
    v.truncate(deg);
    v
}

/// Running sum of cyclotomic terms held unreduced (exponents mod the order)
/// so that a long dot product pays for a single reduction.
#[derive(Clone, Debug)]
pub struct CycloSum {
    order: u32,
    num: Vec<Integer>,
    den: Integer,
    empty: bool,
}

impl Default for CycloSum {
    fn default() -> Self {
        Self::new()
    }
}

impl CycloSum {
    pub fn new() -> Self {
        CycloSum {
            order: 1,
            num: vec![Integer::ZERO],
            den: Integer::ONE,
            empty: true,
        }
    }

    fn grow(&mut self, n: u32) {
        if self.order.is_multiple_of(n) {
            return;
        }
        let new_order = must(lcm_order(self.order, n));
        let step = (new_order / self.order) as usize;
        let mut num = vec![Integer::ZERO; new_order as usize];
        for (i, c) in self.num.drain(..).enumerate() {
            num[i * step] = c;
        }
        self.num = num;
        self.order = new_order;
    }

    /// Bring the running denominator and a new term's denominator to a
    /// common value; returns the factor the term must be scaled by.
    fn align(&mut self, den: &Integer) -> Option<Integer> {
        if self.empty {
            self.den = den.clone();
            self.empty = false;
            return None;
        }
        if self.den == *den {
            return None;
        }
        let l = int_lcm(&self.den, den);
        let own = (&l).div_exact(&self.den);
        if own != Integer::ONE {
            for c in self.num.iter_mut() {
                if !is_zero(c) {
                    *c *= &own;
                }
            }
        }
        let f = (&l).div_exact(den);
        self.den = l;
        if f == Integer::ONE {
            None
        } else {
            Some(f)
        }
    }

    pub fn add(&mut self, x: &Cyclotomic) {
        self.add_shifted(x, 1, 0);
    }

    /// Add `x * zeta_q^k`.
    pub fn add_shifted(&mut self, x: &Cyclotomic, q: u32, k: i64) {
        if x.is_zero() {
            return;
        }
        self.grow(x.order);
        self.grow(q);
        let l = self.order as i64;
        let sx = (self.order / x.order) as i64;
        let shift = (k.rem_euclid(q as i64)) * (l / q as i64);
        let f = self.align(&x.den);
        for (i, c) in x.num.iter().enumerate() {
            if is_zero(c) {
                continue;
            }
            let pos = ((i as i64 * sx + shift) % l) as usize;
            match &f {
                None => self.num[pos] += c,
                Some(f) => self.num[pos] += c * f,
            }
        }
    }

    /// Add `x * y`.
    pub fn add_product(&mut self, x: &Cyclotomic, y: &Cyclotomic) {
        if x.is_zero() || y.is_zero() {
            return;
        }
        self.grow(x.order);
        self.grow(y.order);
        let l = self.order as usize;
        let sx = (self.order / x.order) as usize;
        let sy = (self.order / y.order) as usize;
        let den = &x.den * &y.den;
        let f = self.align(&den);
        for (i, a) in x.num.iter().enumerate() {
            if is_zero(a) {
                continue;
            }
            let a = match &f {
                None => a.clone(),
                Some(f) => a * f,
            };
            let pi = i * sx;
            for (j, b) in y.num.iter().enumerate() {
                if is_zero(b) {
                    continue;
                }
                self.num[(pi + j * sy) % l] += &a * b;
            }
        }
    }

    pub fn finish(self) -> Cyclotomic {
        let reduced = reduce_cyclic(self.order, self.num);
        Cyclotomic::normalized(self.order, reduced, self.den)
    }
}

impl Cyclotomic {
    fn normalized(order: u32, mut num: Vec<Integer>, mut den: Integer) -> Cyclotomic {
        debug_assert!(den > Integer::ZERO);
        if num.iter().all(is_zero) {
            return Cyclotomic::zero();
        }
        let mut g: Natural = den.unsigned_abs_ref().clone();
        for c in &num {
            if g == Natural::ONE {
                break;
            }
            if !is_zero(c) {
                g = (&g).gcd(c.unsigned_abs_ref());
            }
        }
        if g != Natural::ONE {
            let g = Integer::from(g);
            for c in num.iter_mut() {
                if !is_zero(c) {
                    *c = (&*c).div_exact(&g);
                }
            }
            den = den.div_exact(&g);
        }
        if order > 1 && num[1..].iter().all(is_zero) {
            num.truncate(1);
            return Cyclotomic { order: 1, num, den };
        }
        Cyclotomic { order, num, den }
    }

    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            num: vec![Integer::ZERO],
            den: Integer::ONE,
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Cyclotomic {
            order: 1,
            num: vec![Integer::from(n)],
            den: Integer::ONE,
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        let (n, d) = q.numerator_and_denominator_ref();
        let sign = *q >= Rational::ZERO;
        Cyclotomic {
            order: 1,
            num: vec![Integer::from_sign_and_abs_ref(sign, n)],
            den: Integer::from(d.clone()),
        }
    }

    pub fn from_fraction(n: i64, d: i64) -> Self {
        Self::from_rational(&Rational::from_signeds(n, d))
    }

    /// `zeta_q^k`, i.e. exp(2 pi i k / q).
    pub fn root_of_unity(q: u32, k: i64) -> Result<Self> {
        field::check_order(q as u64)?;
        let mut v = vec![Integer::ZERO; q as usize];
        v[k.rem_euclid(q as i64) as usize] = Integer::ONE;
        Ok(Self::normalized(q, reduce_cyclic(q, v), Integer::ONE))
    }

    /// Build from rational coefficients on the power basis of order `n`.
    /// Coefficient sequences longer than phi(n) are reduced.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> Result<Self> {
        field::check_order(n as u64)?;
        let mut den = Natural::ONE;
        for c in coeffs {
            den = (&den).lcm(c.denominator_ref());
        }
        let den = Integer::from(den);
        let mut v = vec![Integer::ZERO; n as usize];
        for (i, c) in coeffs.iter().enumerate() {
            let (cn, cd) = c.numerator_and_denominator_ref();
            let scaled = Integer::from_sign_and_abs_ref(*c >= Rational::ZERO, cn)
                * (&den).div_exact(Integer::from(cd.clone()));
            v[i % n as usize] += scaled;
        }
        Ok(Self::normalized(n, reduce_cyclic(n, v), den))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Rational coefficients on the power basis of `order()`; length phi(order).
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::from_integers_ref(c, &self.den))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && is_zero(&self.num[0])
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.num[0] == Integer::ONE && self.den == Integer::ONE
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.order == 1).then(|| Rational::from_integers_ref(&self.num[0], &self.den))
    }

    pub fn as_integer(&self) -> Option<Integer> {
        (self.order == 1 && self.den == Integer::ONE).then(|| self.num[0].clone())
    }

    /// Reduced coefficients of this value viewed in Q(zeta_target), where
    /// `order()` divides `target`. Not demoted.
    fn at_order(&self, target: u32) -> (Vec<Integer>, Integer) {
        debug_assert_eq!(target % self.order, 0);
        if target == self.order {
            return (self.num.clone(), self.den.clone());
        }
        let step = (target / self.order) as usize;
        let mut v = vec![Integer::ZERO; target as usize];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        (reduce_cyclic(target, v), self.den.clone())
    }

    /// The same value represented in Q(zeta_target); `target` must be a
    /// multiple of `order()`. Rationals stay at order 1.
    pub fn embed(&self, target: u32) -> Result<Self> {
        field::check_order(target as u64)?;
        if !target.is_multiple_of(self.order) {
            return Err(Error::Domain(format!(
                "cannot embed Q(zeta_{}) into Q(zeta_{target})",
                self.order
            )));
        }
        let (num, den) = self.at_order(target);
        Ok(Self::normalized(target, num, den))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.order == other.order {
            if self.den == other.den {
                let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
                return Ok(Self::normalized(self.order, num, self.den.clone()));
            }
            let l = int_lcm(&self.den, &other.den);
            let fa = (&l).div_exact(&self.den);
            let fb = (&l).div_exact(&other.den);
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| a * &fa + b * &fb)
                .collect();
            return Ok(Self::normalized(self.order, num, l));
        }
        lcm_order(self.order, other.order)?;
        let mut s = CycloSum::new();
        s.add(self);
        s.add(other);
        Ok(s.finish())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if let Some(q) = other.as_rational() {
            return Ok(self.scale(&q));
        }
        if let Some(q) = self.as_rational() {
            return Ok(other.scale(&q));
        }
        lcm_order(self.order, other.order)?;
        let mut s = CycloSum::new();
        s.add_product(self, other);
        Ok(s.finish())
    }

    /// Multiply by a rational.
    pub fn scale(&self, q: &Rational) -> Self {
        if *q == Rational::ZERO {
            return Self::zero();
        }
        let (n, d) = q.numerator_and_denominator_ref();
        let n = Integer::from_sign_and_abs_ref(*q >= Rational::ZERO, n);
        let num = self.num.iter().map(|c| c * &n).collect();
        Self::normalized(self.order, num, &self.den * Integer::from(d.clone()))
    }

    /// Multiply by `zeta_q^k`.
    pub fn mul_root(&self, q: u32, k: i64) -> Result<Self> {
        lcm_order(self.order, q)?;
        let mut s = CycloSum::new();
        s.add_shifted(self, q, k);
        Ok(s.finish())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The automorphism zeta_n -> zeta_n^k of Q(zeta_n), n = `order()`.
    /// `k` must be a unit modulo the order.
    fn automorphism(&self, k: i64) -> Self {
        let n = self.order as i64;
        if n == 1 {
            return self.clone();
        }
        debug_assert_eq!(gcd(k.rem_euclid(n) as u64, n as u64), 1);
        let mut v = vec![Integer::ZERO; n as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !is_zero(c) {
                v[(i as i64 * k).rem_euclid(n) as usize] += c;
            }
        }
        Self::normalized(self.order, reduce_cyclic(self.order, v), self.den.clone())
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.automorphism(-1)
    }

    /// The Galois automorphism zeta_m -> zeta_m^k applied to `self`, which
    /// must lie in Q(zeta_m).
    pub fn galois_apply(&self, k: i64, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("galois_apply: m must be positive".into()));
        }
        if gcd(k.rem_euclid(m as i64) as u64, m as u64) != 1 {
            return Err(Error::Domain(format!("gcd({k}, {m}) != 1")));
        }
        let x = self.descend(m)?;
        if x.order == 1 {
            return Ok(x);
        }
        Ok(x.automorphism(k))
    }

    /// Represent `self` at order `m` if it lies in Q(zeta_m).
    pub fn descend(&self, m: u32) -> Result<Self> {
        field::check_order(m as u64)?;
        if self.order == 1 {
            return Ok(self.clone());
        }
        if m.is_multiple_of(self.order) {
            return self.embed(m);
        }
        let l = lcm_order(self.order, m)?;
        let (x, den) = self.at_order(l);
        let map = descent_map(l, m)?;
        let xr: Vec<Rational> = x
            .iter()
            .map(|c| Rational::from_integers_ref(c, &den))
            .collect();
        let coeffs: Vec<Rational> = map
            .left_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&map.pivots)
                    .filter(|(p, &r)| **p != Rational::ZERO && xr[r] != Rational::ZERO)
                    .fold(Rational::ZERO, |acc, (p, &r)| acc + p * &xr[r])
            })
            .collect();
        // Verify by re-embedding; any mismatch is a non-membership witness.
        for (r, xv) in xr.iter().enumerate() {
            let back = map.basis[r]
                .iter()
                .zip(&coeffs)
                .filter(|(b, _)| **b != 0)
                .fold(Rational::ZERO, |acc, (&b, c)| acc + c * Rational::from(b));
            if back != *xv {
                return Err(Error::Descent {
                    target: m,
                    witness: r,
                });
            }
        }
        Self::from_coeffs(m, &coeffs)
    }

    /// Smallest m dividing `order()` such that the value lies in Q(zeta_m).
    pub fn minimal_order(&self) -> u32 {
        let n = self.order;
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .find(|&d| self.descend(d).is_ok())
            .unwrap_or(n)
    }

    /// Multiplicative inverse: the product of the nontrivial Galois
    /// conjugates divided by the field norm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&(Rational::ONE / q)));
        }
        let n = self.order;
        let x = self.descend(self.minimal_order())?;
        let m = x.order as i64;
        let mut conj_product = Self::one();
        for k in 2..m {
            if gcd(k as u64, m as u64) == 1 {
                conj_product = conj_product.try_mul(&x.automorphism(k))?;
            }
        }
        let norm = x.try_mul(&conj_product)?;
        let norm = norm
            .as_rational()
            .ok_or_else(|| Error::Internal(format!("norm of an element of Q(zeta_{n}) is not rational")))?;
        Ok(conj_product.scale(&(Rational::ONE / norm)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inverse()?)
    }

    pub fn to_complex(&self) -> Complex64 {
        let den = f64::rounding_from(&self.den, RoundingMode::Nearest).0;
        let n = self.order as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.num.iter().enumerate() {
            if is_zero(c) {
                continue;
            }
            let v = f64::rounding_from(c, RoundingMode::Nearest).0 / den;
            z += Complex64::from_polar(v, 2.0 * std::f64::consts::PI * i as f64 / n);
        }
        z
    }

    /// Whether the value is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.order <= 2 || self.conj() == *self
    }

    /// Sign of a real value; `None` if the value is not real.
    pub fn real_sign(&self) -> Option<Ordering> {
        if let Some(q) = self.as_rational() {
            return Some(q.cmp(&Rational::ZERO));
        }
        if !self.is_real() {
            return None;
        }
        // Nonzero and real: the float approximation decides the sign.
        self.to_complex().re.partial_cmp(&0.0)
    }
}

/// Precomputed data for descending from Q(zeta_l) to Q(zeta_m).
struct DescentMap {
    /// `basis[r][i]`: coefficient r of zeta_m^i written at order l.
    basis: Vec<Vec<i64>>,
    /// Rows of `basis` forming an invertible square block.
    pivots: Vec<usize>,
    /// Inverse of that block.
    left_inverse: Vec<Vec<Rational>>,
}

type DescentCache = Mutex<HashMap<(u32, u32), Arc<DescentMap>>>;

fn descent_map(l: u32, m: u32) -> Result<Arc<DescentMap>> {
    static CACHE: OnceLock<DescentCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&(l, m)) {
        return Ok(d.clone());
    }
    let dl = tables(l)?.degree;
    let dm = tables(m)?.degree;
    let step = (l / m) as usize;
    let mut basis = vec![vec![0i64; dm]; dl];
    for i in 0..dm {
        let mut v = vec![Integer::ZERO; l as usize];
        v[i * step] = Integer::ONE;
        for (r, c) in reduce_cyclic(l, v).iter().enumerate() {
            basis[r][i] = i64::try_from(c).expect("cyclotomic polynomial coefficient overflow");
        }
    }
    // Greedily pick dm independent rows of the basis matrix.
    let mut pivots = Vec::with_capacity(dm);
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for (r, row) in basis.iter().enumerate() {
        let mut v: Vec<Rational> = row.iter().map(|&x| Rational::from(x)).collect();
        for e in &echelon {
            let lead = e.iter().position(|x| *x != Rational::ZERO).unwrap();
            if v[lead] != Rational::ZERO {
                let f = &v[lead] / &e[lead];
                for (a, b) in v.iter_mut().zip(e) {
                    *a -= &f * b;
                }
            }
        }
        if v.iter().any(|x| *x != Rational::ZERO) {
            echelon.push(v);
            pivots.push(r);
            if pivots.len() == dm {
                break;
            }
        }
    }
    if pivots.len() != dm {
        return Err(Error::Internal(format!("degenerate descent map {l} -> {m}")));
    }
    // Invert the square block by Gauss-Jordan.
    let mut aug: Vec<Vec<Rational>> = pivots
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let mut row: Vec<Rational> = basis[r].iter().map(|&x| Rational::from(x)).collect();
            row.extend((0..dm).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }));
            row
        })
        .collect();
    for col in 0..dm {
        let p = (col..dm)
            .find(|&r| aug[r][col] != Rational::ZERO)
            .ok_or_else(|| Error::Internal("singular descent block".into()))?;
        aug.swap(col, p);
        let inv = Rational::ONE / &aug[col][col];
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && row[col] != Rational::ZERO {
                let f = row[col].clone();
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a -= &f * b;
                }
            }
        }
    }
    let left_inverse = aug.into_iter().map(|row| row[dm..].to_vec()).collect();
    let map = Arc::new(DescentMap {
        basis,
        pivots,
        left_inverse,
    });
    cache.lock().unwrap().insert((l, m), map.clone());
    Ok(map)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        let l = match lcm_order(self.order, other.order) {
            Ok(l) => l,
            Err(_) => return false,
        };
        let a = Self::normalized(l, self.at_order(l).0, self.den.clone());
        let b = Self::normalized(l, other.at_order(l).0, other.den.clone());
        a.order == b.order && a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<&Rational> for Cyclotomic {
    fn from(q: &Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        must(self.try_add(rhs))
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        must(self.try_mul(rhs))
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

/// Canonical text form: a sum of `q*E(n)^k` terms, `E(n)` = exp(2 pi i/n).
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if is_zero(c) {
                continue;
            }
            let q = Rational::from_integers_ref(c, &self.den);
            let negative = q < Rational::ZERO;
            let mag = if negative { -q } else { q };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != Rational::ONE {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                write!(f, "E({})", self.order)?;
            } else {
                write!(f, "E({})^{k}", self.order)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(q: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(q, k).unwrap()
    }

    fn legendre13(k: i64) -> i64 {
        let squares = [1, 4, 9, 3, 12, 10];
        if squares.contains(&(k.rem_euclid(13))) {
            1
        } else {
            -1
        }
    }

    fn gauss13() -> Cyclotomic {
        let mut s = CycloSum::new();
        for k in 1..13 {
            s.add_shifted(&Cyclotomic::from_integer(legendre13(k)), 13, k);
        }
        s.finish()
    }

    #[test]
    fn roots_and_identities() {
        assert!(z(1, 0).is_one());
        assert_eq!(z(4, 2), Cyclotomic::from_integer(-1));
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_integer(-1));
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_integer(-1));
        assert_eq!(z(12, 2), z(6, 1));
        assert_eq!(z(12, 3), z(4, 1));
        assert_ne!(z(12, 1), z(6, 1));
        assert!(matches!(Cyclotomic::root_of_unity(0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn gauss_sum_squares_to_13() {
        let g = gauss13();
        assert_eq!(&g * &g, Cyclotomic::from_integer(13));
        assert!((g.to_complex().re - 13f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn gauss_sum_product_by_float_expansion() {
        // brute 144-term expansion in complex floats
        let mut re = 0.0;
        let mut im = 0.0;
        for j in 1..13 {
            for k in 1..13 {
                let a = 2.0 * std::f64::consts::PI * (j + k) as f64 / 13.0;
                let s = (legendre13(j) * legendre13(k)) as f64;
                re += s * a.cos();
                im += s * a.sin();
            }
        }
        assert!((re - 13.0).abs() < 1e-9 && im.abs() < 1e-9);
    }

    #[test]
    fn inverses() {
        assert_eq!(z(5, 1).inverse().unwrap(), z(5, 4));
        assert_eq!(
            Cyclotomic::from_integer(2).inverse().unwrap(),
            Cyclotomic::from_fraction(1, 2)
        );
        let x = &Cyclotomic::one() + &z(3, 1);
        assert!((&x * &x.inverse().unwrap()).is_one());
        assert_eq!(Cyclotomic::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(3, 1).galois_apply(2, 3).unwrap(), z(3, 2));
        let q = Cyclotomic::from_fraction(7, 3);
        assert_eq!(q.galois_apply(5, 12).unwrap(), q);
        let g = gauss13();
        assert_eq!(g.galois_apply(2, 13).unwrap(), -&g);
        assert!(matches!(z(4, 1).galois_apply(2, 4), Err(Error::Domain(_))));
        assert!(matches!(z(12, 1).galois_apply(5, 6), Err(Error::Descent { .. })));
    }

    #[test]
    fn descent_examples() {
        let minus_one = Cyclotomic::from_integer(-1).embed(12).unwrap();
        assert_eq!(minus_one.descend(1).unwrap().as_rational(), Some(Rational::from(-1)));
        let d = z(12, 2).descend(6).unwrap();
        assert_eq!(d.order(), 6);
        assert_eq!(d, z(6, 1));
        assert!(matches!(z(12, 1).descend(6), Err(Error::Descent { target: 6, .. })));
        // sqrt(-3) lives in Q(zeta_3) even when written at order 12
        let s = &z(12, 4) - &z(12, 8);
        assert_eq!(s.descend(3).unwrap().order(), 3);
        assert_eq!(s.minimal_order(), 3);
    }

    #[test]
    fn display_and_coeffs() {
        assert_eq!(z(4, 1).to_string(), "E(4)");
        assert_eq!(z(3, 2).to_string(), "-1 - E(3)");
        assert_eq!(Cyclotomic::from_fraction(-5, 6).to_string(), "-5/6");
        let x = &z(13, 2).scale(&Rational::from_signeds(1, 3)) - &z(13, 11);
        assert_eq!(x.to_string(), "1/3*E(13)^2 - E(13)^11");
        assert_eq!(x.coeffs().len(), 12);
    }

    #[test]
    fn mixed_order_arithmetic() {
        // zeta_3 * zeta_13 = zeta_39^(13 + 3)
        assert_eq!(&z(3, 1) * &z(13, 1), z(39, 16));
        assert_eq!(z(13, 5).mul_root(3, 1).unwrap(), z(39, 28));
        assert_eq!((&z(39, 16) - &z(39, 16)).order(), 1);
    }

    #[test]
    fn order_cap_respected() {
        assert!(matches!(
            Cyclotomic::root_of_unity(20_000, 1),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn real_sign() {
        let g = gauss13();
        assert_eq!(g.real_sign(), Some(Ordering::Greater));
        assert_eq!((-&g).real_sign(), Some(Ordering::Less));
        assert_eq!(z(4, 1).real_sign(), None);
    }
}
