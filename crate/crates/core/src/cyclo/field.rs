//! Per-order tables for Q(zeta_n): Euler's totient and the cyclotomic
//! polynomial Phi_n, memoized behind a global lock.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Default upper bound on the order of any cyclotomic field touched.
pub const DEFAULT_ORDER_CAP: u64 = 10_000;

static ORDER_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ORDER_CAP);

/// Current order cap.
pub fn order_cap() -> u64 {
    ORDER_CAP.load(Ordering::Relaxed)
}

/// Replace the order cap. Values below 1 are clamped to 1.
pub fn set_order_cap(cap: u64) {
    ORDER_CAP.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_order(order: u64) -> Result<()> {
    let cap = order_cap();
    if order == 0 {
        return Err(Error::Domain("cyclotomic order must be positive".into()));
    }
    if order > cap {
        return Err(Error::OrderCap { order, cap });
    }
    Ok(())
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Tables for a single order `n`.
#[derive(Debug)]
pub struct FieldTables {
    pub order: u32,
    pub degree: usize,
    /// Phi_n as dense integer coefficients, lowest degree first; monic.
    pub phi: Vec<i64>,
    /// Nonzero terms `(exponent, coefficient)` of Phi_n below the leading one.
    pub(crate) tail: Vec<(usize, i64)>,
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<FieldTables>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldTables>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact division of `num` by the monic `den` (both dense, low degree first).
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn build(n: u32) -> Result<FieldTables> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let sub = tables(d)?;
            poly = div_monic(&poly, &sub.phi);
        }
    }
    let degree = poly.len() - 1;
    debug_assert_eq!(degree as u64, totient(n as u64));
    let tail = poly[..degree]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| (e, c))
        .collect();
    Ok(FieldTables {
        order: n,
        degree,
        phi: poly,
        tail,
    })
}

/// Fetch (building on first use) the tables for order `n`.
pub fn tables(n: u32) -> Result<Arc<FieldTables>> {
    check_order(n as u64)?;
    if let Some(t) = cache().lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    // Built outside the lock: construction recurses into smaller orders.
    let built = Arc::new(build(n)?);
    let mut guard = cache().lock().unwrap();
    Ok(guard.entry(n).or_insert(built).clone())
}

/// Degree of Q(zeta_n) over Q.
pub fn degree(n: u32) -> usize {
    totient(n as u64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(tables(1).unwrap().phi, vec![-1, 1]);
        assert_eq!(tables(2).unwrap().phi, vec![1, 1]);
        assert_eq!(tables(4).unwrap().phi, vec![1, 0, 1]);
        assert_eq!(tables(6).unwrap().phi, vec![1, -1, 1]);
        assert_eq!(tables(12).unwrap().phi, vec![1, 0, -1, 0, 1]);
        assert_eq!(tables(13).unwrap().phi, vec![1; 13]);
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let t = tables(105).unwrap();
        assert_eq!(t.degree, 48);
        assert_eq!(t.phi[7], -2);
        assert_eq!(t.phi[41], -2);
    }

    #[test]
    fn totients() {
        let expected = [(1, 1), (2, 1), (12, 4), (13, 12), (39, 24), (78, 24), (156, 48)];
        for (n, phi) in expected {
            assert_eq!(totient(n), phi, "phi({n})");
        }
    }

    #[test]
    fn order_zero_rejected() {
        assert!(matches!(tables(0), Err(Error::Domain(_))));
    }
}
