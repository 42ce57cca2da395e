use malachite_base::num::basic::traits::Zero;
use malachite_nz::integer::Integer;
use malachite_q::Rational;
use num_complex::Complex64;

use super::field::lcm;
use super::{Cyclotomic, RootOfUnity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Zero,
    Integer(Integer),
    /// A non-integral rational.
    Rational(Rational),
    /// `coefficient * root` with a positive rational coefficient and a root
    /// other than ±1.
    RootMultiple {
        coefficient: Rational,
        root: RootOfUnity,
    },
    /// Not a rational multiple of a root of unity.
    Irregular,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub kind: Recognition,
    pub approx: Complex64,
}

impl Classification {
    /// The value as a non-negative machine integer, if it is one.
    pub fn as_count(&self) -> Option<u64> {
        match &self.kind {
            Recognition::Zero => Some(0),
            Recognition::Integer(n) if *n > Integer::ZERO => u64::try_from(n).ok(),
            _ => None,
        }
    }
}

/// Classify `x`: zero, integer, rational, rational multiple of a root of
/// unity, or none of these.
pub fn recognize(x: &Cyclotomic) -> Classification {
    let approx = x.to_complex();
    let kind = classify(x);
    Classification { kind, approx }
}

fn classify(x: &Cyclotomic) -> Recognition {
    if x.is_zero() {
        return Recognition::Zero;
    }
    if let Some(n) = x.as_integer() {
        return Recognition::Integer(n);
    }
    if let Some(q) = x.as_rational() {
        return Recognition::Rational(q);
    }
    // The roots of unity in Q(zeta_n) are the lcm(n, 2)-th roots.
    let big = lcm(x.order() as u64, 2) as u32;
    for j in 0..big {
        let y = match x.mul_root(big, -(j as i64)) {
            Ok(y) => y,
            Err(_) => return Recognition::Irregular,
        };
        if let Some(q) = y.as_rational() {
            if q > Rational::ZERO {
                return Recognition::RootMultiple {
                    coefficient: q,
                    root: RootOfUnity::new(big, j as i64).unwrap(),
                };
            }
        }
    }
    Recognition::Irregular
}
