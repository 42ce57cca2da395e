use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::field::{gcd, lcm};
use super::Cyclotomic;
use crate::error::{Error, Result};

/// exp(2 pi i * exponent / order), kept with `gcd(exponent, order) = 1`
/// and `0 <= exponent < order` (so 1 is `(1, 0)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

impl RootOfUnity {
    pub fn new(order: u32, exponent: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("root of unity of order 0".into()));
        }
        let e = exponent.rem_euclid(order as i64) as u64;
        let g = gcd(e, order as u64);
        Ok(RootOfUnity {
            order: (order as u64 / g) as u32,
            exponent: (e / g) as u32,
        })
    }

    pub const fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn inv(&self) -> Self {
        Self::new(self.order, -(self.exponent as i64)).unwrap()
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = (self.exponent as i64 * k.rem_euclid(self.order as i64)) % self.order as i64;
        Self::new(self.order, e).unwrap()
    }

    /// The n-th root `exp(2 pi i e/(q n))` using the stored exponent.
    pub fn canonical_root(&self, n: u32) -> Self {
        Self::new(self.order * n, self.exponent as i64).unwrap()
    }

    /// The n-th root whose argument is the stored angle, taken in
    /// (-pi, pi], divided by n.
    pub fn principal_root(&self, n: u32) -> Self {
        Self::new(self.order * n, self.signed_exponent()).unwrap()
    }

    /// Exponent representative in `(-order/2, order/2]`.
    pub fn signed_exponent(&self) -> i64 {
        let e = self.exponent as i64;
        if 2 * e > self.order as i64 {
            e - self.order as i64
        } else {
            e
        }
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.order, self.exponent as i64)
            .expect("root order exceeds the configured cap")
    }

    /// Render as `±e^(pπi/q)` with `0 <= p/q < 1`, or `1` / `-1`.
    pub fn to_pi_string(&self) -> String {
        // angle = 2e/order * pi
        let num = 2 * self.exponent as u64;
        let den = self.order as u64;
        let (negative, num) = if num >= den { (true, num - den) } else { (false, num) };
        if num == 0 {
            return if negative { "-1".into() } else { "1".into() };
        }
        let g = gcd(num, den);
        let (p, q) = (num / g, den / g);
        let sign = if negative { "-" } else { "" };
        if p == 1 {
            format!("{sign}e^(πi/{q})")
        } else {
            format!("{sign}e^({p}πi/{q})")
        }
    }

    /// `E(q)^e` form accepted by the expression parser.
    pub fn to_expr_string(&self) -> String {
        match (self.order, self.exponent) {
            (1, _) => "1".into(),
            (2, _) => "-1".into(),
            (q, 1) => format!("E({q})"),
            (q, e) => format!("E({q})^{e}"),
        }
    }

    /// Recover the root if `x` is exactly a root of unity.
    pub fn from_cyclotomic(x: &Cyclotomic) -> Option<Self> {
        match super::recognize(x).kind {
            super::Recognition::RootMultiple { coefficient, root }
                if coefficient == 1u32 =>
            {
                Some(root)
            }
            super::Recognition::Integer(n) if n == 1 => Some(Self::one()),
            super::Recognition::Integer(n) if n == -1 => Some(Self::new(2, 1).unwrap()),
            _ => None,
        }
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let l = lcm(self.order as u64, rhs.order as u64);
        let e = self.exponent as u64 * (l / self.order as u64)
            + rhs.exponent as u64 * (l / rhs.order as u64);
        RootOfUnity::new(l as u32, (e % l) as i64).unwrap()
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pi_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = RootOfUnity::new(78, 52).unwrap();
        assert_eq!((r.order(), r.exponent()), (3, 2));
        assert_eq!(RootOfUnity::new(5, -1).unwrap().exponent(), 4);
        assert!(RootOfUnity::new(7, 14).unwrap().is_one());
        assert!(RootOfUnity::new(0, 1).is_err());
    }

    #[test]
    fn pi_rendering() {
        let r = |q, e| RootOfUnity::new(q, e).unwrap().to_pi_string();
        assert_eq!(r(1, 0), "1");
        assert_eq!(r(2, 1), "-1");
        assert_eq!(r(3, 1), "e^(2πi/3)");
        assert_eq!(r(6, 1), "e^(πi/3)");
        assert_eq!(r(6, 4), "-e^(πi/3)");
        assert_eq!(r(3, 2), "-e^(πi/3)");
        assert_eq!(r(78, 44), "-e^(5πi/39)");
        assert_eq!(r(78, 2), "e^(2πi/39)");
    }

    #[test]
    fn roots() {
        let theta = RootOfUnity::new(13, 6).unwrap(); // e^(12πi/13)
        assert_eq!(theta.principal_root(2), RootOfUnity::new(26, 6).unwrap());
        let theta = RootOfUnity::new(13, 11).unwrap(); // e^(-4πi/13)
        assert_eq!(theta.principal_root(2), RootOfUnity::new(26, -2).unwrap());
        assert_eq!(theta.canonical_root(2), RootOfUnity::new(26, 11).unwrap());
        assert_eq!(theta.principal_root(2).pow(2), theta);
        let a = RootOfUnity::new(3, 1).unwrap();
        let b = RootOfUnity::new(13, 1).unwrap();
        assert_eq!(a * b, RootOfUnity::new(39, 16).unwrap());
        assert_eq!((a * b).to_cyclotomic(), &a.to_cyclotomic() * &b.to_cyclotomic());
        assert_eq!(a.inv() * a, RootOfUnity::one());
    }
}
