//! Parser for cyclotomic expressions such as `1/3*E(13)^2 - E(13)^11`.
//!
//! ```text
//! expr     := sign? term (('+' | '-') term)*
//! term     := rational ('*' root)? | root
//! root     := 'E(' int ')' ('^' '-'? int)?
//! rational := int ('/' int)?
//! ```
//!
//! `E(n)` is `exp(2 pi i / n)`. Whitespace is ignored between tokens.

use std::str::FromStr;

use crate::cyclo::{CycloSum, Cyclotomic, Integer, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("'{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("digit");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_int(&mut self) -> Result<i64> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Syntax {
            position: start,
            expected: "integer that fits in 64 bits".into(),
        })
    }

    fn rational(&mut self) -> Result<Rational> {
        let n = Integer::from_str(self.digits()?).expect("digits");
        if self.eat(b'/') {
            let at = self.pos;
            let d = Integer::from_str(self.digits()?).expect("digits");
            if d == 0 {
                self.pos = at;
                return self.fail("nonzero denominator");
            }
            return Ok(Rational::from_integers(n, d));
        }
        Ok(Rational::from(n))
    }

    /// `E(n)^k`, returned as `(n, k)`.
    fn root(&mut self) -> Result<(u32, i64)> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let at = self.pos;
        let n = self.small_int()?;
        if n == 0 {
            return Err(Error::Domain(format!("E(0) at byte {at}")));
        }
        let n = u32::try_from(n).map_err(|_| Error::Syntax {
            position: at,
            expected: "order below 2^32".into(),
        })?;
        self.expect(b')')?;
        let mut k = 1;
        if self.eat(b'^') {
            let negative = self.eat(b'-');
            let e = self.small_int()?;
            k = if negative { -e } else { e };
        }
        Ok((n, k))
    }

    fn term(&mut self, sum: &mut CycloSum, negative: bool) -> Result<()> {
        let (coeff, root) = match self.peek() {
            Some(b'E') => (Rational::from(1), Some(self.root()?)),
            Some(c) if c.is_ascii_digit() => {
                let q = self.rational()?;
                let root = if self.eat(b'*') {
                    Some(self.root()?)
                } else {
                    None
                };
                (q, root)
            }
            _ => return self.fail("number or E(n)"),
        };
        let coeff = if negative { -coeff } else { coeff };
        let value = Cyclotomic::from_rational(&coeff);
        match root {
            None => sum.add(&value),
            Some((n, k)) => {
                crate::cyclo::field::tables(n)?;
                sum.add_shifted(&value, n, k);
            }
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut sum = CycloSum::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            self.term(&mut sum, negative)?;
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.fail("'+', '-' or end of input"),
            }
            self.pos += 1;
        }
        Ok(sum.finish())
    }
}

/// Parse an exact cyclotomic expression.
pub fn parse_expr(s: &str) -> Result<Cyclotomic> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    p.expr()
}
