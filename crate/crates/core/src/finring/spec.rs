//! Text syntax for finite rings:
//!
//! ```text
//! spec    := factor ( "x" factor )*
//! factor  := "Z" n | "Z/" n | "F2" | "M" k "(" spec ")" | "T" k "(" spec ")"
//!          | "F2[t]/" ( "t^" k | "(" poly ")" ) | "(" spec ")"
//! poly    := term ( "+" term )*,  term := "1" | "t" | "t^" k
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(u32),
    Matrix(Box<RingSpec>, u32),
    UpperTriangular(Box<RingSpec>, u32),
    /// `F2[t]/(p)`, `p` given by its coefficient bits (bit `i` is `t^i`).
    PolyQuotient(u32),
    Product(Box<RingSpec>, Box<RingSpec>),
}

impl RingSpec {
    /// Number of elements, or `None` past `u64`.
    pub fn order(&self) -> Option<u64> {
        match self {
            RingSpec::Zmod(n) => Some(*n as u64),
            RingSpec::Matrix(base, k) => base.order()?.checked_pow(k * k),
            RingSpec::UpperTriangular(base, k) => base.order()?.checked_pow(k * (k + 1) / 2),
            RingSpec::PolyQuotient(p) => 1u64.checked_shl(31 - p.leading_zeros()),
            RingSpec::Product(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }
}

fn poly_to_string(p: u32) -> String {
    let mut terms = Vec::new();
    for i in (0..32).rev().filter(|i| p >> i & 1 == 1) {
        terms.push(match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        });
    }
    terms.join("+")
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(2) => f.write_str("F2"),
            RingSpec::Zmod(n) => write!(f, "Z{n}"),
            RingSpec::Matrix(base, k) => write!(f, "M{k}({base})"),
            RingSpec::UpperTriangular(base, k) => write!(f, "T{k}({base})"),
            RingSpec::PolyQuotient(p) if p.count_ones() == 1 => {
                write!(f, "F2[t]/t^{}", p.trailing_zeros())
            }
            RingSpec::PolyQuotient(p) => write!(f, "F2[t]/({})", poly_to_string(*p)),
            RingSpec::Product(a, b) => {
                let wrap = |s: &RingSpec| match s {
                    RingSpec::Product(..) => format!("({s})"),
                    _ => s.to_string(),
                };
                write!(f, "{} x {}", wrap(a), wrap(b))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos + 1, format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::parse(start + 1, "expected a number"))
    }

    fn spec(&mut self) -> Result<RingSpec> {
        let mut acc = self.factor()?;
        while self.eat("x") || self.eat("×") {
            acc = RingSpec::Product(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn bracketed(&mut self) -> Result<RingSpec> {
        self.expect("(")?;
        let inner = self.spec()?;
        self.expect(")")?;
        Ok(inner)
    }

    fn factor(&mut self) -> Result<RingSpec> {
        let column = self.pos + 1;
        match self.peek() {
            Some(b'(') => self.bracketed(),
            Some(b'Z') => {
                self.pos += 1;
                self.eat("/");
                let n = self.number()?;
                if n < 2 {
                    return Err(Error::parse(column, "Z/n needs n >= 2"));
                }
                Ok(RingSpec::Zmod(n))
            }
            Some(b'F') => {
                self.expect("F2")?;
                if self.eat("[t]/") {
                    self.quotient()
                } else {
                    Ok(RingSpec::Zmod(2))
                }
            }
            Some(c @ (b'M' | b'T')) => {
                self.pos += 1;
                let k = self.number()?;
                if k == 0 {
                    return Err(Error::parse(column, "matrix size must be positive"));
                }
                let base = Box::new(self.bracketed()?);
                Ok(if c == b'M' {
                    RingSpec::Matrix(base, k)
                } else {
                    RingSpec::UpperTriangular(base, k)
                })
            }
            _ => Err(Error::parse(column, "expected Z, F2, M, T or `(`")),
        }
    }

    fn quotient(&mut self) -> Result<RingSpec> {
        let column = self.pos + 1;
        let p = if self.eat("(") {
            let p = self.poly()?;
            self.expect(")")?;
            p
        } else {
            self.term()?
        };
        if p < 2 {
            return Err(Error::parse(column, "modulus must have positive degree"));
        }
        Ok(RingSpec::PolyQuotient(p))
    }

    fn poly(&mut self) -> Result<u32> {
        let mut p = self.term()?;
        while self.eat("+") {
            p ^= self.term()?;
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<u32> {
        let column = self.pos + 1;
        if self.eat("1") {
            return Ok(1);
        }
        self.expect("t")?;
        let e = if self.eat("^") { self.number()? } else { 1 };
        if e > 16 {
            return Err(Error::parse(column, "degree too large"));
        }
        Ok(1 << e)
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        if p.peek().is_some() {
            return Err(Error::parse(p.pos + 1, "trailing input"));
        }
        Ok(spec)
    }
}
