//! The Jacobson algebra `F2<b,c : bc = 1>`.
//!
//! Normal forms are `c^i b^j`. Letters follow the convention `bc = 1`,
//! `cb != 1`; a pair `(a, b)` with `ab = 1` elsewhere maps to our `(b, c)`.
//! The matrix units are `E_ij = c^i (1 - cb) b^j`, and
//! `d_n = b - c^n b^{n+1}` is nilpotent of index exactly `n + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grammar;
use crate::report::Report;
use crate::rewrite::{Alphabet, RewriteRule, Word};

/// `c^i b^j`, stored as `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JMonomial {
    pub c: u32,
    pub b: u32,
}

impl JMonomial {
    pub const ONE: JMonomial = JMonomial { c: 0, b: 0 };

    pub fn new(c: u32, b: u32) -> Self {
        JMonomial { c, b }
    }

    /// `b^j c^k` collapses `min(j, k)` pairs.
    pub fn mul(self, rhs: JMonomial) -> JMonomial {
        let cancel = self.b.min(rhs.c);
        JMonomial {
            c: self.c + rhs.c - cancel,
            b: rhs.b + self.b - cancel,
        }
    }

    pub fn from_word(w: &Word) -> Result<Self> {
        let bytes = w.as_bytes();
        let split = bytes.iter().take_while(|&&l| l == b'c').count();
        if bytes[split..].iter().any(|&l| l != b'b') {
            return Err(Error::NotReduced(w.to_string()));
        }
        Ok(JMonomial {
            c: split as u32,
            b: (bytes.len() - split) as u32,
        })
    }

    pub fn to_word(self) -> Word {
        let mut letters = vec![b'c'; self.c as usize];
        letters.extend(std::iter::repeat_n(b'b', self.b as usize));
        Word::from_bytes(letters)
    }
}

impl fmt::Display for JMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |f: &mut fmt::Formatter<'_>, letter: char, e: u32| match e {
            0 => Ok(()),
            1 => write!(f, "{letter}"),
            _ => write!(f, "{letter}^{e}"),
        };
        if *self == JMonomial::ONE {
            return f.write_str("1");
        }
        power(f, 'c', self.c)?;
        power(f, 'b', self.b)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct JElement {
    support: BTreeSet<JMonomial>,
}

impl JElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(JMonomial::ONE)
    }

    pub fn b() -> Self {
        Self::from(JMonomial::new(0, 1))
    }

    pub fn c() -> Self {
        Self::from(JMonomial::new(1, 0))
    }

    pub fn from_monomials<I: IntoIterator<Item = JMonomial>>(monomials: I) -> Self {
        let mut e = Self::zero();
        for m in monomials {
            e.toggle(m);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &BTreeSet<JMonomial> {
        &self.support
    }

    fn toggle(&mut self, m: JMonomial) {
        if !self.support.remove(&m) {
            self.support.insert(m);
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl From<JMonomial> for JElement {
    fn from(m: JMonomial) -> Self {
        JElement {
            support: BTreeSet::from([m]),
        }
    }
}

impl Add for &JElement {
    type Output = JElement;

    fn add(self, rhs: &JElement) -> JElement {
        JElement {
            support: self
                .support
                .symmetric_difference(&rhs.support)
                .copied()
                .collect(),
        }
    }
}

impl Mul for &JElement {
    type Output = JElement;

    fn mul(self, rhs: &JElement) -> JElement {
        let mut out = JElement::zero();
        for &u in &self.support {
            for &v in &rhs.support {
                out.toggle(u.mul(v));
            }
        }
        out
    }
}

impl FromStr for JElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rule = RewriteRule::jacobson();
        grammar::parse_words(Alphabet::BC, s)?
            .iter()
            .map(|w| JMonomial::from_word(&rule.normalize(w)))
            .collect::<Result<Vec<_>>>()
            .map(JElement::from_monomials)
    }
}

impl fmt::Display for JElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// `d_n = b + c^n b^{n+1}` (characteristic 2).
pub fn d_element(n: u32) -> JElement {
    assert!(n >= 1, "d_n is defined for n >= 1");
    JElement::from_monomials([JMonomial::new(0, 1), JMonomial::new(n, n + 1)])
}

/// `E_ij = c^i (1 + cb) b^j`.
pub fn matrix_unit(i: u32, j: u32) -> JElement {
    JElement::from_monomials([JMonomial::new(i, j), JMonomial::new(i + 1, j + 1)])
}

fn b_pow(k: u32) -> JElement {
    JElement::from(JMonomial::new(0, k))
}

fn c_pow(k: u32) -> JElement {
    JElement::from(JMonomial::new(k, 0))
}

/// Checks the identities behind the strictly increasing chain
/// `d_1 R ⊂ d_2 R ⊂ ...` for every `n <= nmax`.
pub fn verify_dn_suite(nmax: u32) -> Report {
    let mut report = Report::new("jacobson").param("nmax", nmax);
    let mut checked = 0u64;
    for n in 1..=nmax {
        let d = d_element(n);
        let mut check = |ok: bool, what: String| {
            checked += 1;
            if !ok {
                report.fail(what);
            }
        };
        let mut power = JElement::one();
        for k in 1..=n + 1 {
            power = &power * &d;
            check(
                power == &b_pow(k - 1) * &d,
                format!("d_{n}^{k} != b^{} d_{n}", k - 1),
            );
        }
        check(!d.pow(n).is_zero(), format!("d_{n}^{n} = 0"));
        check(d.pow(n + 1).is_zero(), format!("d_{n}^{} != 0", n + 1));
        check((&b_pow(n) * &d).is_zero(), format!("b^{n} d_{n} != 0"));
        let witness = &b_pow(n) + &(&c_pow(1) * &b_pow(n + 1));
        check(!witness.is_zero(), format!("b^{n} + c b^{} = 0", n + 1));
        let step =
            &d_element(n + 1) * &(&JElement::one() + &JElement::from(JMonomial::new(n + 1, n + 1)));
        check(
            step == d,
            format!("d_{} (1 + c^{m} b^{m}) != d_{n}", n + 1, m = n + 1),
        );
        check(
            !(&b_pow(n) * &d_element(n + 1)).is_zero(),
            format!("b^{n} d_{} = 0", n + 1),
        );
    }
    report.count("identities", checked);
    report.finish()
}

/// `E_ij E_kl = [j = k] E_il` for all indices up to `max_index`.
pub fn verify_matrix_units(max_index: u32) -> Report {
    let mut report = Report::new("matrix_units").param("max_index", max_index);
    let mut checked = 0u64;
    for i in 0..=max_index {
        for j in 0..=max_index {
            for k in 0..=max_index {
                for l in 0..=max_index {
                    let lhs = &matrix_unit(i, j) * &matrix_unit(k, l);
                    let rhs = if j == k {
                        matrix_unit(i, l)
                    } else {
                        JElement::zero()
                    };
                    checked += 1;
                    if lhs != rhs {
                        report.fail(format!("E_{i}{j} E_{k}{l} = {lhs}"));
                    }
                }
            }
        }
    }
    report.count("products", checked);
    report.finish()
}
