use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use super::monomial::ReducedMonomial;
use crate::error::{Error, Result};
use crate::grammar;
use crate::rewrite::{Alphabet, RewriteRule};

/// An element of `R = F2<a,x : a = a^2 x>`: the set of reduced monomials
/// with coefficient 1. Iteration is ascending in `≺`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RingElement {
    support: BTreeSet<ReducedMonomial>,
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(ReducedMonomial::one())
    }

    pub fn a() -> Self {
        Self::from(ReducedMonomial::a_pow(1))
    }

    pub fn x() -> Self {
        Self::from(ReducedMonomial::x_pow(1))
    }

    pub fn a_pow(k: u32) -> Self {
        Self::from(ReducedMonomial::a_pow(k))
    }

    pub fn x_pow(k: u32) -> Self {
        Self::from(ReducedMonomial::x_pow(k))
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = ReducedMonomial>>(monomials: I) -> Self {
        let mut e = Self::zero();
        for m in monomials {
            e.toggle(m);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &BTreeSet<ReducedMonomial> {
        &self.support
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &ReducedMonomial> {
        self.support.iter()
    }

    pub fn contains(&self, m: &ReducedMonomial) -> bool {
        self.support.contains(m)
    }

    pub fn toggle(&mut self, m: ReducedMonomial) {
        if !self.support.remove(&m) {
            self.support.insert(m);
        }
    }

    /// Longest monomial length in the support, 0 for the zero element.
    pub fn max_len(&self) -> usize {
        self.support
            .iter()
            .map(ReducedMonomial::len)
            .max()
            .unwrap_or(0)
    }

    /// The `≺`-largest monomial of the support.
    pub fn max_monomial(&self) -> Result<&ReducedMonomial> {
        self.support.last().ok_or(Error::ZeroElement)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Every support monomial ends in `a`; zero counts as in `Ra`.
    pub fn in_ra(&self) -> bool {
        self.support.iter().all(ReducedMonomial::in_ra)
    }

    pub fn has_rx_monomial(&self) -> bool {
        self.support.iter().any(ReducedMonomial::in_rx)
    }

    /// All support monomials are `1` or powers of `a`.
    pub fn in_f2a(&self) -> bool {
        self.support.iter().all(ReducedMonomial::is_a_power)
    }

    pub fn has_one(&self) -> bool {
        self.support.contains(&ReducedMonomial::one())
    }

    /// The unique `r` with `r a = self`.
    pub fn strip_a(&self) -> Result<Self> {
        self.support
            .iter()
            .map(|m| m.strip_a().ok_or_else(|| Error::NotInRa(self.to_string())))
            .collect::<Result<BTreeSet<_>>>()
            .map(|support| RingElement { support })
    }

    /// The element as a sum of words, for cross-checking against the
    /// generic rewriting arithmetic.
    pub fn to_algebra_element(&self) -> crate::rewrite::AlgebraElement {
        RewriteRule::dk().element(self.support.iter().map(ReducedMonomial::to_word))
    }
}

/// `k_n = a - a x^n a^n`.
pub fn kn(n: u32) -> RingElement {
    assert!(n >= 1, "k_n is defined for n >= 1");
    let tail = ReducedMonomial::from_exponents(vec![n, n, 0]).expect("valid exponents");
    RingElement::from_monomials([ReducedMonomial::a_pow(1), tail])
}

impl From<ReducedMonomial> for RingElement {
    fn from(m: ReducedMonomial) -> Self {
        RingElement {
            support: BTreeSet::from([m]),
        }
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        RingElement {
            support: self
                .support
                .symmetric_difference(&rhs.support)
                .cloned()
                .collect(),
        }
    }
}

impl Add for RingElement {
    type Output = RingElement;

    fn add(self, rhs: RingElement) -> RingElement {
        &self + &rhs
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for u in &self.support {
            for v in &rhs.support {
                out.toggle(u.mul(v));
            }
        }
        out
    }
}

impl Mul for RingElement {
    type Output = RingElement;

    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rule = RewriteRule::dk();
        let words = grammar::parse_words(Alphabet::AX, s)?;
        words
            .iter()
            .map(|w| ReducedMonomial::from_word(&rule.normalize(w)))
            .collect::<Result<Vec<_>>>()
            .map(RingElement::from_monomials)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.support.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
