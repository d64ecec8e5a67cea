use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rewrite::{RewriteRule, Word};

/// A reduced monomial `x^{i_n} a ... x^{i_2} a x^{i_1} a^{i_0}` stored as
/// its exponent vector `(i_0, i_1, ..., i_n)`.
///
/// `n` is the depth. The middle exponents `i_1..i_{n-1}` are positive, which
/// makes the vector unique; `1` is `(0, 0)`, `a^k` is `(k, 0)` and `x^k` is
/// `(0, k)`.
///
/// `Ord` is the monomial order `≺`: a larger trailing `a`-power is smaller,
/// ties are broken by the first differing `x`-exponent read from the right,
/// and a monomial that is a proper right subword of another is smaller.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReducedMonomial {
    exps: Vec<u32>,
}

impl ReducedMonomial {
    pub fn one() -> Self {
        ReducedMonomial { exps: vec![0, 0] }
    }

    pub fn a_pow(k: u32) -> Self {
        ReducedMonomial { exps: vec![k, 0] }
    }

    pub fn x_pow(k: u32) -> Self {
        ReducedMonomial { exps: vec![0, k] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Result<Self> {
        if exps.len() < 2 {
            return Err(Error::Dimension(format!(
                "exponent vector needs at least 2 entries, got {}",
                exps.len()
            )));
        }
        let n = exps.len() - 1;
        if exps[1..n].iter().any(|&e| e == 0) {
            return Err(Error::Dimension(format!(
                "middle exponents of {exps:?} must be positive"
            )));
        }
        Ok(ReducedMonomial { exps })
    }

    /// Parses an `aax`-free word.
    pub fn from_word(w: &Word) -> Result<Self> {
        if !RewriteRule::dk().is_normal(w) {
            return Err(Error::NotReduced(w.to_string()));
        }
        let mut b = Builder::new();
        for &letter in w.as_bytes() {
            match letter {
                b'a' => b.push_a(1),
                b'x' => b.push_x(1),
                other => {
                    return Err(Error::InvalidLetter {
                        letter: other as char,
                        first: 'a',
                        second: 'x',
                    })
                }
            }
        }
        Ok(b.finish())
    }

    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.len());
        let n = self.depth();
        for k in (1..=n).rev() {
            letters.extend(std::iter::repeat_n(b'x', self.exps[k] as usize));
            if k > 1 {
                letters.push(b'a');
            }
        }
        letters.extend(std::iter::repeat_n(b'a', self.exps[0] as usize));
        Word::from_bytes(letters)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn depth(&self) -> usize {
        self.exps.len() - 1
    }

    /// Letter count of the expanded word.
    pub fn len(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum::<usize>() + self.depth() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0, 0]
    }

    /// Trailing `a`-exponent `i_0`.
    pub fn trailing_a(&self) -> u32 {
        self.exps[0]
    }

    pub fn in_ra(&self) -> bool {
        self.exps[0] >= 1
    }

    pub fn in_rx(&self) -> bool {
        self.exps[0] == 0 && self.exps[1] >= 1
    }

    /// `1` or a pure power of `a`.
    pub fn is_a_power(&self) -> bool {
        self.exps.len() == 2 && self.exps[1] == 0
    }

    /// The right subword `m(l) = x^{i_l} a ... a x^{i_1} a^{i_0}`.
    pub fn subword(&self, l: usize) -> Result<Self> {
        if l == 0 || l > self.depth() {
            return Err(Error::Depth {
                requested: l,
                depth: self.depth(),
            });
        }
        Ok(ReducedMonomial {
            exps: self.exps[..=l].to_vec(),
        })
    }

    /// The unique `m'` with `m' a = m`, if `m` ends in `a`.
    pub fn strip_a(&self) -> Option<Self> {
        if self.exps[0] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[0] -= 1;
        Some(ReducedMonomial { exps })
    }

    /// Reduced product, computed on exponents without expanding words.
    pub fn mul(&self, rhs: &ReducedMonomial) -> ReducedMonomial {
        let mut b = Builder::from_monomial(self);
        b.append(rhs);
        b.finish()
    }
}

impl Ord for ReducedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps[0]
            .cmp(&self.exps[0])
            .then_with(|| self.exps[1..].cmp(&other.exps[1..]))
    }
}

impl PartialOrd for ReducedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let power = |f: &mut fmt::Formatter<'_>, letter: char, e: u32| match e {
            0 => Ok(()),
            1 => write!(f, "{letter}"),
            _ => write!(f, "{letter}^{e}"),
        };
        let n = self.depth();
        for k in (1..=n).rev() {
            power(f, 'x', self.exps[k])?;
            if k > 1 {
                f.write_str("a")?;
            }
        }
        power(f, 'a', self.exps[0])
    }
}

impl fmt::Debug for ReducedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Streaming normalizer: accepts letters left to right and keeps the word
/// reduced. State is `x^{runs[0]} a x^{runs[1]} ... a x^{runs[last]} a^{tail}`.
struct Builder {
    runs: Vec<u32>,
    tail: u32,
}

impl Builder {
    fn new() -> Self {
        Builder {
            runs: vec![0],
            tail: 0,
        }
    }

    fn from_monomial(m: &ReducedMonomial) -> Self {
        let mut runs = Vec::with_capacity(m.exps.len() + 4);
        runs.extend(m.exps[1..].iter().rev());
        Builder {
            runs,
            tail: m.exps[0],
        }
    }

    fn push_a(&mut self, k: u32) {
        self.tail += k;
    }

    fn push_x(&mut self, mut s: u32) {
        if s == 0 {
            return;
        }
        match self.tail {
            0 => *self.runs.last_mut().expect("runs is never empty") += s,
            1 => {
                self.runs.push(s);
                self.tail = 0;
            }
            r => {
                // a^r x^s -> a^{r-t} x^{s-t}
                let t = (r - 1).min(s);
                self.tail -= t;
                s -= t;
                if s > 0 {
                    self.runs.push(s);
                    self.tail = 0;
                }
            }
        }
    }

    fn append(&mut self, m: &ReducedMonomial) {
        let n = m.depth();
        self.push_x(m.exps[n]);
        for k in (1..n).rev() {
            self.push_a(1);
            self.push_x(m.exps[k]);
        }
        self.push_a(m.exps[0]);
    }

    fn finish(mut self) -> ReducedMonomial {
        let mut exps = Vec::with_capacity(self.runs.len() + 1);
        exps.push(self.tail);
        self.runs.reverse();
        exps.extend(self.runs);
        ReducedMonomial { exps }
    }
}

/// All reduced monomials of length at most `max_len`, sorted ascending by `≺`.
pub fn enumerate_monomials(max_len: usize) -> Vec<ReducedMonomial> {
    fn extend(word: &mut Vec<u8>, max_len: usize, out: &mut Vec<ReducedMonomial>) {
        out.push(
            ReducedMonomial::from_word(&Word::from_bytes(word.clone()))
                .expect("generated words avoid aax"),
        );
        if word.len() == max_len {
            return;
        }
        for letter in [b'a', b'x'] {
            if letter == b'x' && word.ends_with(b"aa") {
                continue;
            }
            word.push(letter);
            extend(word, max_len, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(max_len), max_len, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::Alphabet;

    fn m(s: &str) -> ReducedMonomial {
        ReducedMonomial::from_word(&Word::parse(Alphabet::AX, s).unwrap()).unwrap()
    }

    #[test]
    fn exponent_parsing() {
        assert_eq!(m("ax").exponents(), &[0, 1, 0]);
        assert_eq!(m("ax").depth(), 2);
        assert_eq!(m("aaaa").exponents(), &[4, 0]);
        assert_eq!(m("xxxaxx").exponents(), &[0, 2, 3]);
        assert_eq!(m("xxxaxx").len(), 6);
        assert_eq!(m("xaaa").len(), 4);
        assert_eq!(m("").exponents(), &[0, 0]);
        assert!(matches!(
            ReducedMonomial::from_word(&Word::parse(Alphabet::AX, "xaax").unwrap()),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn from_exponents_validates_middle() {
        assert!(ReducedMonomial::from_exponents(vec![1, 0, 2]).is_err());
        assert!(ReducedMonomial::from_exponents(vec![1]).is_err());
        assert_eq!(
            ReducedMonomial::from_exponents(vec![3, 1, 2]).unwrap(),
            m("xxaxaaa")
        );
    }

    #[test]
    fn subword_examples() {
        let w = m("xxaxaaa");
        assert_eq!(w.exponents(), &[3, 1, 2]);
        assert_eq!(w.subword(1).unwrap(), m("xaaa"));
        assert_eq!(w.subword(2).unwrap(), w);
        assert_eq!(m("ax").subword(1).unwrap(), m("x"));
        assert_eq!(
            w.subword(3),
            Err(Error::Depth {
                requested: 3,
                depth: 2
            })
        );
    }

    #[test]
    fn order_examples() {
        assert!(m("aa") < m("a"));
        assert!(m("x") < m("xx"));
        assert!(m("aa") < m("xaa"));
        assert!(m("a") < m("x"));
        assert!(m("xaaa") < m("xxaaa"));
        assert_eq!(m("ax").cmp(&m("ax")), Ordering::Equal);
        let set = [m("axaa"), m("xxaa"), m("ax")];
        assert_eq!(set.iter().max().unwrap(), &m("ax"));
    }

    #[test]
    fn product_examples() {
        assert_eq!(m("a").mul(&m("ax")), m("a"));
        assert_eq!(m("aa").mul(&m("x")), m("a"));
        assert_eq!(m("aaa").mul(&m("xxaxa")), m("aa"));
        assert_eq!(m("x").mul(&m("a")), m("xa"));
        assert_eq!(m("").mul(&m("xa")), m("xa"));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_monomials(0), vec![ReducedMonomial::one()]);
        assert_eq!(enumerate_monomials(2).len(), 7);
        assert_eq!(enumerate_monomials(3).len(), 14);
        let list = enumerate_monomials(6);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }
}
