//! Single-rule, length-reducing string rewriting over a two-letter alphabet,
//! and F2-algebra arithmetic on normal forms.
//!
//! Both algebras handled by this crate are presented by one relation whose
//! left-hand side has no self-overlap, so every word has a unique normal form
//! and the normal forms of a rule form an F2 basis of the quotient algebra.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: [u8; 2],
}

impl Alphabet {
    pub const AX: Alphabet = Alphabet {
        letters: [b'a', b'x'],
    };
    pub const BC: Alphabet = Alphabet {
        letters: [b'b', b'c'],
    };

    pub fn new(first: char, second: char) -> Self {
        assert!(first.is_ascii() && second.is_ascii() && first != second);
        Alphabet {
            letters: [first as u8, second as u8],
        }
    }

    pub fn letters(&self) -> [char; 2] {
        [self.letters[0] as char, self.letters[1] as char]
    }

    pub fn contains(&self, letter: u8) -> bool {
        self.letters.contains(&letter)
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> + '_ {
        assert!(len < 64);
        (0u64..(1u64 << len)).map(move |bits| {
            Word(
                (0..len)
                    .map(|i| self.letters[((bits >> (len - 1 - i)) & 1) as usize])
                    .collect(),
            )
        })
    }
}

/// A word over some alphabet; the empty word is the identity `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            if c.is_ascii() && alphabet.contains(c as u8) {
                letters.push(c as u8);
            } else {
                let [first, second] = alphabet.letters();
                return Err(Error::InvalidLetter {
                    letter: c,
                    first,
                    second,
                });
            }
        }
        Ok(Word(letters))
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Word(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        self.find_first(factor).is_some()
    }

    fn find_first(&self, factor: &Word) -> Option<usize> {
        if factor.len() > self.len() {
            return None;
        }
        self.0
            .windows(factor.len())
            .position(|w| w == factor.0.as_slice())
    }

    fn find_last(&self, factor: &Word) -> Option<usize> {
        if factor.len() > self.len() {
            return None;
        }
        self.0
            .windows(factor.len())
            .rposition(|w| w == factor.0.as_slice())
    }

    fn splice(&self, at: usize, remove: usize, insert: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() - remove + insert.len());
        letters.extend_from_slice(&self.0[..at]);
        letters.extend_from_slice(&insert.0);
        letters.extend_from_slice(&self.0[at + remove..]);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        // Safe: letters are validated ASCII.
        f.write_str(std::str::from_utf8(&self.0).unwrap())
    }
}

/// Which redex a naive reduction step rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    alphabet: Alphabet,
    pattern: Word,
    replacement: Word,
}

/// Validates a rule: it must shrink words and its pattern must not overlap
/// itself.
pub fn check_rule(alphabet: Alphabet, pattern: Word, replacement: Word) -> Result<RewriteRule> {
    for &letter in pattern.as_bytes().iter().chain(replacement.as_bytes()) {
        if !alphabet.contains(letter) {
            let [first, second] = alphabet.letters();
            return Err(Error::InvalidLetter {
                letter: letter as char,
                first,
                second,
            });
        }
    }
    if pattern.is_empty() || replacement.len() >= pattern.len() {
        return Err(Error::NotReducing {
            pattern: pattern.to_string(),
            replacement: replacement.to_string(),
        });
    }
    let p = pattern.as_bytes();
    if (1..p.len()).any(|k| p[p.len() - k..] == p[..k]) {
        return Err(Error::Overlap(pattern.to_string()));
    }
    Ok(RewriteRule {
        alphabet,
        pattern,
        replacement,
    })
}

impl RewriteRule {
    /// `aax -> a`, the defining relation `a = a^2 x`.
    pub fn dk() -> Self {
        check_rule(Alphabet::AX, Word(b"aax".to_vec()), Word(b"a".to_vec()))
            .expect("aax -> a is a valid rule")
    }

    /// `bc -> 1`, the Jacobson algebra relation.
    pub fn jacobson() -> Self {
        check_rule(Alphabet::BC, Word(b"bc".to_vec()), Word::empty())
            .expect("bc -> 1 is a valid rule")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn pattern(&self) -> &Word {
        &self.pattern
    }

    pub fn replacement(&self) -> &Word {
        &self.replacement
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        !w.contains_factor(&self.pattern)
    }

    /// Normal form of `w`, computed in one left-to-right pass with a stack.
    pub fn normalize(&self, w: &Word) -> Word {
        let pattern = self.pattern.as_bytes();
        let replacement = self.replacement.as_bytes();
        let mut stack: Vec<u8> = Vec::with_capacity(w.len());
        let mut pending: Vec<u8> = w.as_bytes().iter().rev().copied().collect();
        while let Some(letter) = pending.pop() {
            stack.push(letter);
            if stack.ends_with(pattern) {
                stack.truncate(stack.len() - pattern.len());
                pending.extend(replacement.iter().rev());
            }
        }
        Word(stack)
    }

    /// Normal form by repeatedly rewriting the leftmost or rightmost redex.
    pub fn normalize_with(&self, w: &Word, strategy: Strategy) -> Word {
        let mut current = w.clone();
        loop {
            let at = match strategy {
                Strategy::Leftmost => current.find_first(&self.pattern),
                Strategy::Rightmost => current.find_last(&self.pattern),
            };
            match at {
                Some(i) => current = current.splice(i, self.pattern.len(), &self.replacement),
                None => return current,
            }
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::monomial(Word::empty())
    }

    /// The element represented by a sum of arbitrary words.
    pub fn element<I: IntoIterator<Item = Word>>(&self, words: I) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        for w in words {
            e.toggle(self.normalize(&w));
        }
        e
    }

    pub fn add(&self, e1: &AlgebraElement, e2: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            support: e1
                .support
                .symmetric_difference(&e2.support)
                .cloned()
                .collect(),
        }
    }

    pub fn mul(&self, e1: &AlgebraElement, e2: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for u in &e1.support {
            for v in &e2.support {
                out.toggle(self.normalize(&u.concat(v)));
            }
        }
        out
    }

    pub fn pow(&self, e: &AlgebraElement, k: u32) -> AlgebraElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, e);
        }
        acc
    }
}

/// An element of a single-rule quotient of the free F2-algebra, stored as
/// its set of normal-form words.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    support: BTreeSet<Word>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    fn monomial(w: Word) -> Self {
        AlgebraElement {
            support: BTreeSet::from([w]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &BTreeSet<Word> {
        &self.support
    }

    fn toggle(&mut self, w: Word) {
        if !self.support.remove(&w) {
            self.support.insert(w);
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        for (i, w) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}
