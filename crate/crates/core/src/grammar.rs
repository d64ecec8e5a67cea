//! Text syntax for elements: `+`-separated terms, each `1`, `0`, or a
//! juxtaposition of letters with optional `^k` powers. Whitespace is ignored.
//!
//! ```text
//! a^2x + x a^3 + 1
//! ```

use crate::error::{Error, Result};
use crate::rewrite::{Alphabet, Word};

const MAX_POWER: usize = 100_000;

/// Expands every term of `input` into an (unreduced) word. A `0` term
/// contributes nothing.
pub fn parse_words(alphabet: Alphabet, input: &str) -> Result<Vec<Word>> {
    let chars: Vec<(usize, char)> = input
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut words = Vec::new();
    for term in chars.split(|&(_, c)| c == '+') {
        if term.is_empty() {
            let column = chars
                .iter()
                .find(|&&(_, c)| c == '+')
                .map_or(0, |&(i, _)| i);
            return Err(Error::parse(column, "empty term"));
        }
        if let [(_, c)] = term {
            match c {
                '1' => {
                    words.push(Word::empty());
                    continue;
                }
                '0' => continue,
                _ => {}
            }
        }
        let mut letters = Vec::new();
        let mut i = 0;
        while i < term.len() {
            let (col, c) = term[i];
            if !(c.is_ascii() && alphabet.contains(c as u8)) {
                let [first, second] = alphabet.letters();
                return Err(Error::parse(
                    col,
                    format!("expected `{first}`, `{second}`, `1` or `0`, found `{c}`"),
                ));
            }
            i += 1;
            let mut power = 1usize;
            if i < term.len() && term[i].1 == '^' {
                i += 1;
                let digits_start = i;
                while i < term.len() && term[i].1.is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    let col = term.get(digits_start).map_or(col + 1, |&(j, _)| j);
                    return Err(Error::parse(col, "expected exponent after `^`"));
                }
                let digits: String = term[digits_start..i].iter().map(|&(_, d)| d).collect();
                power = digits
                    .parse()
                    .ok()
                    .filter(|&p| p <= MAX_POWER)
                    .ok_or_else(|| Error::parse(term[digits_start].0, "exponent too large"))?;
            }
            letters.extend(std::iter::repeat_n(c as u8, power));
        }
        words.push(Word::from_bytes(letters));
    }
    Ok(words)
}
