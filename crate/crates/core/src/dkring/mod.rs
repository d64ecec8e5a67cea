//! The ring `R = F2<a,x : a = a^2 x>` on canonical exponent-vector monomials.

mod element;
mod monomial;
mod sample;

pub use element::{kn, RingElement};
pub use monomial::{enumerate_monomials, ReducedMonomial};
pub use sample::{random_element, MonomialSampler};

use crate::error::Result;
use crate::rewrite::Word;

pub fn to_exponents(w: &Word) -> Result<ReducedMonomial> {
    ReducedMonomial::from_word(w)
}

pub fn from_exponents(m: &ReducedMonomial) -> Word {
    m.to_word()
}
