use std::collections::HashMap;

use super::BitVec;
use crate::dkring::{enumerate_monomials, ReducedMonomial, RingElement};

/// A finite, `≺`-sorted set of reduced monomials with a position lookup.
/// Coordinates of vectors over this basis follow the sorted order, so the
/// highest set bit of a coordinate vector is its `≺`-largest monomial.
#[derive(Debug, Clone)]
pub struct BasisIndex {
    bound: Option<usize>,
    monomials: Vec<ReducedMonomial>,
    index: HashMap<ReducedMonomial, usize>,
}

impl BasisIndex {
    /// Every reduced monomial of length at most `max_len`.
    pub fn enumerate(max_len: usize) -> Self {
        let mut b = Self::from_sorted(enumerate_monomials(max_len));
        b.bound = Some(max_len);
        b
    }

    pub fn from_monomials<I: IntoIterator<Item = ReducedMonomial>>(monomials: I) -> Self {
        let mut list: Vec<_> = monomials.into_iter().collect();
        list.sort();
        list.dedup();
        Self::from_sorted(list)
    }

    fn from_sorted(monomials: Vec<ReducedMonomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        BasisIndex {
            bound: None,
            monomials,
            index,
        }
    }

    /// The length bound, when built by [`BasisIndex::enumerate`].
    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[ReducedMonomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &ReducedMonomial {
        &self.monomials[i]
    }

    pub fn position(&self, m: &ReducedMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `e`, or `None` if its support leaves the basis.
    pub fn to_vector(&self, e: &RingElement) -> Option<BitVec> {
        let mut v = BitVec::zeros(self.len());
        for m in e.monomials() {
            v.set(self.position(m)?, true);
        }
        Some(v)
    }

    pub fn to_element(&self, v: &BitVec) -> RingElement {
        debug_assert_eq!(v.len(), self.len());
        RingElement::from_monomials(v.ones().map(|i| self.monomials[i].clone()))
    }
}
