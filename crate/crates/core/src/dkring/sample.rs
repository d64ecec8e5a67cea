use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{enumerate_monomials, ReducedMonomial, RingElement};

/// Draws random elements supported on the monomials of bounded length.
#[derive(Debug, Clone)]
pub struct MonomialSampler {
    monomials: Vec<ReducedMonomial>,
}

impl MonomialSampler {
    pub fn new(max_len: usize) -> Self {
        MonomialSampler {
            monomials: enumerate_monomials(max_len),
        }
    }

    pub fn monomials(&self) -> &[ReducedMonomial] {
        &self.monomials
    }

    /// A uniformly sized random subset of at most `max_support` monomials.
    pub fn sample<R: Rng + ?Sized>(&self, max_support: usize, rng: &mut R) -> RingElement {
        let cap = max_support.min(self.monomials.len());
        let size = rng.random_range(0..=cap);
        self.sample_exact(size, rng)
    }

    /// A random subset of exactly `size` monomials (clamped to the pool).
    pub fn sample_exact<R: Rng + ?Sized>(&self, size: usize, rng: &mut R) -> RingElement {
        let size = size.min(self.monomials.len());
        RingElement::from_monomials(
            index::sample(rng, self.monomials.len(), size)
                .into_iter()
                .map(|i| self.monomials[i].clone()),
        )
    }
}

pub fn random_element(max_len: usize, max_support: usize, seed: u64) -> RingElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    MonomialSampler::new(max_len).sample(max_support, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        for seed in 0..20 {
            let e = random_element(0, 5, seed);
            assert!(e.is_zero() || e == RingElement::one());
            assert!(random_element(6, 0, seed).is_zero());
            let e = random_element(2, 7, seed);
            assert!(e.max_len() <= 2 && e.support().len() <= 7);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_element(5, 6, 42), random_element(5, 6, 42));
    }
}
