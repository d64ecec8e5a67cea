use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{chain_nilpotency, sample_seed, CHAIN_CAP};
use crate::dkring::{kn, ReducedMonomial, RingElement};
use crate::error::{Error, Result};
use crate::gf2la::{self, BitMatrix, BitVec};
use crate::report::Report;
use crate::solver::domain;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NilpotentParams {
    /// Number of chain elements `r_1, ..., r_k`.
    pub chain_len: usize,
    /// Length bound on each `r_i`.
    pub bound: usize,
}

impl Default for NilpotentParams {
    fn default() -> Self {
        NilpotentParams {
            chain_len: 2,
            bound: 3,
        }
    }
}

/// Kernel of the block system `a r_i + r_{i+1} a = 0` (i < k), `a r_k = 0`
/// over `r_1, ..., r_k` of bounded length.
fn chain_kernel(params: NilpotentParams) -> Arc<Vec<BitVec>> {
    static CACHE: OnceLock<Mutex<HashMap<NilpotentParams, Arc<Vec<BitVec>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(k) = cache.lock().expect("kernel cache poisoned").get(&params) {
        return Arc::clone(k);
    }
    let dom = domain(params.bound);
    let n = dom.len();
    let k = params.chain_len;
    let a = RingElement::a();
    let mut rows: HashMap<(usize, ReducedMonomial), usize> = HashMap::new();
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(k * n);
    for i in 0..k {
        for m in dom.monomials() {
            let m = RingElement::from(m.clone());
            let mut hits = Vec::new();
            let mut touch = |eq: usize, e: RingElement| {
                for mono in e.monomials() {
                    let next = rows.len();
                    hits.push(*rows.entry((eq, mono.clone())).or_insert(next));
                }
            };
            touch(i, &a * &m);
            if i > 0 {
                touch(i - 1, &m * &a);
            }
            columns.push(hits);
        }
    }
    let height = rows.len();
    let cols = columns
        .into_iter()
        .map(|hits| BitVec::from_indices(height, hits))
        .collect();
    let matrix = BitMatrix::from_columns(height, cols).expect("consistent heights");
    let kernel = Arc::new(gf2la::kernel(&matrix));
    cache
        .lock()
        .expect("kernel cache poisoned")
        .entry(params)
        .or_insert(kernel)
        .clone()
}

/// A random nilpotent `r_1 a` whose shifting chain has at most
/// `params.chain_len` bounded-length elements.
pub fn random_nilpotent(params: NilpotentParams, seed: u64) -> Result<RingElement> {
    if params.chain_len == 0 {
        return Ok(RingElement::zero());
    }
    let kernel = chain_kernel(params);
    let dom = domain(params.bound);
    let n = dom.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let mut v = BitVec::zeros(n * params.chain_len);
        for basis in kernel.iter() {
            if rng.random::<bool>() {
                v.xor_assign(basis);
            }
        }
        let r1 = dom.to_element(&v.slice(0, n));
        if !r1.is_zero() {
            return Ok(&r1 * &RingElement::a());
        }
    }
    Err(Error::SamplerExhausted(64))
}

fn curated() -> Vec<RingElement> {
    let mut out: Vec<RingElement> = (1..=4).map(kn).collect();
    for s in ["a + xa^2", "a^2 + xa^3", "axa + xa^2"] {
        out.push(s.parse().expect("curated nilpotent"));
    }
    out.push(RingElement::zero());
    out
}

fn draw(rng: &mut ChaCha8Rng, pool: &[RingElement]) -> Result<RingElement> {
    if rng.random::<bool>() {
        return Ok(pool[rng.random_range(0..pool.len())].clone());
    }
    let params = NilpotentParams {
        chain_len: rng.random_range(1..=3),
        bound: 3,
    };
    random_nilpotent(params, rng.random())
}

/// Sums and products of sampled nilpotents stay nilpotent, and so does
/// `a^2 + x^n a^{n+2}`.
pub fn nilsubring_closure_check(samples: usize, seed: u64) -> Report {
    let mut report = Report::new("nilsubring")
        .param("samples", samples as u64)
        .param("seed", seed);
    let pool = curated();
    for f in &pool {
        if !chain_nilpotency(f, CHAIN_CAP).is_nilpotent() {
            report.fail(format!("curated element {f} is not nilpotent"));
        }
    }
    for n in 1..=5u32 {
        let tail = ReducedMonomial::from_exponents(vec![n + 2, n]).expect("valid exponents");
        let f = &RingElement::a_pow(2) + &RingElement::from(tail);
        let v = chain_nilpotency(&f, CHAIN_CAP);
        if !v.is_nilpotent() || !v.chain_holds(&f) {
            report.fail(format!("a^2 + x^{n}a^{} is not nilpotent", n + 2));
        }
    }
    let outcomes: Vec<_> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let s = sample_seed(seed, i);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let pair = draw(&mut rng, &pool).and_then(|r| Ok((r, draw(&mut rng, &pool)?)));
            let (r, t) = match pair {
                Ok(p) => p,
                Err(e) => return (s, Some(e.to_string())),
            };
            for (what, g) in [("sum", &r + &t), ("product", &r * &t)] {
                let v = chain_nilpotency(&g, CHAIN_CAP);
                if !v.is_nilpotent() || !v.chain_holds(&g) {
                    return (s, Some(format!("{what} of {r} and {t} is not nilpotent")));
                }
            }
            (s, None)
        })
        .collect();
    for (s, failure) in outcomes {
        match failure {
            Some(detail) => report.fail_seed(detail, s),
            None => report.count("pairs", 1),
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::power_nilpotency;

    #[test]
    fn chain_length_one_is_right_annihilator_of_a() {
        let p = NilpotentParams {
            chain_len: 1,
            bound: 2,
        };
        let f = random_nilpotent(p, 3).unwrap();
        assert!(chain_nilpotency(&f, CHAIN_CAP).is_nilpotent());
        let one_ax: RingElement = "1 + ax".parse().unwrap();
        assert_eq!(&one_ax * &RingElement::a(), kn(1));
        let zero = NilpotentParams {
            chain_len: 0,
            bound: 3,
        };
        assert!(random_nilpotent(zero, 1).unwrap().is_zero());
    }

    #[test]
    fn generated_elements_are_nilpotent() {
        for seed in 0..40 {
            let p = NilpotentParams {
                chain_len: 1 + (seed as usize % 3),
                bound: 3,
            };
            let f = random_nilpotent(p, seed).unwrap();
            let v = chain_nilpotency(&f, CHAIN_CAP);
            assert!(v.is_nilpotent() && v.chain_holds(&f), "{f}");
            assert!(matches!(
                power_nilpotency(&f, 16),
                crate::structure::PowerVerdict::NilpotentWithIndex(_)
            ));
        }
    }

    #[test]
    fn closure_small() {
        let r = nilsubring_closure_check(30, 9);
        assert!(r.passed(), "{}", r.to_text());
    }
}
