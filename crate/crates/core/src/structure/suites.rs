//! Named verification suites. Every suite is deterministic given its
//! configuration, shards its samples across threads, and merges results
//! in sample order so repeated runs produce identical reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    chain_nilpotency, inverse, is_unit, nilsubring_closure_check, power_nilpotency,
    random_nilpotent, rx_witness, sample_seed, zero_divisor_class, NilpotencyStatus,
    NilpotentParams, PowerVerdict, CHAIN_CAP,
};
use crate::dkring::{enumerate_monomials, kn, MonomialSampler, ReducedMonomial, RingElement};
use crate::error::{Error, Result};
use crate::finring::{self, FiniteRing};
use crate::jacobson::{self, JMonomial};
use crate::report::Report;
use crate::rewrite::{Alphabet, RewriteRule, Strategy, Word};
use crate::solver::{
    annihilator_exponent, cyclic_independence, left_annihilator, mccoy_check, right_annihilator,
    solve_right_inverse, solve_sr_equation, McCoyVerdict, Subspace,
};

/// Registered suite names, in the order `--all` runs them.
pub const SUITES: &[&str] = &[
    "rewrite",
    "order",
    "mainlemma",
    "mainthm",
    "rann",
    "lann",
    "zerodivisors",
    "nr",
    "symm",
    "aa",
    "unitprop",
    "uu",
    "jrad",
    "mccoy",
    "uniform",
    "kn",
    "nilsubring",
    "jacobson",
    "finring",
];

/// Overrides for a suite run; unset fields take each suite's default.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub seed: u64,
    pub maxlen: Option<usize>,
    pub samples: Option<usize>,
    pub bound: Option<usize>,
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    let report = match name {
        "rewrite" => rewrite(cfg),
        "order" => order(cfg),
        "mainlemma" => mainlemma(cfg),
        "mainthm" => mainthm(cfg),
        "rann" => rann(cfg),
        "lann" => lann(cfg),
        "zerodivisors" => zerodivisors(cfg),
        "nr" => nr(cfg),
        "symm" => symm(cfg),
        "aa" => aa(cfg),
        "unitprop" => unitprop(cfg),
        "uu" => uu(cfg),
        "jrad" => jrad(cfg),
        "mccoy" => mccoy(cfg),
        "uniform" => uniform(cfg),
        "kn" => kn_suite(cfg),
        "nilsubring" => nilsubring_closure_check(cfg.samples.unwrap_or(200), cfg.seed),
        "jacobson" => jacobson_suite(cfg),
        "finring" => finring_suite()?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(report)
}

enum Outcome {
    Pass,
    Fail(String),
    Undecided(String),
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// Runs `body` on `samples` independently seeded generators.
fn sampled<F>(report: &mut Report, counter: &str, samples: usize, seed: u64, body: F)
where
    F: Fn(&mut ChaCha8Rng) -> Outcome + Sync,
{
    let outcomes: Vec<(u64, Outcome)> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let s = sample_seed(seed, i);
            (s, body(&mut ChaCha8Rng::seed_from_u64(s)))
        })
        .collect();
    for (s, outcome) in outcomes {
        match outcome {
            Outcome::Pass => report.count(counter, 1),
            Outcome::Fail(d) => report.fail_seed(d, s),
            Outcome::Undecided(d) => report.undecided(d, Some(s)),
        }
    }
}

/// Runs `body` on every item of an exhaustive family.
fn exhaustive<T, F>(report: &mut Report, counter: &str, items: &[T], body: F)
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync,
{
    let outcomes: Vec<Outcome> = items.par_iter().map(&body).collect();
    for outcome in outcomes {
        match outcome {
            Outcome::Pass => report.count(counter, 1),
            Outcome::Fail(d) => report.fail(d),
            Outcome::Undecided(d) => report.undecided(d, None),
        }
    }
}

/// Every element supported on the given monomials, one bitmask each.
fn all_elements(monomials: &[ReducedMonomial]) -> Vec<RingElement> {
    assert!(monomials.len() < 24, "exhaustive family too large");
    (0u32..1 << monomials.len())
        .map(|mask| {
            RingElement::from_monomials(
                (0..monomials.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| monomials[i].clone()),
            )
        })
        .collect()
}

fn nonzero_sample(
    sampler: &MonomialSampler,
    max_support: usize,
    rng: &mut ChaCha8Rng,
) -> RingElement {
    loop {
        let f = sampler.sample(max_support, rng);
        if !f.is_zero() {
            return f;
        }
    }
}

fn rewrite(cfg: &SuiteConfig) -> Report {
    let maxlen = cfg.maxlen.unwrap_or(10);
    let mut report = Report::new("rewrite").param("maxlen", maxlen as u64);
    for rule in [RewriteRule::dk(), RewriteRule::jacobson()] {
        let alphabet = rule.alphabet();
        let words: Vec<Word> = (0..=maxlen)
            .flat_map(|l| alphabet.words_of_length(l))
            .collect();
        exhaustive(&mut report, "words", &words, |w| {
            let left = rule.normalize_with(w, Strategy::Leftmost);
            let right = rule.normalize_with(w, Strategy::Rightmost);
            let stack = rule.normalize(w);
            check(
                left == right && right == stack && rule.is_normal(&stack),
                || format!("{w}: leftmost {left}, rightmost {right}, stack {stack}"),
            )
        });
    }
    report.finish()
}

fn order(cfg: &SuiteConfig) -> Report {
    let maxlen = cfg.maxlen.unwrap_or(8);
    let triple_len = maxlen.min(6);
    let mut report = Report::new("order")
        .param("maxlen", maxlen as u64)
        .param("triple_len", triple_len as u64);
    for (small, large) in [
        ("a^2", "a"),
        ("x", "x^2"),
        ("a^2", "xa^2"),
        ("a", "x"),
        ("xa^3", "x^2a^3"),
    ] {
        let lhs: RingElement = small.parse().expect("example parses");
        let rhs: RingElement = large.parse().expect("example parses");
        let ok = lhs.max_monomial().ok() < rhs.max_monomial().ok();
        if ok {
            report.count("examples", 1);
        } else {
            report.fail(format!("{small} is not below {large}"));
        }
    }
    let pairs = enumerate_monomials(maxlen);
    exhaustive(&mut report, "pairs", &pairs, |m1| {
        for m2 in &pairs {
            let forward = m1.cmp(m2);
            let equal = m1 == m2;
            if forward.reverse() != m2.cmp(m1) || forward.is_eq() != equal {
                return Outcome::Fail(format!("trichotomy fails on {m1}, {m2}"));
            }
        }
        Outcome::Pass
    });
    let triples = enumerate_monomials(triple_len);
    exhaustive(&mut report, "triples", &triples, |m1| {
        for m2 in triples.iter().filter(|m2| m1 < *m2) {
            if let Some(m3) = triples.iter().find(|m3| m2 < *m3 && !(m1 < *m3)) {
                return Outcome::Fail(format!("transitivity fails on {m1}, {m2}, {m3}"));
            }
        }
        Outcome::Pass
    });
    report.finish()
}

fn mainlemma(cfg: &SuiteConfig) -> Report {
    let maxlen = cfg.maxlen.unwrap_or(7);
    let mut report = Report::new("mainlemma").param("maxlen", maxlen as u64);
    let rule = RewriteRule::dk();
    let monomials = enumerate_monomials(maxlen);
    let outcomes: Vec<Vec<String>> = monomials
        .par_iter()
        .map(|m1| {
            let mut bad = Vec::new();
            for m2 in &monomials {
                let word = m1.to_word().concat(&m2.to_word());
                let product = m1.mul(m2);
                let ok = product.to_word() == rule.normalize(&word)
                    && (rule.is_normal(&word) || product < *m2);
                if !ok {
                    bad.push(format!("{m1} * {m2} = {product}"));
                }
            }
            bad
        })
        .collect();
    for bad in outcomes {
        report.count("pairs", monomials.len() as u64 - bad.len() as u64);
        for d in bad {
            report.fail(d);
        }
    }
    report.finish()
}

fn mainthm(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(10);
    let maxlen = cfg.maxlen.unwrap_or(5);
    let samples = cfg.samples.unwrap_or(500);
    let mut report = Report::new("mainthm")
        .param("bound", bound as u64)
        .param("maxlen", maxlen as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    let singles: Vec<ReducedMonomial> = enumerate_monomials(maxlen)
        .into_iter()
        .filter(ReducedMonomial::in_rx)
        .collect();
    exhaustive(&mut report, "monomials", &singles, |m| {
        let f = RingElement::from(m.clone());
        let ann = right_annihilator(&f, bound);
        check(ann.is_zero(), || {
            format!("r({f}) has dimension {}", ann.dim())
        })
    });
    let sampler = MonomialSampler::new(4);
    sampled(&mut report, "samples", samples, cfg.seed, |rng| {
        let f = loop {
            let f = sampler.sample(6, rng);
            if f.has_rx_monomial() {
                break f;
            }
        };
        let ann = right_annihilator(&f, bound);
        check(ann.is_zero(), || {
            format!("r({f}) contains {}", ann.elements()[0])
        })
    });
    report.finish()
}

fn rann(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(10);
    let samples = cfg.samples.unwrap_or(200);
    let mut report = Report::new("rann")
        .param("bound", bound as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    let pool: Vec<ReducedMonomial> = enumerate_monomials(4)
        .into_iter()
        .filter(ReducedMonomial::in_ra)
        .collect();
    sampled(&mut report, "elements", samples, cfg.seed, |rng| {
        let size = rng.random_range(1..=4);
        let f = RingElement::from_monomials(
            (0..size).map(|_| pool[rng.random_range(0..pool.len())].clone()),
        );
        if f.is_zero() {
            return Outcome::Pass;
        }
        let k = annihilator_exponent(&f).expect("nonzero element of Ra");
        let lhs = right_annihilator(&f, bound);
        let rhs = right_annihilator(&RingElement::a_pow(k), bound);
        check(lhs.same_span(&rhs), || {
            format!(
                "r({f}) differs from r(a^{k}): dims {} vs {}",
                lhs.dim(),
                rhs.dim()
            )
        })
    });
    report.finish()
}

fn lann(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(8);
    let samples = cfg.samples.unwrap_or(200);
    let mut report = Report::new("lann")
        .param("bound", bound as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    let sampler = MonomialSampler::new(3);
    sampled(&mut report, "elements", samples, cfg.seed, |rng| {
        // (1 + a^n x^n) g is killed by a^n on the left.
        let (f, ann) = loop {
            let n = rng.random_range(1..=3u32);
            let g = sampler.sample(4, rng);
            let f = &(&RingElement::one()
                + &RingElement::from(
                    ReducedMonomial::from_exponents(vec![0, n, n]).expect("a^n x^n"),
                ))
                * &g;
            if f.is_zero() {
                continue;
            }
            let ann = left_annihilator(&f, bound);
            if !ann.is_zero() {
                break (f, ann);
            }
        };
        let a = RingElement::a();
        let mut power = f.clone();
        let mut n = 0;
        while !power.is_zero() {
            power = &a * &power;
            n += 1;
        }
        let expected: Vec<RingElement> = enumerate_monomials(bound.saturating_sub(n))
            .into_iter()
            .map(|m| &RingElement::from(m) * &RingElement::a_pow(n as u32))
            .collect();
        let expected = Subspace::spanned_by(bound, &expected).expect("fits in bound");
        check(ann.same_span(&expected), || {
            format!(
                "l({f}) is not R a^{n}: dims {} vs {}",
                ann.dim(),
                expected.dim()
            )
        })
    });
    report.finish()
}

fn zerodivisors(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(10);
    let maxlen = cfg.maxlen.unwrap_or(3);
    let mut report = Report::new("zerodivisors")
        .param("bound", bound as u64)
        .param("maxlen", maxlen as u64);
    let elements: Vec<RingElement> = all_elements(&enumerate_monomials(maxlen))
        .into_iter()
        .filter(|f| !f.is_zero())
        .collect();
    exhaustive(&mut report, "elements", &elements, |f| {
        let has_ann = !right_annihilator(f, bound).is_zero();
        let class = zero_divisor_class(f, bound as u32).expect("nonzero");
        if has_ann != f.in_ra() || class.left_zd != f.in_ra() {
            return Outcome::Fail(format!("{f}: annihilated={has_ann} in Ra={}", f.in_ra()));
        }
        if let Some(n) = class.right_zd {
            let killed = (&RingElement::a_pow(n) * f).is_zero();
            let previous = n == 1 || !(&RingElement::a_pow(n - 1) * f).is_zero();
            if !killed || !previous {
                return Outcome::Fail(format!("{f}: wrong right zero-divisor exponent {n}"));
            }
        }
        Outcome::Pass
    });
    report.finish()
}

fn compare_oracles(f: &RingElement, cap: u32) -> Outcome {
    let chain = chain_nilpotency(f, CHAIN_CAP);
    let power = power_nilpotency(f, cap);
    match (chain.status, power) {
        (NilpotencyStatus::Undecided, _) => Outcome::Undecided(format!("chain undecided on {f}")),
        (NilpotencyStatus::Nilpotent, PowerVerdict::NilpotentWithIndex(k)) => check(
            chain.chain_holds(f) && k as usize <= chain.chain.len() + 1,
            || format!("{f}: index {k} with chain length {}", chain.chain.len()),
        ),
        (NilpotencyStatus::NotNilpotent, PowerVerdict::NoPowerVanishes) => Outcome::Pass,
        (status, power) => Outcome::Fail(format!("{f}: chain {status:?}, power {power:?}")),
    }
}

fn nr(cfg: &SuiteConfig) -> Report {
    let maxlen = cfg.maxlen.unwrap_or(3);
    let samples = cfg.samples.unwrap_or(500);
    let cap = 12;
    let mut report = Report::new("nr")
        .param("maxlen", maxlen as u64)
        .param("samples", samples as u64)
        .param("power_cap", cap)
        .param("seed", cfg.seed);
    let elements = all_elements(&enumerate_monomials(maxlen));
    exhaustive(&mut report, "exhaustive", &elements, |f| {
        compare_oracles(f, cap)
    });
    let sampler = MonomialSampler::new(5);
    sampled(&mut report, "sampled", samples, cfg.seed, |rng| {
        compare_oracles(&sampler.sample(6, rng), cap)
    });
    report.finish()
}

fn symm(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(12);
    let samples = cfg.samples.unwrap_or(100);
    let mut report = Report::new("symm")
        .param("bound", bound as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    let a = RingElement::a();
    if &(&a * &a) * &RingElement::x() != a {
        report.fail("a != a^2 x");
    }
    if let Some(g) = solve_sr_equation(&a, bound) {
        report.fail(format!("g a^2 = a solved by g = {g}"));
    }
    match is_unit(&a) {
        Ok(false) => report.witness("a = a^2x, no g with g a^2 = a, a not a unit"),
        Ok(true) => report.fail("a reported as a unit"),
        Err(e) => report.undecided(e.to_string(), None),
    }
    let sampler = MonomialSampler::new(3);
    sampled(&mut report, "elements", samples, cfg.seed, |rng| {
        let f = loop {
            let f = nonzero_sample(&sampler, 4, rng);
            match is_unit(&f) {
                Ok(false) => break f,
                Ok(true) => continue,
                Err(e) => return Outcome::Undecided(e.to_string()),
            }
        };
        match solve_sr_equation(&f, bound.min(10)) {
            None => Outcome::Pass,
            Some(g) => Outcome::Fail(format!("non-unit {f} has g f^2 = f with g = {g}")),
        }
    });
    report.finish()
}

fn without_one(mut f: RingElement) -> RingElement {
    if f.has_one() {
        f.toggle(ReducedMonomial::one());
    }
    f
}

fn aa(cfg: &SuiteConfig) -> Report {
    let maxlen = cfg.maxlen.unwrap_or(4);
    let samples = cfg.samples.unwrap_or(500);
    let mut report = Report::new("aa")
        .param("maxlen", maxlen as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    let sampler = MonomialSampler::new(maxlen);
    sampled(&mut report, "pairs", samples, cfg.seed, |rng| {
        let (f, g) = loop {
            let f = without_one(sampler.sample(5, rng));
            let g = without_one(sampler.sample(5, rng));
            if !f.in_ra() || !g.in_ra() {
                break (f, g);
            }
        };
        let h = &(&f + &g) + &(&f * &g);
        check(!h.in_ra(), || {
            format!("f = {f}, g = {g}: f + g + fg = {h} lies in Ra")
        })
    });
    report.finish()
}

fn generated_nilpotent(rng: &mut ChaCha8Rng) -> Result<RingElement> {
    let params = NilpotentParams {
        chain_len: rng.random_range(1..=3),
        bound: 3,
    };
    random_nilpotent(params, rng.random())
}

fn unitprop(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(12);
    let samples = cfg.samples.unwrap_or(200);
    let mut report = Report::new("unitprop")
        .param("bound", bound as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    // Polynomials in a of degree at most 5 other than 0 and 1.
    let polys: Vec<RingElement> = (2u32..64)
        .map(|mask| {
            RingElement::from_monomials(
                (0..6)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(ReducedMonomial::a_pow),
            )
        })
        .collect();
    exhaustive(&mut report, "a_polynomials", &polys, |f| match is_unit(f) {
        Err(e) => Outcome::Undecided(e.to_string()),
        Ok(unit) => check(!unit && solve_right_inverse(f, bound).is_none(), || {
            format!("{f} in F2[a] is invertible")
        }),
    });
    let sampler = MonomialSampler::new(3);
    sampled(&mut report, "units", samples, cfg.seed, |rng| {
        let n = match generated_nilpotent(rng) {
            Ok(n) => n,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let u = &RingElement::one() + &n;
        let v = match inverse(&u) {
            Ok(Some(v)) => v,
            Ok(None) => return Outcome::Fail(format!("{u} is not a unit")),
            Err(e) => return Outcome::Undecided(e.to_string()),
        };
        if !u.has_one() || !v.has_one() || !(&u * &v).has_one() {
            return Outcome::Fail(format!("{u} * {v} = 1 without 1 in both supports"));
        }
        // 1 + f a unit forces f into Ra.
        let f = sampler.sample(4, rng);
        match is_unit(&(&RingElement::one() + &f)) {
            Err(e) => Outcome::Undecided(e.to_string()),
            Ok(unit) => check(!unit || f.in_ra(), || {
                format!("1 + {f} is a unit but {f} is not in Ra")
            }),
        }
    });
    report.finish()
}

fn uu(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(12);
    let samples = cfg.samples.unwrap_or(300);
    let mut report = Report::new("uu")
        .param("bound", bound as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    sampled(&mut report, "unipotents", samples, cfg.seed, |rng| {
        let n = match generated_nilpotent(rng) {
            Ok(n) => n,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let u = &RingElement::one() + &n;
        let v = match inverse(&u) {
            Ok(Some(v)) => v,
            Ok(None) => return Outcome::Fail(format!("1 + {n} is not a unit")),
            Err(e) => return Outcome::Undecided(e.to_string()),
        };
        let one = RingElement::one();
        if &u * &v != one || &v * &u != one {
            return Outcome::Fail(format!("geometric inverse of {u} is wrong"));
        }
        match solve_right_inverse(&u, bound) {
            Some(w) => check(&u * &w == one, || {
                format!("solver returned a bad inverse of {u}")
            }),
            None => Outcome::Fail(format!("no right inverse of {u} at bound {bound}")),
        }
    });
    let sampler = MonomialSampler::new(3);
    sampled(
        &mut report,
        "non_units",
        samples,
        cfg.seed ^ 0x5555,
        |rng| {
            let f = loop {
                let f = sampler.sample(5, rng);
                let n = &f + &RingElement::one();
                match chain_nilpotency(&n, CHAIN_CAP).status {
                    NilpotencyStatus::NotNilpotent => break f,
                    NilpotencyStatus::Nilpotent => continue,
                    NilpotencyStatus::Undecided => {
                        return Outcome::Undecided(format!("chain undecided on {n}"))
                    }
                }
            };
            match solve_right_inverse(&f, bound) {
                None => Outcome::Pass,
                Some(g) => Outcome::Fail(format!(
                    "{f} g = 1 with g = {g}, yet {f} + 1 is not nilpotent"
                )),
            }
        },
    );
    report.finish()
}

fn jrad(cfg: &SuiteConfig) -> Report {
    let samples = cfg.samples.unwrap_or(200);
    let cap = 8;
    let mut report = Report::new("jrad")
        .param("samples", samples as u64)
        .param("cap", cap)
        .param("seed", cfg.seed);
    let sampler = MonomialSampler::new(4);
    sampled(&mut report, "elements", samples, cfg.seed, |rng| {
        let f = nonzero_sample(&sampler, 5, rng);
        let Some(k) = rx_witness(&f, cap).expect("nonzero") else {
            return Outcome::Fail(format!("no k <= {cap} with {f} x^k in Rx"));
        };
        let g = &f * &RingElement::x_pow(k);
        match is_unit(&(&RingElement::one() + &g)) {
            Ok(unit) => check(!unit, || format!("1 + {g} is a unit")),
            Err(e) => Outcome::Undecided(e.to_string()),
        }
    });
    report.finish()
}

fn mccoy(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(8);
    let samples = cfg.samples.unwrap_or(200);
    let mut report = Report::new("mccoy")
        .param("bound", bound as u64)
        .param("samples", samples as u64)
        .param("seed", cfg.seed);
    let sampler = MonomialSampler::new(3);
    let outcomes: Vec<(u64, std::result::Result<[bool; 2], String>)> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let s = sample_seed(cfg.seed, i);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let f = sampler.sample(4, &mut rng);
            let g = sampler.sample(4, &mut rng);
            let r = mccoy_check(&f, &g, bound);
            if !r.holds() {
                return (
                    s,
                    Err(format!(
                        "f = {f}, g = {g}: right {}, left {}",
                        r.right, r.left
                    )),
                );
            }
            if f.in_ra() && g.in_ra() && !matches!(r.right, McCoyVerdict::PremiseFalse { .. }) {
                return (
                    s,
                    Err(format!(
                        "f = {f}, g = {g} lie in Ra yet r(f) and r(g) meet trivially"
                    )),
                );
            }
            let premise = |v: &McCoyVerdict| matches!(v, McCoyVerdict::PremiseFalse { .. });
            (s, Ok([premise(&r.right), premise(&r.left)]))
        })
        .collect();
    for (s, outcome) in outcomes {
        match outcome {
            Ok([right, left]) => {
                report.count("pairs", 1);
                report.count("right_premise_false", right as u64);
                report.count("left_premise_false", left as u64);
            }
            Err(d) => report.fail_seed(d, s),
        }
    }
    // Pairs inside Ra share 1 + ax in their right annihilators.
    let one_ax: RingElement = "1 + ax".parse().expect("literal");
    for (f, g) in [("a", "xa^2"), ("a + xa", "a^2"), ("axa", "x^2a^3")] {
        let (f, g): (RingElement, RingElement) =
            (f.parse().expect("literal"), g.parse().expect("literal"));
        match mccoy_check(&f, &g, bound).right {
            McCoyVerdict::PremiseFalse { .. } if right_annihilator(&f, bound).contains(&one_ax) => {
                report.count("premise_cases", 1)
            }
            other => report.fail(format!(
                "f = {f}, g = {g}: expected premise failure, got {other}"
            )),
        }
    }
    report.finish()
}

fn uniform(cfg: &SuiteConfig) -> Report {
    let bound = cfg.bound.unwrap_or(8);
    let depth = 5;
    let mut report = Report::new("uniform")
        .param("bound", bound as u64)
        .param("depth", depth);
    let s: RingElement = "1 + ax".parse().expect("literal");
    let t = RingElement::a();
    let r = cyclic_independence(&s, &t, depth, bound);
    report.count("modules", r.ranks.len() as u64);
    report.count("dependencies", r.dependency_dim as u64);
    if !r.independent() {
        report.fail(format!(
            "ranks {:?}, dependency dimension {}",
            r.ranks, r.dependency_dim
        ));
    }
    report.finish()
}

fn kn_suite(cfg: &SuiteConfig) -> Report {
    let nmax = cfg.maxlen.unwrap_or(6) as u32;
    let mut report = Report::new("kn").param("nmax", nmax);
    for n in 1..=nmax {
        let k = kn(n);
        let mut checks = vec![
            (k.pow(n + 1).is_zero(), format!("k_{n}^{} != 0", n + 1)),
            (!k.pow(n).is_zero(), format!("k_{n}^{n} = 0")),
            (
                (&RingElement::a_pow(n) * &k).is_zero(),
                format!("a^{n} k_{n} != 0"),
            ),
            (
                !(&RingElement::a_pow(n) * &kn(n + 1)).is_zero(),
                format!("a^{n} k_{} = 0", n + 1),
            ),
        ];
        let step = &RingElement::one()
            + &RingElement::from(ReducedMonomial::from_exponents(vec![n, n]).expect("x^n a^n"));
        checks.push((
            &kn(n + 1) * &step == k,
            format!("k_{n} != k_{} (1 + x^{n}a^{n})", n + 1),
        ));
        for m in 1..=n {
            let closed = &RingElement::a_pow(m)
                + &RingElement::from(
                    ReducedMonomial::from_exponents(vec![n, n - m + 1, 0]).expect("a x^j a^n"),
                );
            let lhs = k.pow(m);
            checks.push((
                lhs == &RingElement::a_pow(m - 1) * &k && lhs == closed,
                format!("k_{n}^{m} != a^{} k_{n}", m - 1),
            ));
        }
        for (ok, detail) in checks {
            if ok {
                report.count("identities", 1);
            } else {
                report.fail(detail);
            }
        }
    }
    report.finish()
}

fn finring_suite() -> Result<Report> {
    let mut report = Report::new("finring");
    let results: Vec<Result<Report>> = finring::catalog()
        .par_iter()
        .map(|spec| finring::verify_equivalences(&FiniteRing::build(spec)?))
        .collect();
    for r in results {
        report.absorb(r?);
        report.count("rings", 1);
    }
    report.absorb(finring::e11_example()?);
    Ok(report.finish())
}

fn jacobson_suite(cfg: &SuiteConfig) -> Report {
    let nmax = cfg.maxlen.unwrap_or(8) as u32;
    let mut report = Report::new("jacobson").param("nmax", nmax);
    report.absorb(jacobson::verify_dn_suite(nmax));
    report.absorb(jacobson::verify_matrix_units(4));
    let rule = RewriteRule::jacobson();
    let words: Vec<Word> = (0..=8)
        .flat_map(|l| Alphabet::BC.words_of_length(l))
        .collect();
    exhaustive(&mut report, "word_pairs", &words, |u| {
        let mu = JMonomial::from_word(&rule.normalize(u)).expect("normal form");
        for v in &words {
            let mv = JMonomial::from_word(&rule.normalize(v)).expect("normal form");
            let expected = rule.normalize(&u.concat(v));
            if mu.mul(mv).to_word() != expected {
                return Outcome::Fail(format!("{u} * {v}: {} vs {expected}", mu.mul(mv)));
            }
        }
        Outcome::Pass
    });
    report.finish()
}
