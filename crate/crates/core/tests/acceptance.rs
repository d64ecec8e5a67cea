//! Acceptance checks, one printed line per criterion.
//!
//! Derived values are recomputed here with a separate string-rewriting
//! model of the rings (sets of words, rewritten until no redex remains) and
//! a direct implementation of the monomial order on words, so the library
//! is checked against code it does not share.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pireg::dkring::{
    enumerate_monomials, kn, random_element, MonomialSampler, ReducedMonomial, RingElement,
};
use pireg::finring::{self, FiniteRing};
use pireg::jacobson;
use pireg::rewrite::{RewriteRule, Strategy};
use pireg::solver::{self, McCoyVerdict, Subspace};
use pireg::structure::{
    self, sample_seed, NilpotencyStatus, NilpotencyWitness, NilpotentParams, PowerVerdict, CHAIN_CAP,
};

const SEED: u64 = 0x0acc_e97a;

// ---------------------------------------------------------------- oracle

/// Elements of F2<letters>/(pattern = replacement) as sets of reduced words.
#[derive(Clone, Copy)]
struct Model {
    pattern: &'static str,
    replacement: &'static str,
}

const DK: Model = Model {
    pattern: "aax",
    replacement: "a",
};
const JAC: Model = Model {
    pattern: "bc",
    replacement: "",
};

type Elt = BTreeSet<String>;

impl Model {
    fn reduce_left(&self, w: &str) -> String {
        let mut w = w.to_string();
        while let Some(i) = w.find(self.pattern) {
            w.replace_range(i..i + self.pattern.len(), self.replacement);
        }
        w
    }

    fn reduce_right(&self, w: &str) -> String {
        let mut w = w.to_string();
        while let Some(i) = w.rfind(self.pattern) {
            w.replace_range(i..i + self.pattern.len(), self.replacement);
        }
        w
    }

    fn elt<'a>(&self, words: impl IntoIterator<Item = &'a str>) -> Elt {
        let mut out = Elt::new();
        for w in words {
            toggle(&mut out, self.reduce_left(w));
        }
        out
    }

    fn mul(&self, f: &Elt, g: &Elt) -> Elt {
        let mut out = Elt::new();
        for u in f {
            for v in g {
                toggle(&mut out, self.reduce_left(&format!("{u}{v}")));
            }
        }
        out
    }

    fn pow(&self, f: &Elt, k: u32) -> Elt {
        (0..k).fold(self.elt([""]), |acc, _| self.mul(&acc, f))
    }
}

fn toggle(e: &mut Elt, w: String) {
    if !e.remove(&w) {
        e.insert(w);
    }
}

fn add(f: &Elt, g: &Elt) -> Elt {
    f.symmetric_difference(g).cloned().collect()
}

fn word(m: &ReducedMonomial) -> String {
    match m.to_word().to_string().as_str() {
        "1" => String::new(),
        w => w.to_string(),
    }
}

fn model(f: &RingElement) -> Elt {
    f.monomials().map(word).collect()
}

fn power_word(letter: char, k: u32) -> String {
    std::iter::repeat_n(letter, k as usize).collect()
}

fn ends_in_a(e: &Elt) -> bool {
    e.iter().all(|w| w.ends_with('a'))
}

/// `(i_0, i_1, ..., i_n)` of a reduced word `x^{i_n} a ... a x^{i_1} a^{i_0}`.
fn exponents(w: &str) -> Vec<usize> {
    let head = w.trim_end_matches('a');
    let mut out = vec![w.len() - head.len()];
    out.extend(head.split('a').rev().map(str::len));
    out
}

/// The monomial order, straight from its definition on exponent vectors.
fn precedes(u: &str, v: &str) -> bool {
    let (p, q) = (exponents(u), exponents(v));
    let d = p.len().min(q.len()) - 1;
    if p[0] != q[0] {
        return p[0] > q[0];
    }
    for k in 1..=d {
        if p[k] != q[k] {
            return p[k] < q[k];
        }
    }
    p.len() < q.len()
}

/// All words over `letters` of length at most `max`.
fn words(letters: [char; 2], max: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn reduced_words(max: usize) -> Vec<String> {
    words(['a', 'x'], max)
        .into_iter()
        .filter(|w| !w.contains("aax"))
        .collect()
}

fn sample(max_len: usize, max_support: usize, i: u64) -> RingElement {
    random_element(max_len, max_support, sample_seed(SEED, i))
}

// --------------------------------------------------------------- harness

type Outcome = Result<String, String>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn within(start: Instant, limit_secs: u64) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= Duration::from_secs(limit_secs), || {
        format!("took {:.1}s, limit {limit_secs}s", t.as_secs_f64())
    })?;
    Ok(t)
}

// ------------------------------------------------------------ criteria

fn rewriting() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for (rule, m) in [(RewriteRule::dk(), DK), (RewriteRule::jacobson(), JAC)] {
        let alphabet = rule.alphabet();
        for len in 0..=10 {
            for w in alphabet.words_of_length(len) {
                let left = rule.normalize_with(&w, Strategy::Leftmost);
                let right = rule.normalize_with(&w, Strategy::Rightmost);
                let text = w.to_string();
                let text = if text == "1" { String::new() } else { text };
                let expected = m.reduce_left(&text);
                ensure(left == right, || {
                    format!("{w}: leftmost {left} vs rightmost {right}")
                })?;
                ensure(m.reduce_right(&text) == expected, || {
                    format!("{w}: oracle strategies differ")
                })?;
                let got = left.to_string();
                ensure(
                    got == expected || (got == "1" && expected.is_empty()),
                    || format!("{w}: library {got} vs oracle {expected}"),
                )?;
                n += 1;
            }
        }
    }
    ensure(n == 2 * 2047, || format!("expected 4094 words, saw {n}"))?;
    let t = within(start, 30)?;
    Ok(format!("{n} words, {:.2}s", t.as_secs_f64()))
}

fn order_laws() -> Outcome {
    let start = Instant::now();
    let monos = enumerate_monomials(8);
    ensure(monos.len() == reduced_words(8).len(), || {
        "monomial count differs from word count".into()
    })?;
    let ws: Vec<String> = monos.iter().map(word).collect();
    for (i, m) in monos.iter().enumerate() {
        for (j, n) in monos.iter().enumerate() {
            let lib = m.cmp(n);
            let expected = if i == j {
                std::cmp::Ordering::Equal
            } else if precedes(&ws[i], &ws[j]) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            };
            ensure(lib == expected, || {
                format!("cmp({m}, {n}) = {lib:?}, oracle {expected:?}")
            })?;
            let trich = [precedes(&ws[i], &ws[j]), i == j, precedes(&ws[j], &ws[i])];
            ensure(trich.iter().filter(|&&b| b).count() == 1, || {
                format!("trichotomy fails on {m}, {n}")
            })?;
        }
    }
    let small: Vec<&ReducedMonomial> = monos.iter().filter(|m| m.len() <= 6).collect();
    let mut triples = 0u64;
    for p in &small {
        for q in small.iter().filter(|q| p < q) {
            for r in small.iter().filter(|r| q < r) {
                ensure(p < r, || format!("transitivity fails on {p}, {q}, {r}"))?;
                triples += 1;
            }
        }
    }
    for (lo, hi) in [
        ("a^2", "a"),
        ("x", "x^2"),
        ("a^2", "xa^2"),
        ("a", "x"),
        ("xa^3", "x^2a^3"),
    ] {
        let (l, h): (RingElement, RingElement) = (lo.parse().unwrap(), hi.parse().unwrap());
        let (l, h) = (
            l.max_monomial().unwrap().clone(),
            h.max_monomial().unwrap().clone(),
        );
        ensure(l < h, || format!("{lo} should precede {hi}"))?;
        ensure(precedes(&word(&l), &word(&h)), || {
            format!("oracle disagrees on {lo} < {hi}")
        })?;
    }
    let t = within(start, 60)?;
    Ok(format!(
        "{} monomials, {triples} chained triples, 5 examples, {:.2}s",
        monos.len(),
        t.as_secs_f64()
    ))
}

fn main_lemma() -> Outcome {
    let start = Instant::now();
    let monos = enumerate_monomials(7);
    let mut pairs = 0u64;
    for m1 in &monos {
        for m2 in &monos {
            let (w1, w2) = (word(m1), word(m2));
            let cat = format!("{w1}{w2}");
            let reduced = DK.reduce_left(&cat);
            ensure(word(&m1.mul(m2)) == reduced, || {
                format!("{m1} * {m2} disagrees with rewriting")
            })?;
            ensure(!cat.contains("aax") || precedes(&reduced, &w2), || {
                format!("{m1} * {m2} = {reduced} is neither reduced nor below {m2}")
            })?;
            pairs += 1;
        }
    }
    ensure(pairs == 17689, || {
        format!("expected 17689 pairs, saw {pairs}")
    })?;
    let t = within(start, 60)?;
    Ok(format!("{pairs} pairs, {:.2}s", t.as_secs_f64()))
}

fn check_right_kernel(f: &RingElement, space: &Subspace) -> Result<(), String> {
    let mf = model(f);
    for r in space.elements() {
        ensure(DK.mul(&mf, &model(&r)).is_empty(), || {
            format!("{f} * {r} != 0")
        })?;
    }
    Ok(())
}

fn right_annihilator_of_rx() -> Outcome {
    let start = Instant::now();
    let mut singles = 0;
    for m in enumerate_monomials(5).into_iter().filter(|m| m.in_rx()) {
        let f = RingElement::from(m);
        ensure(solver::right_annihilator(&f, 10).is_zero(), || {
            format!("r({f}) is nonzero")
        })?;
        singles += 1;
    }
    let mut sampled = 0;
    let mut i = 0;
    while sampled < 500 {
        let f = sample(4, 6, i);
        i += 1;
        if !model(&f).iter().any(|w| w.ends_with('x')) {
            continue;
        }
        ensure(solver::right_annihilator(&f, 10).is_zero(), || {
            format!("r({f}) is nonzero")
        })?;
        sampled += 1;
    }
    let t = within(start, 120)?;
    Ok(format!(
        "{singles} monomials, {sampled} samples, {:.2}s",
        t.as_secs_f64()
    ))
}

fn right_annihilator_of_ra() -> Outcome {
    let mut n = 0;
    let mut i = 0;
    while n < 200 {
        let g = sample(4, 5, 1000 + i);
        i += 1;
        let f = &g * &RingElement::a();
        if f.is_zero() {
            continue;
        }
        ensure(ends_in_a(&model(&f)), || format!("{f} should lie in Ra"))?;
        let k = solver::annihilator_exponent(&f).map_err(|e| e.to_string())?;
        let ak = RingElement::a_pow(k);
        let rf = solver::right_annihilator(&f, 10);
        let rak = solver::right_annihilator(&ak, 10);
        ensure(rf.same_span(&rak), || format!("r({f}) != r(a^{k})"))?;
        ensure(!rf.is_zero(), || format!("r({f}) is zero"))?;
        check_right_kernel(&f, &rf)?;
        n += 1;
    }
    Ok(format!("{n} elements of Ra"))
}

fn left_annihilator_is_ra_n() -> Outcome {
    const BOUND: usize = 8;
    let candidates: Vec<String> = reduced_words(BOUND);
    let mut n_checked = 0;
    let mut i = 0;
    while n_checked < 200 {
        let g = sample(3, 4, 2000 + i);
        let n = 1 + (i % 3) as u32;
        i += 1;
        let twist: RingElement = format!("1 + a^{n}x^{n}").parse().unwrap();
        let f = &twist * &g;
        if f.is_zero() {
            continue;
        }
        let mf = model(&f);
        let minimal = (1..=BOUND as u32)
            .find(|&k| {
                DK.mul(&DK.elt([power_word('a', k).as_str()]), &mf)
                    .is_empty()
            })
            .ok_or_else(|| format!("no a^k kills {f}"))?;
        let tail = power_word('a', minimal);
        let expected: Vec<RingElement> = candidates
            .iter()
            .filter(|w| w.ends_with(&tail))
            .map(|w| w.parse().unwrap())
            .collect();
        let expected =
            Subspace::spanned_by(BOUND, &expected).ok_or("expected span exceeds bound")?;
        let lf = solver::left_annihilator(&f, BOUND);
        ensure(!lf.is_zero(), || format!("l({f}) is zero"))?;
        ensure(lf.same_span(&expected), || {
            format!(
                "l({f}) has dim {} but R a^{minimal} truncates to {}",
                lf.dim(),
                expected.dim()
            )
        })?;
        for h in lf.elements() {
            ensure(DK.mul(&model(&h), &mf).is_empty(), || {
                format!("{h} * {f} != 0")
            })?;
        }
        n_checked += 1;
    }
    Ok(format!("{n_checked} elements, bound {BOUND}"))
}

/// The forced chain `f = r_1 a`, `a r_i = r_{i+1} a`, recomputed on words.
fn oracle_chain(f: &Elt) -> (NilpotencyStatus, Option<NilpotencyWitness>, usize) {
    let strip = |e: &Elt| -> Option<Elt> {
        ends_in_a(e).then(|| e.iter().map(|w| w[..w.len() - 1].to_string()).collect())
    };
    if f.is_empty() {
        return (NilpotencyStatus::Nilpotent, None, 0);
    }
    let Some(first) = strip(f) else {
        return (NilpotencyStatus::NotNilpotent, Some(NilpotencyWitness::NotInRa), 0);
    };
    let a = DK.elt(["a"]);
    let mut chain = vec![first];
    loop {
        let g = DK.mul(&a, chain.last().unwrap());
        if g.is_empty() {
            return (NilpotencyStatus::Nilpotent, None, chain.len());
        }
        let Some(next) = strip(&g) else {
            let step = chain.len();
            return (
                NilpotencyStatus::NotNilpotent,
                Some(NilpotencyWitness::ChainLeavesRa { step }),
                0,
            );
        };
        if let Some(j) = chain.iter().position(|r| *r == next) {
            let witness = NilpotencyWitness::CycleDetected {
                first: j + 1,
                repeat: chain.len() + 1,
            };
            return (NilpotencyStatus::NotNilpotent, Some(witness), 0);
        }
        if chain.len() >= CHAIN_CAP {
            return (NilpotencyStatus::Undecided, None, 0);
        }
        chain.push(next);
    }
}

fn oracles_agree(f: &RingElement) -> Result<(), String> {
    let v = structure::chain_nilpotency(f, CHAIN_CAP);
    let mf = model(f);
    let (status, witness, len) = oracle_chain(&mf);
    ensure(
        v.status == status && v.witness == witness && v.chain.len() == len,
        || format!("{f}: library chain {:?} {:?}, oracle {status:?} {witness:?}", v.status, v.witness),
    )?;
    let p = structure::power_nilpotency(f, 12);
    match (v.status, p) {
        (NilpotencyStatus::Undecided, _) => Err(format!("{f}: undecided")),
        (NilpotencyStatus::Nilpotent, PowerVerdict::NilpotentWithIndex(k)) => {
            ensure(v.chain_holds(f), || format!("{f}: chain identities fail"))?;
            ensure(k as usize <= len + 1, || format!("{f}: index {k} exceeds chain + 1"))?;
            ensure(
                DK.pow(&mf, k).is_empty() && (k == 1 || !DK.pow(&mf, k - 1).is_empty()),
                || format!("{f}: index {k} is wrong"),
            )
        }
        (NilpotencyStatus::NotNilpotent, PowerVerdict::NoPowerVanishes) => {
            ensure(!DK.mul(&mf, &mf).is_empty(), || format!("{f}: square vanishes"))
        }
        (s, p) => Err(format!("{f}: chain {s:?} vs power {p:?}")),
    }
}

fn nilpotency_agreement() -> Outcome {
    let pool = enumerate_monomials(3);
    ensure(pool.len() == 14, || {
        format!("{} monomials of length <= 3", pool.len())
    })?;
    let mut nil = 0;
    for mask in 0u32..1 << 14 {
        let f = RingElement::from_monomials(
            pool.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| m.clone()),
        );
        oracles_agree(&f)?;
        nil += structure::chain_nilpotency(&f, CHAIN_CAP).is_nilpotent() as u32;
    }
    for i in 0..500 {
        oracles_agree(&sample(5, 6, 3000 + i))?;
    }
    Ok(format!(
        "16384 exhaustive ({nil} nilpotent) + 500 sampled, 0 undecided"
    ))
}

fn unipotent_units() -> Outcome {
    let one = DK.elt([""]);
    for i in 0..300u64 {
        let params = NilpotentParams {
            chain_len: 1 + (i % 3) as usize,
            bound: 3,
        };
        let n = structure::random_nilpotent(params, sample_seed(SEED, 4000 + i))
            .map_err(|e| e.to_string())?;
        let u = &n + &RingElement::one();
        let v = structure::inverse(&u)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("1 + {n} has no inverse"))?;
        let (mu, mv) = (model(&u), model(&v));
        ensure(DK.mul(&mu, &mv) == one && DK.mul(&mv, &mu) == one, || {
            format!("{v} does not invert {u}")
        })?;
        let w = solver::solve_right_inverse(&u, 12)
            .ok_or_else(|| format!("no bounded right inverse of {u}"))?;
        ensure(DK.mul(&mu, &model(&w)) == one, || {
            format!("{w} is not a right inverse of {u}")
        })?;
    }
    let mut non_units = 0;
    let mut i = 0;
    while non_units < 300 {
        let f = sample(4, 5, 5000 + i);
        i += 1;
        let g = &f + &RingElement::one();
        if structure::chain_nilpotency(&g, CHAIN_CAP).status != NilpotencyStatus::NotNilpotent {
            continue;
        }
        ensure(solver::solve_right_inverse(&f, 12).is_none(), || {
            format!("{f} has a right inverse")
        })?;
        non_units += 1;
    }
    Ok(format!("300 unipotents, {non_units} non-units"))
}

fn non_dischinger_witness() -> Outcome {
    let a = DK.elt(["a"]);
    ensure(DK.mul(&DK.mul(&a, &a), &DK.elt(["x"])) == a, || {
        "a^2 x != a".into()
    })?;
    let ra = RingElement::a();
    ensure(solver::solve_sr_equation(&ra, 12).is_none(), || {
        "a = y a^2 has a solution".into()
    })?;
    ensure(!structure::is_unit(&ra).map_err(|e| e.to_string())?, || {
        "a is a unit".into()
    })?;
    let mut n = 0;
    let mut i = 0;
    while n < 100 {
        let f = sample(4, 5, 6000 + i);
        i += 1;
        if f.is_zero() || structure::is_unit(&f).map_err(|e| e.to_string())? {
            continue;
        }
        ensure(solver::solve_sr_equation(&f, 10).is_none(), || {
            format!("{f} = y {f}^2 solvable")
        })?;
        n += 1;
    }
    Ok(format!("a = a^2 x, no y at bound 12, {n} non-units"))
}

fn kn_identities() -> Outcome {
    let k = |n: u32| {
        DK.elt([
            "a",
            format!("a{}{}", power_word('x', n), power_word('a', n)).as_str(),
        ])
    };
    let mut checks = 0;
    for n in 1..=6u32 {
        let kn_m = k(n);
        ensure(model(&kn(n)) == kn_m, || format!("library k_{n} differs"))?;
        ensure(DK.pow(&kn_m, n + 1).is_empty(), || {
            format!("k_{n}^{} != 0", n + 1)
        })?;
        ensure(!DK.pow(&kn_m, n).is_empty(), || format!("k_{n}^{n} = 0"))?;
        for m in 1..=n {
            let lhs = DK.pow(&kn_m, m);
            let shifted = DK.mul(&DK.elt([power_word('a', m - 1).as_str()]), &kn_m);
            let closed = DK.elt([
                power_word('a', m).as_str(),
                format!("a{}{}", power_word('x', n - m + 1), power_word('a', n)).as_str(),
            ]);
            ensure(lhs == shifted && lhs == closed, || {
                format!("k_{n}^{m} identity fails")
            })?;
            ensure(model(&kn(n).pow(m)) == lhs, || {
                format!("library k_{n}^{m} differs")
            })?;
            checks += 1;
        }
        let factor = DK.elt([
            "",
            format!("{}{}", power_word('x', n), power_word('a', n)).as_str(),
        ]);
        ensure(DK.mul(&k(n + 1), &factor) == kn_m, || {
            format!("k_{n} != k_{} (1 + x^{n} a^{n})", n + 1)
        })?;
        checks += 3;
    }
    Ok(format!("{checks} identities for n <= 6"))
}

fn jacobson_suite() -> Outcome {
    let start = Instant::now();
    let dn = jacobson::verify_dn_suite(8);
    ensure(dn.passed(), || dn.to_text())?;
    let mu = jacobson::verify_matrix_units(4);
    ensure(mu.passed(), || mu.to_text())?;
    let jw = |e: &jacobson::JElement| -> Elt {
        let text = e.to_string();
        let terms: Vec<String> = match text.as_str() {
            "0" => Vec::new(),
            t => t.split(" + ").map(expand).collect(),
        };
        JAC.elt(terms.iter().map(String::as_str))
    };
    for n in 1..=8u32 {
        let d = JAC.elt([
            "b",
            format!("{}{}", power_word('c', n), power_word('b', n + 1)).as_str(),
        ]);
        ensure(jw(&jacobson::d_element(n)) == d, || {
            format!("library d_{n} differs")
        })?;
        ensure(JAC.pow(&d, n + 1).is_empty(), || {
            format!("d_{n}^{} != 0", n + 1)
        })?;
        ensure(!JAC.pow(&d, n).is_empty(), || format!("d_{n}^{n} = 0"))?;
    }
    let unit = |i: u32, j: u32| {
        let ci = power_word('c', i);
        let bj = power_word('b', j);
        JAC.elt([format!("{ci}{bj}").as_str(), format!("{ci}cb{bj}").as_str()])
    };
    let mut products = 0;
    for i in 0..=4 {
        for j in 0..=4 {
            ensure(jw(&jacobson::matrix_unit(i, j)) == unit(i, j), || {
                format!("library E_{i}{j} differs")
            })?;
            for k in 0..=4 {
                for l in 0..=4 {
                    let expected = if j == k { unit(i, l) } else { Elt::new() };
                    ensure(JAC.mul(&unit(i, j), &unit(k, l)) == expected, || {
                        format!("E_{i}{j} E_{k}{l} is wrong")
                    })?;
                    products += 1;
                }
            }
        }
    }
    let t = within(start, 30)?;
    Ok(format!(
        "d_n for n <= 8, {products} unit products, {:.2}s",
        t.as_secs_f64()
    ))
}

/// `c^i b^j` (as printed) to the word `cc..cbb..b`.
fn expand(term: &str) -> String {
    let mut out = String::new();
    if term == "1" {
        return out;
    }
    let mut chars = term.chars().peekable();
    while let Some(c) = chars.next() {
        let mut exp = String::new();
        if chars.peek() == Some(&'^') {
            chars.next();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                exp.push(*d);
                chars.next();
            }
        }
        let k: usize = if exp.is_empty() {
            1
        } else {
            exp.parse().unwrap()
        };
        out.extend(std::iter::repeat_n(c, k));
    }
    out
}

fn mccoy() -> Outcome {
    const BOUND: usize = 8;
    let sampler = MonomialSampler::new(3);
    let mut premise_false = 0;
    for i in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(SEED, 7000 + i));
        let f = sampler.sample(4, &mut rng);
        let g = sampler.sample(4, &mut rng);
        let r = solver::mccoy_check(&f, &g, BOUND);
        ensure(r.holds(), || {
            format!("f = {f}, g = {g}: right {}, left {}", r.right, r.left)
        })?;
        for v in [&r.right, &r.left] {
            if let McCoyVerdict::PremiseFalse { witness } = v {
                ensure(!witness.is_zero(), || "zero premise witness".into())?;
                premise_false += 1;
            }
        }
        if let McCoyVerdict::PremiseFalse { witness } = &r.right {
            let w = model(witness);
            ensure(
                DK.mul(&model(&f), &w).is_empty() && DK.mul(&model(&g), &w).is_empty(),
                || format!("{witness} is not a common right annihilator of {f}, {g}"),
            )?;
        }
        if f.in_ra() && g.in_ra() {
            ensure(matches!(r.right, McCoyVerdict::PremiseFalse { .. }), || {
                format!("{f}, {g} lie in Ra but the premise was not flagged")
            })?;
        }
    }
    for (f, g) in [
        ("a", "xa^2"),
        ("a + xa", "a^2"),
        ("axa", "x^2a^3"),
        ("a^2", "a^3"),
    ] {
        let (f, g): (RingElement, RingElement) = (f.parse().unwrap(), g.parse().unwrap());
        ensure(
            matches!(
                solver::mccoy_check(&f, &g, BOUND).right,
                McCoyVerdict::PremiseFalse { .. }
            ),
            || format!("{f}, {g}: premise failure missed"),
        )?;
    }
    Ok(format!(
        "200 pairs, {premise_false} premise failures flagged, 4 fixed Ra pairs"
    ))
}

fn uniform_dimension() -> Outcome {
    let s: RingElement = "1 + ax".parse().unwrap();
    let r = solver::cyclic_independence(&s, &RingElement::a(), 5, 8);
    ensure(r.independent(), || {
        format!("ranks {:?}, dependencies {}", r.ranks, r.dependency_dim)
    })?;
    Ok(format!("ranks {:?}, kernel 0", r.ranks))
}

fn finite_rings() -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut rings = 0;
    for spec in finring::catalog() {
        let start = Instant::now();
        let ring = FiniteRing::build(&spec).map_err(|e| e.to_string())?;
        let report = finring::verify_equivalences(&ring).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{spec}: {}", report.to_text()))?;
        slowest = slowest.max(within(start, 30)?);
        rings += 1;
    }
    // Z/n by hand: a in a^2 Z/n exactly when the library says right strongly regular.
    for n in 2..=32u16 {
        let ring = FiniteRing::build(&format!("Z{n}").parse().unwrap()).unwrap();
        for a in 0..n {
            let sr =
                (0..n).any(|x| (a as u32 * a as u32 % n as u32 * x as u32) % n as u32 == a as u32);
            ensure(
                ring.element_predicates(a).right_strongly_regular == sr,
                || format!("Z{n}: a={a}"),
            )?;
        }
    }
    let e11 = finring::e11_example().map_err(|e| e.to_string())?;
    ensure(e11.passed(), || e11.to_text())?;
    // The same example with 2x2 matrices over F2 multiplied by hand.
    type M = [[u8; 2]; 2];
    let mul = |p: M, q: M| -> M {
        let mut r = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = (p[i][0] & q[0][j]) ^ (p[i][1] & q[1][j]);
            }
        }
        r
    };
    let all: Vec<M> = (0..16u8)
        .map(|b| [[b & 1, b >> 1 & 1], [b >> 2 & 1, b >> 3 & 1]])
        .collect();
    let e = [[1, 0], [0, 0]];
    let ee = mul(e, e);
    ensure(
        all.iter().any(|&x| mul(ee, x) == e) && all.iter().any(|&y| mul(y, ee) == e),
        || "E11 is not strongly regular".into(),
    )?;
    let left_ideal: Vec<M> = all.iter().map(|&r| mul(r, e)).collect();
    ensure(
        all.iter().any(|&r| !left_ideal.contains(&mul(e, r))),
        || "R E11 is two-sided".into(),
    )?;
    Ok(format!(
        "{rings} rings, slowest {:.3}s; E11 strongly regular, R E11 not two-sided",
        slowest.as_secs_f64()
    ))
}

fn ra_contrapositive() -> Outcome {
    let mut n = 0;
    let mut i = 0;
    while n < 500 {
        let f = sample(4, 5, 8000 + 2 * i);
        let g = sample(4, 5, 8001 + 2 * i);
        i += 1;
        let (mf, mg) = (model(&f), model(&g));
        if mf.contains("") || mg.contains("") || (ends_in_a(&mf) && ends_in_a(&mg)) {
            continue;
        }
        let h = add(&add(&mf, &mg), &DK.mul(&mf, &mg));
        ensure(!ends_in_a(&h), || {
            format!("f = {f}, g = {g}: f + g + fg lies in Ra")
        })?;
        let lib = &(&f + &g) + &(&f * &g);
        ensure(model(&lib) == h && !lib.in_ra(), || {
            format!("library disagrees on {f}, {g}")
        })?;
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn jacobson_radical() -> Outcome {
    let mut n = 0;
    let mut i = 0;
    let mut deepest = 0;
    while n < 200 {
        let f = sample(4, 5, 9000 + i);
        i += 1;
        if f.is_zero() {
            continue;
        }
        let k = structure::rx_witness(&f, 8)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no witness for {f}"))?;
        let fx = DK.mul(&model(&f), &DK.elt([power_word('x', k).as_str()]));
        ensure(fx.iter().any(|w| w.ends_with('x')), || {
            format!("{f} x^{k} has no monomial ending in x")
        })?;
        deepest = deepest.max(k);
        n += 1;
    }
    Ok(format!("{n} elements, witness exponent <= {deepest}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 16] = [
        ("rewriting strategies agree", rewriting),
        ("monomial order laws", order_laws),
        ("reduced or smaller products", main_lemma),
        ("trivial right annihilators off Ra", right_annihilator_of_rx),
        ("right annihilators in Ra", right_annihilator_of_ra),
        ("left annihilators are R a^n", left_annihilator_is_ra_n),
        ("nilpotency oracles agree", nilpotency_agreement),
        ("units are unipotent", unipotent_units),
        ("a = a^2 x without a = y a^2", non_dischinger_witness),
        ("k_n identities", kn_identities),
        ("Jacobson algebra", jacobson_suite),
        ("linear McCoy criterion", mccoy),
        ("independent cyclic submodules", uniform_dimension),
        ("finite-ring equivalences", finite_rings),
        ("f + g + fg outside Ra", ra_contrapositive),
        ("Rx witnesses", jacobson_radical),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
                failed += 1;
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
