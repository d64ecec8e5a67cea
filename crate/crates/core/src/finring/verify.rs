use std::collections::HashMap;

use super::predicates::Cache;
use super::{Elem, FiniteRing, RingSpec};
use crate::error::Result;
use crate::report::Report;

/// Properties of `ax` that the seven-way block looks at.
#[derive(Clone, Copy)]
struct AxFacts {
    suitable: bool,
    exchange: bool,
    pi_regular: bool,
    regular: bool,
    idempotent: bool,
}

/// Checks, by exhaustion over the ring:
///
/// * for every `a = a^2 x`: `Ra = Ra^2`, `ax` suitable, `ax` exchange,
///   `ax` pi-regular, `ax` regular, `ax` idempotent and `axa = a` are all
///   true or all false;
/// * `a = a^2 x` with `a` pi-regular gives `Ra = Ra^2`;
/// * an idempotent `e` with `aR + eR = R` and `r(a) + (1-e)R = R` makes `a`
///   unit-regular;
/// * `a = a^2 x` with some `Ra^n` two-sided gives `a` left strongly regular;
/// * in an abelian ring, for `a = a^2 x`: some `Ra^n` is two-sided exactly
///   when `a` is strongly regular, and then every `Ra^n` is;
/// * the strongly regular and strongly pi-regular forms of the one-sided
///   Dischinger conditions agree;
/// * both Dischinger conditions hold, weakly semicommutative implies
///   Dedekind-finite, NI implies weakly semicommutative, and suitability is
///   left-right symmetric.
pub fn verify_equivalences(ring: &FiniteRing) -> Result<Report> {
    let mut cache = Cache::new(ring);
    let mut report = Report::new("finring")
        .param("ring", ring.label())
        .param("order", ring.order() as u64);
    let r = ring;
    let one = r.one();
    let label = r.label();

    if !cache.dedekind_finite() {
        report.fail(format!("{label} is not Dedekind-finite"));
    }

    let mut facts: HashMap<Elem, AxFacts> = HashMap::new();
    for a in r.elements() {
        let aa = r.prod(a, a);
        let ra_eq_ra2 = cache.left[a as usize] == cache.left[aa as usize];
        for x in r.elements().filter(|&x| r.prod(aa, x) == a) {
            let ax = r.prod(a, x);
            let f = match facts.get(&ax) {
                Some(f) => *f,
                None => {
                    let f = AxFacts {
                        suitable: cache.suitable(ax),
                        exchange: cache.right_exchange(ax)?,
                        pi_regular: cache.pi_regular(ax),
                        regular: cache.regular(ax),
                        idempotent: r.prod(ax, ax) == ax,
                    };
                    facts.insert(ax, f);
                    f
                }
            };
            let conds = [
                ra_eq_ra2,
                f.suitable,
                f.exchange,
                f.pi_regular,
                f.regular,
                f.idempotent,
                r.prod(ax, a) == a,
            ];
            report.count("pairs", 1);
            if conds.iter().any(|&c| c != conds[0]) {
                let bits: String = conds.iter().map(|&c| if c { '1' } else { '0' }).collect();
                report.fail(format!(
                    "{label}: seven-way block splits at a={}, x={}: {bits}",
                    r.name(a),
                    r.name(x)
                ));
            }
        }
    }

    for a in r.elements() {
        if !cache.right_spr(a, 1) {
            continue;
        }
        let ra_eq_ra2 = cache.left[a as usize] == cache.left[r.prod(a, a) as usize];
        if cache.pi_regular(a) {
            report.count("pi_regular", 1);
            if !ra_eq_ra2 {
                report.fail(format!(
                    "{label}: a={} is pi-regular with a in a^2R but Ra != Ra^2",
                    r.name(a)
                ));
            }
        }
        let two_sided = cache.some_power_two_sided(a);
        let strongly = cache.left_spr(a, 1);
        if two_sided {
            report.count("two_sided_power", 1);
            if !strongly {
                report.fail(format!(
                    "{label}: a={} has a two-sided Ra^n but a is not in Ra^2",
                    r.name(a)
                ));
            }
        }
    }

    let abelian = cache.abelian();
    if abelian {
        for a in r.elements().filter(|&a| cache.right_spr(a, 1)) {
            report.count("abelian", 1);
            let strongly = cache.left_spr(a, 1);
            if cache.some_power_two_sided(a) != strongly {
                report.fail(format!(
                    "{label}: abelian equivalence fails at a={}",
                    r.name(a)
                ));
            }
            let every = cache
                .powers(a, r.order() as u32)
                .into_iter()
                .all(|p| cache.left_ideal_is_two_sided(p));
            if strongly && !every {
                report.fail(format!(
                    "{label}: some Ra^n is not two-sided at a={}",
                    r.name(a)
                ));
            }
        }
    }

    for a in r.elements() {
        let ar = &cache.right[a as usize];
        let ann = &cache.right_ann[a as usize];
        for &e in &cache.idempotents {
            let er = &cache.right[e as usize];
            let fr = &cache.right[r.sub(one, e) as usize];
            if cache.sum_is_whole(ar, er) && cache.sum_is_whole(ann, fr) {
                report.count("idempotent_splits", 1);
                if !cache.unit_regular(a) {
                    report.fail(format!(
                        "{label}: a={} with e={} is not unit-regular",
                        r.name(a),
                        r.name(e)
                    ));
                }
            }
        }
    }

    let (rd, ld) = (cache.right_dischinger(), cache.left_dischinger());
    if rd != cache.right_dischinger_pi() || ld != cache.left_dischinger_pi() {
        report.fail(format!(
            "{label}: the two forms of the Dischinger condition disagree"
        ));
    }
    if !rd || !ld {
        report.fail(format!("{label} is not Dischinger"));
    }
    let ws = cache.weakly_semicommutative();
    if ws && !cache.dedekind_finite() {
        report.fail(format!(
            "{label}: weakly semicommutative but not Dedekind-finite"
        ));
    }
    if cache.ni() && !ws {
        report.fail(format!("{label}: NI but not weakly semicommutative"));
    }
    if let Some(a) = r
        .elements()
        .find(|&a| cache.suitable(a) != cache.left_suitable(a))
    {
        report.fail(format!(
            "{label}: suitability is one-sided at a={}",
            r.name(a)
        ));
    }
    Ok(report.finish())
}

/// The rings the finite-ring checks run on.
pub fn catalog() -> Vec<RingSpec> {
    let mut out: Vec<RingSpec> = (2..=32).map(RingSpec::Zmod).collect();
    for s in [
        "M2(F2)",
        "M2(Z4)",
        "T2(F2)",
        "T3(F2)",
        "F2[t]/t^2",
        "F2[t]/t^3",
        "F2[t]/t^4",
    ] {
        out.push(s.parse().expect("catalog spec"));
    }
    let factors = ["F2", "Z3", "Z4", "F2[t]/t^2", "T2(F2)", "M2(F2)"];
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            out.push(format!("{a} x {b}").parse().expect("catalog spec"));
        }
    }
    out
}

/// In `M2(F2)`, `E11` is strongly regular while no `R E11^n` is two-sided.
pub fn e11_example() -> Result<Report> {
    let ring = FiniteRing::build(&"M2(F2)".parse()?)?;
    let cache = Cache::new(&ring);
    let mut report = Report::new("e11");
    let e11 = ring.lookup("[1,0;0,0]").expect("matrix unit");
    let e12 = ring.lookup("[0,1;0,0]").expect("matrix unit");
    if !(cache.right_spr(e11, 1) && cache.left_spr(e11, 1)) {
        report.fail("E11 is not strongly regular");
    }
    if cache.some_power_two_sided(e11) {
        report.fail("some R E11^n is two-sided");
    }
    let prod = ring.prod(e11, e12);
    if cache.left[e11 as usize].contains(prod) {
        report.fail("E11 E12 lies in R E11");
    } else {
        report.witness(format!("E11*E12 = {} is not in R*E11", ring.name(prod)));
    }
    Ok(report.finish())
}
