//! Explicit finite rings given by addition and multiplication tables, with
//! brute-force element and ring predicates.

mod predicates;
mod spec;
mod verify;

pub use predicates::{ElementPredicates, RingPredicates, EXCHANGE_CAP};
pub use spec::RingSpec;
pub use verify::{catalog, e11_example, verify_equivalences};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest ring the constructors will build.
pub const ORDER_CAP: usize = 512;
/// Rings up to this order get an exhaustive axiom check at construction.
const EXHAUSTIVE_AXIOMS: usize = 64;
const SAMPLED_TRIPLES: usize = 20_000;

pub type Elem = u16;

#[derive(Clone)]
pub struct FiniteRing {
    label: String,
    order: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    zero: Elem,
    one: Elem,
    names: Vec<String>,
}

impl FiniteRing {
    pub fn build(spec: &RingSpec) -> Result<Self> {
        Self::build_capped(spec, ORDER_CAP)
    }

    pub fn build_capped(spec: &RingSpec, cap: usize) -> Result<Self> {
        let order = spec
            .order()
            .map_or(usize::MAX, |o| o.min(usize::MAX as u64) as usize);
        if order > cap {
            return Err(Error::SizeCap { order, cap });
        }
        let ring = Self::construct(spec)?;
        ring.check_axioms()?;
        Ok(ring)
    }

    fn construct(spec: &RingSpec) -> Result<Self> {
        Ok(match spec {
            RingSpec::Zmod(n) => {
                let n = *n as usize;
                Self::from_fn(
                    spec.to_string(),
                    n,
                    0,
                    1 % n,
                    |i, j| (i + j) % n,
                    |i, j| i * j % n,
                    |i| i.to_string(),
                )
            }
            RingSpec::PolyQuotient(p) => {
                let p = *p;
                let deg = 31 - p.leading_zeros();
                let reduce = move |mut v: u64| {
                    for bit in (deg..64).rev() {
                        if v >> bit & 1 == 1 {
                            v ^= (p as u64) << (bit - deg);
                        }
                    }
                    v as usize
                };
                let clmul = move |i: usize, j: usize| {
                    let mut acc = 0u64;
                    for bit in 0..deg {
                        if j >> bit & 1 == 1 {
                            acc ^= (i as u64) << bit;
                        }
                    }
                    reduce(acc)
                };
                let name = |i: usize| match i {
                    0 => "0".to_string(),
                    _ => poly_name(i as u32),
                };
                Self::from_fn(spec.to_string(), 1 << deg, 0, 1, |i, j| i ^ j, clmul, name)
            }
            RingSpec::Product(a, b) => {
                let ra = Self::construct(a)?;
                let rb = Self::construct(b)?;
                let nb = rb.order;
                let split = |i: usize| (i / nb, i % nb);
                Self::from_fn(
                    spec.to_string(),
                    ra.order * nb,
                    ra.zero as usize * nb + rb.zero as usize,
                    ra.one as usize * nb + rb.one as usize,
                    |i, j| {
                        let ((a1, b1), (a2, b2)) = (split(i), split(j));
                        ra.sum(a1 as Elem, a2 as Elem) as usize * nb
                            + rb.sum(b1 as Elem, b2 as Elem) as usize
                    },
                    |i, j| {
                        let ((a1, b1), (a2, b2)) = (split(i), split(j));
                        ra.prod(a1 as Elem, a2 as Elem) as usize * nb
                            + rb.prod(b1 as Elem, b2 as Elem) as usize
                    },
                    |i| {
                        let (x, y) = split(i);
                        format!("({}, {})", ra.name(x as Elem), rb.name(y as Elem))
                    },
                )
            }
            RingSpec::Matrix(base, k) => {
                let base = Self::construct(base)?;
                let k = *k as usize;
                let cells: Vec<(usize, usize)> =
                    (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
                Self::matrix_ring(spec.to_string(), &base, k, cells)
            }
            RingSpec::UpperTriangular(base, k) => {
                let base = Self::construct(base)?;
                let k = *k as usize;
                let cells: Vec<(usize, usize)> =
                    (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
                Self::matrix_ring(spec.to_string(), &base, k, cells)
            }
        })
    }

    /// `k x k` matrices over `base` whose nonzero entries sit in `cells`.
    fn matrix_ring(label: String, base: &FiniteRing, k: usize, cells: Vec<(usize, usize)>) -> Self {
        let q = base.order;
        let order = q.pow(cells.len() as u32);
        let decode = |mut id: usize| {
            let mut m = vec![base.zero; k * k];
            for &(i, j) in &cells {
                m[i * k + j] = (id % q) as Elem;
                id /= q;
            }
            m
        };
        let encode = |m: &[Elem]| {
            cells
                .iter()
                .rev()
                .fold(0usize, |acc, &(i, j)| acc * q + m[i * k + j] as usize)
        };
        let matrices: Vec<Vec<Elem>> = (0..order).map(decode).collect();
        let mut identity = vec![base.zero; k * k];
        for i in 0..k {
            identity[i * k + i] = base.one;
        }
        let zero = encode(&vec![base.zero; k * k]);
        let one = encode(&identity);
        let add = |x: usize, y: usize| {
            let sum: Vec<Elem> = matrices[x]
                .iter()
                .zip(&matrices[y])
                .map(|(&p, &r)| base.sum(p, r))
                .collect();
            encode(&sum)
        };
        let mul = |x: usize, y: usize| {
            let (a, b) = (&matrices[x], &matrices[y]);
            let mut c = vec![base.zero; k * k];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = base.zero;
                    for l in 0..k {
                        acc = base.sum(acc, base.prod(a[i * k + l], b[l * k + j]));
                    }
                    c[i * k + j] = acc;
                }
            }
            encode(&c)
        };
        let name = |x: usize| {
            let rows: Vec<String> = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| base.name(matrices[x][i * k + j]).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            format!("[{}]", rows.join(";"))
        };
        Self::from_fn(label, order, zero, one, add, mul, name)
    }

    fn from_fn(
        label: String,
        order: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        name: impl Fn(usize) -> String,
    ) -> Self {
        let mut add_t = Vec::with_capacity(order * order);
        let mut mul_t = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                add_t.push(add(i, j) as Elem);
                mul_t.push(mul(i, j) as Elem);
            }
        }
        FiniteRing {
            label,
            order,
            add: add_t,
            mul: mul_t,
            zero: zero as Elem,
            one: one as Elem,
            names: (0..order).map(name).collect(),
        }
    }

    fn check_triple(&self, a: Elem, b: Elem, c: Elem) -> Option<String> {
        let (s, p) = (|x, y| self.sum(x, y), |x, y| self.prod(x, y));
        let n = |x| self.name(x);
        if s(s(a, b), c) != s(a, s(b, c)) {
            return Some(format!(
                "addition is not associative at {}, {}, {}",
                n(a),
                n(b),
                n(c)
            ));
        }
        if p(p(a, b), c) != p(a, p(b, c)) {
            return Some(format!(
                "multiplication is not associative at {}, {}, {}",
                n(a),
                n(b),
                n(c)
            ));
        }
        if p(a, s(b, c)) != s(p(a, b), p(a, c)) || p(s(a, b), c) != s(p(a, c), p(b, c)) {
            return Some(format!(
                "distributivity fails at {}, {}, {}",
                n(a),
                n(b),
                n(c)
            ));
        }
        None
    }

    fn check_axioms(&self) -> Result<()> {
        for a in self.elements() {
            let ok = self.sum(a, self.zero) == a
                && self.prod(a, self.one) == a
                && self.prod(self.one, a) == a
                && self.elements().any(|b| self.sum(a, b) == self.zero)
                && self.elements().all(|b| self.sum(a, b) == self.sum(b, a));
            if !ok {
                return Err(Error::RingAxiom(format!(
                    "identities fail at {}",
                    self.name(a)
                )));
            }
        }
        let bad = if self.order <= EXHAUSTIVE_AXIOMS {
            self.elements()
                .flat_map(|a| {
                    self.elements()
                        .flat_map(move |b| self.elements().map(move |c| (a, b, c)))
                })
                .find_map(|(a, b, c)| self.check_triple(a, b, c))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.order as u64);
            let n = self.order as Elem;
            (0..SAMPLED_TRIPLES).find_map(|_| {
                let t = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                self.check_triple(t.0, t.1, t.2)
            })
        };
        bad.map_or(Ok(()), |msg| Err(Error::RingAxiom(msg)))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.order as Elem
    }

    pub fn sum(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order + b as usize]
    }

    pub fn prod(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.elements()
            .find(|&b| self.sum(a, b) == self.zero)
            .expect("additive inverse exists")
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.sum(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(self.one, |acc, _| self.prod(acc, a))
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a as usize]
    }

    /// The element printed as `name`.
    pub fn lookup(&self, name: &str) -> Option<Elem> {
        let wanted: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        self.elements().find(|&a| {
            self.name(a)
                .chars()
                .filter(|c| !c.is_whitespace())
                .collect::<String>()
                == wanted
        })
    }
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

fn poly_name(p: u32) -> String {
    let mut terms = Vec::new();
    for i in (0..32).rev().filter(|i| p >> i & 1 == 1) {
        terms.push(match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        });
    }
    terms.join("+")
}
