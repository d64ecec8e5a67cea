use super::{Elem, FiniteRing};
use crate::error::{Error, Result};

/// Largest order for which right ideals are enumerated by the exchange predicate.
pub const EXCHANGE_CAP: usize = 512;
const IDEAL_LIMIT: usize = 1 << 14;

/// Subset of a ring, one bit per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Set(Vec<u64>);

impl Set {
    fn empty(order: usize) -> Self {
        Set(vec![0; order.div_ceil(64)])
    }

    fn from_iter(order: usize, it: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Self::empty(order);
        for e in it {
            s.insert(e);
        }
        s
    }

    fn insert(&mut self, e: Elem) {
        self.0[e as usize / 64] |= 1 << (e % 64);
    }

    pub(crate) fn contains(&self, e: Elem) -> bool {
        self.0[e as usize / 64] >> (e % 64) & 1 == 1
    }

    pub(crate) fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &Set) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersection_len(&self, other: &Set) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| (w * 64 + b) as Elem)
        })
    }
}

/// Tables derived once per ring and shared by the predicates.
pub(crate) struct Cache<'r> {
    pub(crate) ring: &'r FiniteRing,
    /// `gR` for every `g`.
    pub(crate) right: Vec<Set>,
    /// `Rg` for every `g`.
    pub(crate) left: Vec<Set>,
    pub(crate) units: Vec<Elem>,
    pub(crate) idempotents: Vec<Elem>,
    pub(crate) nilpotent: Set,
    /// `r_R(g)` for every `g`.
    pub(crate) right_ann: Vec<Set>,
    right_ideals: Option<Vec<Set>>,
}

impl<'r> Cache<'r> {
    pub(crate) fn new(ring: &'r FiniteRing) -> Self {
        let n = ring.order();
        let right = ring
            .elements()
            .map(|g| Set::from_iter(n, ring.elements().map(|r| ring.prod(g, r))))
            .collect();
        let left = ring
            .elements()
            .map(|g| Set::from_iter(n, ring.elements().map(|r| ring.prod(r, g))))
            .collect();
        let units = ring
            .elements()
            .filter(|&u| {
                ring.elements()
                    .any(|v| ring.prod(u, v) == ring.one() && ring.prod(v, u) == ring.one())
            })
            .collect();
        let idempotents = ring.elements().filter(|&e| ring.prod(e, e) == e).collect();
        let nilpotent = Set::from_iter(
            n,
            ring.elements()
                .filter(|&a| ring.pow(a, n as u32) == ring.zero()),
        );
        let right_ann = ring
            .elements()
            .map(|g| {
                Set::from_iter(
                    n,
                    ring.elements().filter(|&r| ring.prod(g, r) == ring.zero()),
                )
            })
            .collect();
        Cache {
            ring,
            right,
            left,
            units,
            idempotents,
            nilpotent,
            right_ann,
            right_ideals: None,
        }
    }

    /// `s + t` for two additive subgroups, grown one coset at a time.
    pub(crate) fn sum(&self, s: &Set, t: &Set) -> Set {
        let r = self.ring;
        let mut out = s.clone();
        for v in t.iter() {
            if out.contains(v) {
                continue;
            }
            let h = out.clone();
            let cur: Vec<Elem> = h.iter().collect();
            let mut w = v;
            while !h.contains(w) {
                for &u in &cur {
                    out.insert(r.sum(u, w));
                }
                w = r.sum(w, v);
            }
        }
        out
    }

    /// Whether `s + t` is the whole ring, for additive subgroups `s`, `t`.
    pub(crate) fn sum_is_whole(&self, s: &Set, t: &Set) -> bool {
        s.len() * t.len() == self.ring.order() * s.intersection_len(t)
    }

    /// Every right ideal, built as sums of principal right ideals.
    fn right_ideals(&mut self) -> Result<&[Set]> {
        let order = self.ring.order();
        if order > EXCHANGE_CAP {
            return Err(Error::SizeCap {
                order,
                cap: EXCHANGE_CAP,
            });
        }
        if self.right_ideals.is_none() {
            let mut principal: Vec<Set> = Vec::new();
            for g in &self.right {
                if !principal.contains(g) {
                    principal.push(g.clone());
                }
            }
            let mut found = vec![Set::from_iter(order, [self.ring.zero()])];
            let mut seen: std::collections::HashSet<Set> = found.iter().cloned().collect();
            let mut frontier = 0;
            while frontier < found.len() {
                let base = found[frontier].clone();
                frontier += 1;
                for p in &principal {
                    if p.is_subset(&base) {
                        continue;
                    }
                    let next = self.sum(&base, p);
                    if seen.insert(next.clone()) {
                        found.push(next);
                        if found.len() > IDEAL_LIMIT {
                            return Err(Error::SizeCap {
                                order,
                                cap: EXCHANGE_CAP,
                            });
                        }
                    }
                }
            }
            self.right_ideals = Some(found);
        }
        Ok(self.right_ideals.as_deref().expect("just filled"))
    }
}

/// All element predicates of one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementPredicates {
    pub idempotent: bool,
    pub regular: bool,
    pub unit_regular: bool,
    pub pi_regular: bool,
    pub right_strongly_regular: bool,
    pub left_strongly_regular: bool,
    pub right_strongly_pi_regular: bool,
    pub left_strongly_pi_regular: bool,
    pub suitable: bool,
    pub left_suitable: bool,
    /// `None` when the ring is too large to enumerate right ideals.
    pub right_exchange: Option<bool>,
}

impl ElementPredicates {
    pub fn strongly_regular(&self) -> bool {
        self.right_strongly_regular && self.left_strongly_regular
    }

    pub fn strongly_pi_regular(&self) -> bool {
        self.right_strongly_pi_regular && self.left_strongly_pi_regular
    }
}

impl<'r> Cache<'r> {
    pub(crate) fn regular(&self, a: Elem) -> bool {
        let r = self.ring;
        r.elements().any(|y| r.prod(r.prod(a, y), a) == a)
    }

    pub(crate) fn unit_regular(&self, a: Elem) -> bool {
        let r = self.ring;
        self.units.iter().any(|&u| r.prod(r.prod(a, u), a) == a)
    }

    /// `a^1, a^2, ...` up to `max_n` terms, stopping once a power repeats
    /// (later powers add nothing new).
    pub(crate) fn powers(&self, a: Elem, max_n: u32) -> Vec<Elem> {
        let r = self.ring;
        let mut seen = Set::empty(r.order());
        let mut out = Vec::new();
        let mut p = a;
        while out.len() < max_n as usize && !seen.contains(p) {
            seen.insert(p);
            out.push(p);
            p = r.prod(p, a);
        }
        out
    }

    pub(crate) fn pi_regular(&self, a: Elem) -> bool {
        self.powers(a, self.ring.order() as u32)
            .into_iter()
            .any(|p| self.regular(p))
    }

    /// `a^n in a^{n+1} R` for some `n` in `1..=max_n`.
    pub(crate) fn right_spr(&self, a: Elem, max_n: u32) -> bool {
        let r = self.ring;
        self.powers(a, max_n)
            .into_iter()
            .any(|p| self.right[r.prod(p, a) as usize].contains(p))
    }

    pub(crate) fn left_spr(&self, a: Elem, max_n: u32) -> bool {
        let r = self.ring;
        self.powers(a, max_n)
            .into_iter()
            .any(|p| self.left[r.prod(a, p) as usize].contains(p))
    }

    pub(crate) fn suitable(&self, a: Elem) -> bool {
        let r = self.ring;
        let one_minus = r.sub(r.one(), a);
        self.idempotents.iter().any(|&e| {
            self.right[a as usize].contains(e)
                && self.right[one_minus as usize].contains(r.sub(r.one(), e))
        })
    }

    pub(crate) fn left_suitable(&self, a: Elem) -> bool {
        let r = self.ring;
        let one_minus = r.sub(r.one(), a);
        self.idempotents.iter().any(|&e| {
            self.left[a as usize].contains(e)
                && self.left[one_minus as usize].contains(r.sub(r.one(), e))
        })
    }

    pub(crate) fn right_exchange(&mut self, a: Elem) -> Result<bool> {
        let ar = self.right[a as usize].clone();
        let candidates: Vec<Elem> = self
            .idempotents
            .iter()
            .copied()
            .filter(|&e| ar.contains(e))
            .collect();
        let r = self.ring;
        let complements: Vec<Elem> = candidates.iter().map(|&e| r.sub(r.one(), e)).collect();
        let ideals = self.right_ideals()?.to_vec();
        Ok(ideals
            .iter()
            .all(|i| !self.sum_is_whole(&ar, i) || complements.iter().any(|&f| i.contains(f))))
    }

    pub(crate) fn element(&mut self, a: Elem) -> ElementPredicates {
        let r = self.ring;
        let n = r.order() as u32;
        ElementPredicates {
            idempotent: r.prod(a, a) == a,
            regular: self.regular(a),
            unit_regular: self.unit_regular(a),
            pi_regular: self.pi_regular(a),
            right_strongly_regular: self.right_spr(a, 1),
            left_strongly_regular: self.left_spr(a, 1),
            right_strongly_pi_regular: self.right_spr(a, n),
            left_strongly_pi_regular: self.left_spr(a, n),
            suitable: self.suitable(a),
            left_suitable: self.left_suitable(a),
            right_exchange: self.right_exchange(a).ok(),
        }
    }
}

/// All ring predicates of one ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingPredicates {
    pub dedekind_finite: bool,
    pub abelian: bool,
    pub ni: bool,
    pub weakly_semicommutative: bool,
    pub left_duo: bool,
    pub weakly_left_duo: bool,
    pub right_dischinger: bool,
    pub left_dischinger: bool,
}

impl<'r> Cache<'r> {
    pub(crate) fn dedekind_finite(&self) -> bool {
        let r = self.ring;
        r.elements().all(|a| {
            r.elements()
                .all(|b| r.prod(a, b) != r.one() || r.prod(b, a) == r.one())
        })
    }

    pub(crate) fn abelian(&self) -> bool {
        let r = self.ring;
        self.idempotents
            .iter()
            .all(|&e| r.elements().all(|s| r.prod(e, s) == r.prod(s, e)))
    }

    pub(crate) fn ni(&self) -> bool {
        let r = self.ring;
        let nil: Vec<Elem> = self.nilpotent.iter().collect();
        nil.iter().all(|&u| {
            nil.iter().all(|&v| self.nilpotent.contains(r.sum(u, v)))
                && r.elements().all(|s| {
                    self.nilpotent.contains(r.prod(u, s)) && self.nilpotent.contains(r.prod(s, u))
                })
        })
    }

    pub(crate) fn weakly_semicommutative(&self) -> bool {
        let r = self.ring;
        r.elements().all(|a| {
            r.elements().all(|b| {
                r.prod(a, b) != r.zero()
                    || r.elements()
                        .all(|s| self.nilpotent.contains(r.prod(r.prod(a, s), b)))
            })
        })
    }

    /// `aR` is contained in `Ra`.
    pub(crate) fn left_ideal_is_two_sided(&self, a: Elem) -> bool {
        self.right[a as usize].is_subset(&self.left[a as usize])
    }

    pub(crate) fn left_duo(&self) -> bool {
        self.ring
            .elements()
            .all(|a| self.left_ideal_is_two_sided(a))
    }

    /// Some `R a^n` with `1 <= n <= order` is a two-sided ideal.
    pub(crate) fn some_power_two_sided(&self, a: Elem) -> bool {
        self.powers(a, self.ring.order() as u32)
            .into_iter()
            .any(|p| self.left_ideal_is_two_sided(p))
    }

    pub(crate) fn weakly_left_duo(&self) -> bool {
        self.ring.elements().all(|a| self.some_power_two_sided(a))
    }

    /// Every right strongly regular element is strongly regular.
    pub(crate) fn right_dischinger(&self) -> bool {
        self.ring
            .elements()
            .all(|a| !self.right_spr(a, 1) || self.left_spr(a, 1))
    }

    pub(crate) fn left_dischinger(&self) -> bool {
        self.ring
            .elements()
            .all(|a| !self.left_spr(a, 1) || self.right_spr(a, 1))
    }

    /// Every right strongly pi-regular element is strongly pi-regular.
    pub(crate) fn right_dischinger_pi(&self) -> bool {
        let n = self.ring.order() as u32;
        self.ring
            .elements()
            .all(|a| !self.right_spr(a, n) || self.left_spr(a, n))
    }

    pub(crate) fn left_dischinger_pi(&self) -> bool {
        let n = self.ring.order() as u32;
        self.ring
            .elements()
            .all(|a| !self.left_spr(a, n) || self.right_spr(a, n))
    }

    pub(crate) fn ring_predicates(&self) -> RingPredicates {
        RingPredicates {
            dedekind_finite: self.dedekind_finite(),
            abelian: self.abelian(),
            ni: self.ni(),
            weakly_semicommutative: self.weakly_semicommutative(),
            left_duo: self.left_duo(),
            weakly_left_duo: self.weakly_left_duo(),
            right_dischinger: self.right_dischinger(),
            left_dischinger: self.left_dischinger(),
        }
    }
}

impl FiniteRing {
    pub fn element_predicates(&self, a: Elem) -> ElementPredicates {
        Cache::new(self).element(a)
    }

    pub fn ring_predicates(&self) -> RingPredicates {
        Cache::new(self).ring_predicates()
    }

    pub fn right_exchange(&self, a: Elem) -> Result<bool> {
        Cache::new(self).right_exchange(a)
    }

    /// Number of right ideals.
    pub fn right_ideal_count(&self) -> Result<usize> {
        Cache::new(self).right_ideals().map(<[Set]>::len)
    }
}
