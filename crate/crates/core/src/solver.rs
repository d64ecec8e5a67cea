//! Linear solvers on `R` restricted to inputs of bounded length.
//!
//! A product of bounded-length inputs with a fixed element lands in a
//! finite set of monomials, so each operator below is an exact finite
//! matrix: every answer is exact for its bound, and says nothing beyond it.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::dkring::{ReducedMonomial, RingElement};
use crate::error::{Error, Result};
use crate::gf2la::{self, BasisIndex, BitMatrix, BitVec};

/// Default length bound for annihilator computations.
pub const ANNIHILATOR_BOUND: usize = 10;
/// Default length bound for inverse and `g f^2 = f` searches.
pub const INVERSE_BOUND: usize = 12;

/// Shared `enumerate(L)` bases; they are immutable once built.
pub fn domain(bound: usize) -> Arc<BasisIndex> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BasisIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("basis cache poisoned").get(&bound) {
        return Arc::clone(b);
    }
    let built = Arc::new(BasisIndex::enumerate(bound));
    cache
        .lock()
        .expect("basis cache poisoned")
        .entry(bound)
        .or_insert(built)
        .clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `h -> f h`
    LeftMul,
    /// `h -> h f`
    RightMul,
}

/// Multiplication by a fixed element on the span of monomials of length at
/// most `bound`, as a matrix onto the monomials its image actually reaches.
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    pub f: RingElement,
    pub side: Side,
    pub bound: usize,
    pub domain: Arc<BasisIndex>,
    pub codomain: BasisIndex,
    pub matrix: BitMatrix,
}

fn apply(f: &RingElement, side: Side, m: &RingElement) -> RingElement {
    match side {
        Side::LeftMul => f * m,
        Side::RightMul => m * f,
    }
}

fn images(f: &RingElement, side: Side, domain: &BasisIndex) -> Vec<RingElement> {
    domain
        .monomials()
        .iter()
        .map(|m| apply(f, side, &RingElement::from(m.clone())))
        .collect()
}

/// A codomain basis covering every given element (plus `extra`).
fn covering_basis<'a, I>(elements: I, extra: &[&'a RingElement]) -> BasisIndex
where
    I: IntoIterator<Item = &'a RingElement>,
{
    let mut all = BTreeSet::new();
    for e in elements.into_iter().chain(extra.iter().copied()) {
        all.extend(e.monomials().cloned());
    }
    BasisIndex::from_monomials(all)
}

fn matrix_over(codomain: &BasisIndex, columns: &[RingElement]) -> BitMatrix {
    let cols = columns
        .iter()
        .map(|e| codomain.to_vector(e).expect("codomain covers every column"))
        .collect();
    BitMatrix::from_columns(codomain.len(), cols).expect("columns match codomain")
}

impl TruncatedOperator {
    pub fn new(f: &RingElement, side: Side, bound: usize) -> Self {
        Self::covering(f, side, bound, &[])
    }

    /// Like [`TruncatedOperator::new`], with `extra` guaranteed to be
    /// expressible in the codomain coordinates.
    pub fn covering(f: &RingElement, side: Side, bound: usize, extra: &[&RingElement]) -> Self {
        let domain = domain(bound);
        let cols = images(f, side, &domain);
        let codomain = covering_basis(&cols, extra);
        let matrix = matrix_over(&codomain, &cols);
        TruncatedOperator {
            f: f.clone(),
            side,
            bound,
            domain,
            codomain,
            matrix,
        }
    }

    pub fn kernel(&self) -> Vec<BitVec> {
        gf2la::kernel(&self.matrix)
    }

    /// Some `h` in the domain span with `op(h) = target`.
    pub fn preimage(&self, target: &RingElement) -> Option<RingElement> {
        let rhs = self.codomain.to_vector(target)?;
        gf2la::solve(&self.matrix, &rhs)
            .expect("rhs built over the codomain")
            .map(|v| self.domain.to_element(&v))
    }
}

/// A subspace of the length-bounded span, given by a basis of coordinate
/// vectors over `enumerate(bound)`.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub bound: usize,
    pub basis: Arc<BasisIndex>,
    pub vectors: Vec<BitVec>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn elements(&self) -> Vec<RingElement> {
        self.vectors
            .iter()
            .map(|v| self.basis.to_element(v))
            .collect()
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.bound == other.bound
            && gf2la::same_span(self.basis.len(), &self.vectors, &other.vectors)
    }

    pub fn contains(&self, e: &RingElement) -> bool {
        match self.basis.to_vector(e) {
            Some(v) => {
                let mut all = self.vectors.clone();
                let before = gf2la::span_rank(self.basis.len(), &all);
                all.push(v);
                gf2la::span_rank(self.basis.len(), &all) == before
            }
            None => false,
        }
    }

    /// Intersection with another subspace at the same bound.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.bound, other.bound, "subspaces at different bounds");
        let n = self.basis.len();
        let m1 = BitMatrix::from_columns(n, self.vectors.clone()).expect("same basis");
        let m2 = BitMatrix::from_columns(n, other.vectors.clone()).expect("same basis");
        Subspace {
            bound: self.bound,
            basis: Arc::clone(&self.basis),
            vectors: gf2la::image_intersection(&m1, &m2).expect("equal row counts"),
        }
    }

    /// The span of the given elements, which must fit in the bound.
    pub fn spanned_by(bound: usize, elements: &[RingElement]) -> Option<Subspace> {
        let basis = domain(bound);
        let vs = elements
            .iter()
            .map(|e| basis.to_vector(e))
            .collect::<Option<Vec<_>>>()?;
        Some(Subspace {
            bound,
            vectors: gf2la::span_basis(basis.len(), &vs),
            basis,
        })
    }
}

fn annihilator(f: &RingElement, side: Side, bound: usize) -> Subspace {
    let op = TruncatedOperator::new(f, side, bound);
    Subspace {
        bound,
        vectors: op.kernel(),
        basis: op.domain,
    }
}

/// `{h : |h| <= bound, f h = 0}`.
pub fn right_annihilator(f: &RingElement, bound: usize) -> Subspace {
    annihilator(f, Side::LeftMul, bound)
}

/// `{h : |h| <= bound, h f = 0}`.
pub fn left_annihilator(f: &RingElement, bound: usize) -> Subspace {
    annihilator(f, Side::RightMul, bound)
}

/// The `k` with `f ∈ R a^k` and `f ∉ R a^{k+1}`, i.e. the least trailing
/// `a`-exponent over the support.
pub fn annihilator_exponent(f: &RingElement) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !f.in_ra() {
        return Err(Error::NotInRa(f.to_string()));
    }
    Ok(f.monomials()
        .map(ReducedMonomial::trailing_a)
        .min()
        .expect("nonzero element has a support"))
}

/// Some `g` of length at most `bound` with `f g = 1`.
pub fn solve_right_inverse(f: &RingElement, bound: usize) -> Option<RingElement> {
    let one = RingElement::one();
    TruncatedOperator::covering(f, Side::LeftMul, bound, &[&one]).preimage(&one)
}

/// Some `g` of length at most `bound` with `g f^2 = f`.
pub fn solve_sr_equation(f: &RingElement, bound: usize) -> Option<RingElement> {
    if f.is_zero() {
        return Some(RingElement::zero());
    }
    let square = f * f;
    TruncatedOperator::covering(&square, Side::RightMul, bound, &[f]).preimage(f)
}

/// A basis of `{g s} ∩ {h t}` over `g, h` of length at most `bound`, as
/// elements of `R`.
pub fn cyclic_intersection(s: &RingElement, t: &RingElement, bound: usize) -> Vec<RingElement> {
    let dom = domain(bound);
    let left = images(s, Side::RightMul, &dom);
    let right = images(t, Side::RightMul, &dom);
    intersect_images(&left, &right)
}

fn intersect_images(left: &[RingElement], right: &[RingElement]) -> Vec<RingElement> {
    let codomain = covering_basis(left.iter().chain(right), &[]);
    let m1 = matrix_over(&codomain, left);
    let m2 = matrix_over(&codomain, right);
    gf2la::image_intersection(&m1, &m2)
        .expect("shared codomain")
        .iter()
        .map(|v| codomain.to_element(v))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum McCoyVerdict {
    /// The annihilators already meet nontrivially, so nothing is claimed.
    PremiseFalse {
        witness: RingElement,
    },
    Holds,
    Violated {
        witness: RingElement,
    },
}

impl fmt::Display for McCoyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McCoyVerdict::PremiseFalse { witness } => write!(f, "premise-false witness={witness}"),
            McCoyVerdict::Holds => f.write_str("holds"),
            McCoyVerdict::Violated { witness } => write!(f, "violated witness={witness}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McCoyReport {
    pub bound: usize,
    /// `r(f) ∩ r(g) = 0  =>  g r(f) ∩ f r(g) = 0`
    pub right: McCoyVerdict,
    /// `l(f) ∩ l(g) = 0  =>  l(f) g ∩ l(g) f = 0`
    pub left: McCoyVerdict,
}

impl McCoyReport {
    pub fn holds(&self) -> bool {
        !matches!(self.right, McCoyVerdict::Violated { .. })
            && !matches!(self.left, McCoyVerdict::Violated { .. })
    }
}

fn mccoy_side(f: &RingElement, g: &RingElement, bound: usize, side: Side) -> McCoyVerdict {
    let (kf, kg) = match side {
        Side::LeftMul => (right_annihilator(f, bound), right_annihilator(g, bound)),
        Side::RightMul => (left_annihilator(f, bound), left_annihilator(g, bound)),
    };
    let common = kf.intersect(&kg);
    if let Some(v) = common.vectors.first() {
        return McCoyVerdict::PremiseFalse {
            witness: common.basis.to_element(v),
        };
    }
    // Right form multiplies the annihilators on the left by the other
    // element; left form multiplies on the right.
    let lhs: Vec<RingElement> = kf.elements().iter().map(|h| apply(g, side, h)).collect();
    let rhs: Vec<RingElement> = kg.elements().iter().map(|h| apply(f, side, h)).collect();
    match intersect_images(&lhs, &rhs).into_iter().next() {
        Some(witness) => McCoyVerdict::Violated { witness },
        None => McCoyVerdict::Holds,
    }
}

/// The linear McCoy annihilator criterion for the pair `(f, g)` in both
/// left and right forms, exact at the bound.
pub fn mccoy_check(f: &RingElement, g: &RingElement, bound: usize) -> McCoyReport {
    McCoyReport {
        bound,
        right: mccoy_side(f, g, bound, Side::LeftMul),
        left: mccoy_side(f, g, bound, Side::RightMul),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub bound: usize,
    /// Dimension of each truncated module `{g s t^k}`.
    pub ranks: Vec<usize>,
    /// Dimension of the space of dependencies among the modules.
    pub dependency_dim: usize,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.dependency_dim == 0 && self.ranks.iter().all(|&r| r > 0)
    }
}

/// Checks that the truncated left ideals `R s, R s t, ..., R s t^depth` are
/// nonzero and independent: stacking bases of all of them yields a matrix
/// with zero kernel.
pub fn cyclic_independence(
    s: &RingElement,
    t: &RingElement,
    depth: u32,
    bound: usize,
) -> IndependenceReport {
    let dom = domain(bound);
    let mut generator = s.clone();
    let mut blocks = Vec::new();
    for _ in 0..=depth {
        blocks.push(images(&generator, Side::RightMul, &dom));
        generator = &generator * t;
    }
    let codomain = covering_basis(blocks.iter().flatten(), &[]);
    let mut ranks = Vec::new();
    let mut stacked = Vec::new();
    for block in &blocks {
        let m = matrix_over(&codomain, block);
        let basis = gf2la::span_basis(codomain.len(), m.columns());
        ranks.push(basis.len());
        stacked.extend(basis);
    }
    let stacked = BitMatrix::from_columns(codomain.len(), stacked).expect("shared codomain");
    IndependenceReport {
        bound,
        ranks,
        dependency_dim: gf2la::kernel(&stacked).len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    #[test]
    fn right_annihilator_examples() {
        let ann = right_annihilator(&e("a"), 2);
        assert!(ann.contains(&e("1 + ax")));
        for h in ann.elements() {
            assert!((&e("a") * &h).is_zero());
        }
        assert!(right_annihilator(&e("x"), 10).is_zero());
        assert_eq!(right_annihilator(&RingElement::zero(), 3).dim(), 14);
    }

    #[test]
    fn left_annihilator_examples() {
        let ann = left_annihilator(&e("1 + ax"), 3);
        assert!(ann.contains(&e("a")));
        assert!(left_annihilator(&e("x"), 10).is_zero());
        assert!(left_annihilator(&RingElement::one(), 6).is_zero());
    }

    #[test]
    fn annihilator_exponent_examples() {
        assert_eq!(annihilator_exponent(&e("a^2 + xa^3")), Ok(2));
        assert_eq!(annihilator_exponent(&e("a")), Ok(1));
        assert!(matches!(
            annihilator_exponent(&e("a + x")),
            Err(Error::NotInRa(_))
        ));
        assert_eq!(
            annihilator_exponent(&RingElement::zero()),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn right_inverse_examples() {
        assert_eq!(
            solve_right_inverse(&RingElement::one(), 4),
            Some(RingElement::one())
        );
        let f = e("1 + a + xa^2");
        let g = solve_right_inverse(&f, 6).unwrap();
        assert_eq!(g, e("1 + a + xa^2 + a^2 + axa^2"));
        assert_eq!(&f * &g, RingElement::one());
        assert_eq!(solve_right_inverse(&e("a"), 12), None);
    }

    #[test]
    fn sr_equation_examples() {
        assert_eq!(
            solve_sr_equation(&RingElement::zero(), 5),
            Some(RingElement::zero())
        );
        let u = e("1 + a + xa^2");
        let g = solve_sr_equation(&u, 6).unwrap();
        assert_eq!(&g * &(&u * &u), u);
        assert_eq!(solve_sr_equation(&e("a"), 12), None);
    }

    #[test]
    fn cyclic_intersection_examples() {
        let s = e("1 + ax");
        assert!(cyclic_intersection(&s, &e("a"), 8).is_empty());
        let same = cyclic_intersection(&e("a"), &e("a"), 3);
        assert_eq!(same.len(), 14);
        let inter = cyclic_intersection(&e("a"), &e("a^2"), 3);
        let basis = domain(10);
        let vs: Vec<_> = inter.iter().map(|x| basis.to_vector(x).unwrap()).collect();
        let target = basis.to_vector(&e("a^2")).unwrap();
        let mut with = vs.clone();
        with.push(target);
        assert_eq!(
            gf2la::span_rank(basis.len(), &vs),
            gf2la::span_rank(basis.len(), &with)
        );
    }

    #[test]
    fn mccoy_examples() {
        let r = mccoy_check(&e("x"), &e("a + xa"), 5);
        assert_eq!(r.right, McCoyVerdict::Holds);
        assert!(r.holds());
        let r = mccoy_check(&e("a"), &e("xa^2"), 4);
        assert!(matches!(r.right, McCoyVerdict::PremiseFalse { .. }));
        let z = RingElement::zero();
        let r = mccoy_check(&z, &z, 2);
        assert!(matches!(r.right, McCoyVerdict::PremiseFalse { .. }));
        assert!(matches!(r.left, McCoyVerdict::PremiseFalse { .. }));
    }

    #[test]
    fn independence_small() {
        let report = cyclic_independence(&e("1 + ax"), &e("a"), 3, 4);
        assert!(report.independent(), "{report:?}");
    }
}
