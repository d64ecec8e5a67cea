//! Cheap proofs that `f^K != 0`, used before falling back to direct powers.
//!
//! Each certificate is exact. A ring map `φ` out of `R` with `φ(f)^K != 0`
//! forces `f^K != 0`, and so does a graded component: `R` is graded by
//! `#a - #x` (the relation is homogeneous), so the top and bottom
//! components of `f^K` are the `K`-th powers of those of `f`.

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dkring::{ReducedMonomial, RingElement};
use crate::jacobson::{JElement, JMonomial};

/// A `d x d` matrix over F2 with `d <= 8`, one byte per row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Mat {
    d: u8,
    rows: [u8; 8],
}

impl Mat {
    fn zero(d: u8) -> Self {
        Mat { d, rows: [0; 8] }
    }

    fn identity(d: u8) -> Self {
        let mut m = Self::zero(d);
        for i in 0..d as usize {
            m.rows[i] = 1 << i;
        }
        m
    }

    fn mul(&self, rhs: &Mat) -> Mat {
        let mut out = Mat::zero(self.d);
        for i in 0..self.d as usize {
            let mut row = 0;
            let mut bits = self.rows[i];
            while bits != 0 {
                row ^= rhs.rows[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            out.rows[i] = row;
        }
        out
    }

    fn add(&self, rhs: &Mat) -> Mat {
        let mut out = *self;
        for i in 0..8 {
            out.rows[i] ^= rhs.rows[i];
        }
        out
    }

    fn pow(&self, k: u32) -> Mat {
        (0..k).fold(Mat::identity(self.d), |acc, _| acc.mul(self))
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    fn is_nilpotent(&self) -> bool {
        self.pow(self.d as u32).is_zero()
    }
}

/// Images of `a` and `x` satisfying `A^2 X = A`.
struct MatrixRep {
    a: Mat,
    x: Mat,
}

trait Target: Clone {
    fn times(&self, rhs: &Self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn power(&self, k: u32) -> Self;
}

impl Target for Mat {
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn power(&self, k: u32) -> Self {
        self.pow(k)
    }
}

impl Target for JElement {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn power(&self, k: u32) -> Self {
        self.pow(k)
    }
}

/// Evaluates `f` under the ring map fixed by the images of `a` and `x`.
fn evaluate<T: Target>(f: &RingElement, one: &T, zero: T, a: &T, x: &T) -> T {
    let mut sum = zero;
    for m in f.monomials() {
        let e = m.exponents();
        let mut acc = one.clone();
        for k in (1..e.len()).rev() {
            acc = acc.times(&x.power(e[k]));
            if k > 1 {
                acc = acc.times(a);
            }
        }
        sum = sum.plus(&acc.times(&a.power(e[0])));
    }
    sum
}

fn matrix_reps() -> &'static [MatrixRep] {
    static REPS: OnceLock<Vec<MatrixRep>> = OnceLock::new();
    REPS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_a2);
        let mut seen = HashSet::new();
        let mut reps = Vec::new();
        for d in 1..=6u8 {
            let mask = ((1u16 << d) - 1) as u8;
            let mut found = 0;
            for _ in 0..200_000 {
                if found == 32 {
                    break;
                }
                let mut a = Mat::zero(d);
                let mut x = Mat::zero(d);
                for i in 0..d as usize {
                    a.rows[i] = rng.random::<u8>() & mask;
                    x.rows[i] = rng.random::<u8>() & mask;
                }
                if a.mul(&a).mul(&x) == a && !a.is_nilpotent() && seen.insert((a, x)) {
                    reps.push(MatrixRep { a, x });
                    found += 1;
                }
            }
        }
        reps
    })
}

/// Maps `R -> F2<b,c : bc = 1>` sending `a` to `b^m` and `x` to
/// `c^m + (1 + c^m b^m) y`; all satisfy the relation since
/// `b^{2m} (1 + c^m b^m) = 0`.
fn jacobson_maps() -> &'static [(JElement, JElement)] {
    static MAPS: OnceLock<Vec<(JElement, JElement)>> = OnceLock::new();
    MAPS.get_or_init(|| {
        let j = |c, b| JElement::from(JMonomial::new(c, b));
        let b = j(0, 1);
        let c = j(1, 0);
        let e = &JElement::one() + &j(1, 1);
        vec![
            (b.clone(), c.clone()),
            (j(0, 2), j(2, 0)),
            (b.clone(), &c + &(&e * &j(2, 1))),
            (b.clone(), &c + &e),
            (b.clone(), j(2, 1)),
            (b.clone(), &c + &(&e * &b)),
        ]
    })
}

fn jacobson_image(a: &JElement, x: &JElement, f: &RingElement) -> JElement {
    evaluate(f, &JElement::one(), JElement::zero(), a, x)
}

fn matrix_image(rep: &MatrixRep, f: &RingElement) -> Mat {
    let d = rep.a.d;
    evaluate(f, &Mat::identity(d), Mat::zero(d), &rep.a, &rep.x)
}

/// `#a - #x`, preserved by `aax -> a`.
pub(crate) fn degree(m: &ReducedMonomial) -> i64 {
    let e = m.exponents();
    let a_count = e[0] as i64 + e.len() as i64 - 2;
    let x_count: i64 = e[1..].iter().map(|&v| v as i64).sum();
    a_count - x_count
}

/// The lowest and highest graded components, when `f` is not homogeneous.
pub(crate) fn extreme_components(f: &RingElement) -> Option<[RingElement; 2]> {
    let degrees: Vec<i64> = f.monomials().map(degree).collect();
    let lo = *degrees.iter().min()?;
    let hi = *degrees.iter().max()?;
    if lo == hi {
        return None;
    }
    let part = |d| RingElement::from_monomials(f.monomials().filter(|m| degree(m) == d).cloned());
    Some([part(lo), part(hi)])
}

/// Whether some homomorphic image proves `f^k != 0`.
pub(crate) fn image_certifies(f: &RingElement, k: u32) -> bool {
    jacobson_maps()
        .iter()
        .any(|(a, x)| !jacobson_image(a, x, f).pow(k).is_zero())
        || matrix_reps()
            .iter()
            .any(|rep| !matrix_image(rep, f).pow(k).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_respect_relation() {
        let rel = |a: &JElement, x: &JElement| &(&(a * a) * x) + a;
        for (a, x) in jacobson_maps() {
            assert!(rel(a, x).is_zero(), "{a} {x}");
        }
        assert!(matrix_reps().len() >= 90);
        for rep in matrix_reps() {
            assert_eq!(rep.a.mul(&rep.a).mul(&rep.x), rep.a);
        }
    }

    #[test]
    fn images_are_multiplicative() {
        let f: RingElement = "x^2a + ax + a^2".parse().unwrap();
        let g: RingElement = "1 + xa + x".parse().unwrap();
        for rep in matrix_reps().iter().take(40) {
            let lhs = matrix_image(rep, &(&f * &g));
            assert_eq!(lhs, matrix_image(rep, &f).mul(&matrix_image(rep, &g)));
        }
        for (a, x) in jacobson_maps() {
            let lhs = jacobson_image(a, x, &(&f * &g));
            assert_eq!(lhs, &jacobson_image(a, x, &f) * &jacobson_image(a, x, &g));
        }
    }

    #[test]
    fn degree_is_invariant() {
        let f: RingElement = "a^2x + a".parse().unwrap();
        assert_eq!(f, RingElement::zero());
        let m: RingElement = "xa^3".parse().unwrap();
        assert_eq!(degree(m.max_monomial().unwrap()), 2);
        let split = extreme_components(&"a + x + ax".parse().unwrap()).unwrap();
        assert_eq!(split[0].to_string(), "x");
        assert_eq!(split[1].to_string(), "a");
        assert!(extreme_components(&"ax + 1".parse().unwrap()).is_none());
    }

    #[test]
    fn nilpotents_are_never_certified() {
        let f: RingElement = "a + xa^2".parse().unwrap();
        assert!(!image_certifies(&f, 3));
        assert!(image_certifies(&RingElement::one(), 12));
        assert!(image_certifies(&"a".parse().unwrap(), 12));
    }
}
