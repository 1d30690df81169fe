//! Commutative-ring contexts the sweep runs over, with arithmetic-operation
//! counters.
//!
//! Three exact domains: arbitrary-precision integers, arbitrary-precision
//! rationals, and bivariate integer polynomials. A context resolves the
//! symbolic `X`/`Y`/`One` edge weights to ring values, so the same sweep
//! computes either the full polynomial or its value at a fixed point.
//! Counters tally `add`/`mul` calls, the unit in which the evaluation-cost
//! bounds are stated (not bit operations).

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::BivariatePoly;
use crate::weights::WeightTag;

/// Snapshot of a context's operation counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCount {
    pub adds: u64,
    pub muls: u64,
}

impl OpCount {
    pub fn total(&self) -> u64 {
        self.adds + self.muls
    }
}

#[derive(Debug, Default)]
pub struct OpCounter {
    adds: AtomicU64,
    muls: AtomicU64,
}

impl OpCounter {
    fn record_add(&self) {
        self.adds.fetch_add(1, Ordering::Relaxed);
    }

    fn record_mul(&self) {
        self.muls.fetch_add(1, Ordering::Relaxed);
    }

    fn snapshot(&self) -> OpCount {
        OpCount {
            adds: self.adds.load(Ordering::Relaxed),
            muls: self.muls.load(Ordering::Relaxed),
        }
    }

    fn reset(&self) {
        self.adds.store(0, Ordering::Relaxed);
        self.muls.store(0, Ordering::Relaxed);
    }
}

/// A commutative-ring evaluation context.
pub trait Ring {
    type Element: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// Resolves a symbolic edge weight; `from_weight(One)` must equal
    /// `one()`.
    #[allow(clippy::wrong_self_convention)]
    fn from_weight(&self, tag: WeightTag) -> Self::Element;

    fn ops(&self) -> OpCount;
    fn reset_ops(&self);
}

/// Arbitrary-precision integers with `X`/`Y` pinned to fixed values.
#[derive(Debug)]
pub struct IntegerRing {
    x: BigInt,
    y: BigInt,
    counter: OpCounter,
}

impl IntegerRing {
    pub fn new(x: BigInt, y: BigInt) -> Self {
        Self {
            x,
            y,
            counter: OpCounter::default(),
        }
    }
}

impl Ring for IntegerRing {
    type Element = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.counter.record_add();
        a + b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.counter.record_mul();
        a * b
    }

    fn from_weight(&self, tag: WeightTag) -> BigInt {
        match tag {
            WeightTag::X => self.x.clone(),
            WeightTag::Y => self.y.clone(),
            WeightTag::One => BigInt::one(),
        }
    }

    fn ops(&self) -> OpCount {
        self.counter.snapshot()
    }

    fn reset_ops(&self) {
        self.counter.reset();
    }
}

/// Arbitrary-precision rationals with `X`/`Y` pinned to fixed values.
#[derive(Debug)]
pub struct RationalRing {
    x: BigRational,
    y: BigRational,
    counter: OpCounter,
}

impl RationalRing {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Self {
            x,
            y,
            counter: OpCounter::default(),
        }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Self::new(
            BigRational::from(BigInt::from(x)),
            BigRational::from(BigInt::from(y)),
        )
    }
}

impl Ring for RationalRing {
    type Element = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.counter.record_add();
        a + b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.counter.record_mul();
        a * b
    }

    fn from_weight(&self, tag: WeightTag) -> BigRational {
        match tag {
            WeightTag::X => self.x.clone(),
            WeightTag::Y => self.y.clone(),
            WeightTag::One => BigRational::one(),
        }
    }

    fn ops(&self) -> OpCount {
        self.counter.snapshot()
    }

    fn reset_ops(&self) {
        self.counter.reset();
    }
}

/// Exact bivariate integer polynomials; `X` and `Y` stay symbolic.
#[derive(Debug, Default)]
pub struct PolynomialRing {
    counter: OpCounter,
}

impl PolynomialRing {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Ring for PolynomialRing {
    type Element = BivariatePoly;

    fn zero(&self) -> BivariatePoly {
        BivariatePoly::zero()
    }

    fn one(&self) -> BivariatePoly {
        BivariatePoly::one()
    }

    fn add(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        self.counter.record_add();
        a.add(b)
    }

    fn mul(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        self.counter.record_mul();
        a.mul(b)
    }

    fn from_weight(&self, tag: WeightTag) -> BivariatePoly {
        match tag {
            WeightTag::X => BivariatePoly::var_x(),
            WeightTag::Y => BivariatePoly::var_y(),
            WeightTag::One => BivariatePoly::one(),
        }
    }

    fn ops(&self) -> OpCount {
        self.counter.snapshot()
    }

    fn reset_ops(&self) {
        self.counter.reset();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_laws<R: Ring>(ring: &R, sample: impl Fn(&mut ChaCha8Rng) -> R::Element) {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1a77);
        for _ in 0..1000 {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            let c = sample(&mut rng);
            assert_eq!(
                ring.add(&ring.add(&a, &b), &c),
                ring.add(&a, &ring.add(&b, &c))
            );
            assert_eq!(
                ring.mul(&ring.mul(&a, &b), &c),
                ring.mul(&a, &ring.mul(&b, &c))
            );
            assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
            assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
            assert_eq!(
                ring.mul(&a, &ring.add(&b, &c)),
                ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
            );
            assert_eq!(ring.add(&a, &ring.zero()), a);
            assert_eq!(ring.mul(&a, &ring.one()), a);
        }
    }

    #[test]
    fn integer_ring_laws() {
        let ring = IntegerRing::new(BigInt::from(2), BigInt::from(3));
        check_laws(&ring, |rng| BigInt::from(rng.random_range(-50i64..=50)));
    }

    #[test]
    fn rational_ring_laws() {
        let ring = RationalRing::from_i64(1, 1);
        check_laws(&ring, |rng| {
            BigRational::new(
                BigInt::from(rng.random_range(-20i64..=20)),
                BigInt::from(rng.random_range(1i64..=9)),
            )
        });
    }

    #[test]
    fn polynomial_ring_laws() {
        let ring = PolynomialRing::new();
        check_laws(&ring, |rng| {
            let terms: Vec<(usize, usize, i64)> = (0..rng.random_range(0..4))
                .map(|_| {
                    (
                        rng.random_range(0..3),
                        rng.random_range(0..3),
                        rng.random_range(-5i64..=5),
                    )
                })
                .collect();
            BivariatePoly::from_terms(&terms)
        });
    }

    #[test]
    fn from_weight_one_is_identity() {
        assert_eq!(
            IntegerRing::new(BigInt::from(7), BigInt::from(9)).from_weight(WeightTag::One),
            BigInt::one()
        );
        assert_eq!(
            RationalRing::from_i64(7, 9).from_weight(WeightTag::One),
            BigRational::one()
        );
        assert_eq!(
            PolynomialRing::new().from_weight(WeightTag::One),
            BivariatePoly::one()
        );
    }

    #[test]
    fn eval_matches_polynomial_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
        for _ in 0..200 {
            let terms: Vec<(usize, usize, i64)> = (0..rng.random_range(1..5))
                .map(|_| {
                    (
                        rng.random_range(0..4),
                        rng.random_range(0..4),
                        rng.random_range(-6i64..=6),
                    )
                })
                .collect();
            let p = BivariatePoly::from_terms(&terms[..terms.len() / 2 + 1]);
            let q = BivariatePoly::from_terms(&terms[terms.len() / 2..]);
            let x = BigRational::new(
                BigInt::from(rng.random_range(-5i64..=5)),
                BigInt::from(rng.random_range(1i64..=4)),
            );
            let y = BigRational::new(
                BigInt::from(rng.random_range(-5i64..=5)),
                BigInt::from(rng.random_range(1i64..=4)),
            );
            assert_eq!(p.mul(&q).eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
            assert_eq!(p.add(&q).eval(&x, &y), p.eval(&x, &y) + q.eval(&x, &y));
        }
    }

    #[test]
    fn counters_tally_calls() {
        let ring = IntegerRing::new(BigInt::from(1), BigInt::from(1));
        assert_eq!(ring.ops(), OpCount::default());
        let two = ring.add(&ring.one(), &ring.one());
        let _ = ring.mul(&two, &two);
        let _ = ring.mul(&two, &two);
        assert_eq!(ring.ops(), OpCount { adds: 1, muls: 2 });
        assert_eq!(ring.ops().total(), 3);
        ring.reset_ops();
        assert_eq!(ring.ops(), OpCount::default());
    }
}
