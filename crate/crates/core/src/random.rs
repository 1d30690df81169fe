//! Deterministic region sampling for tests, verification runs and
//! benchmarks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::lattice::{LatticeRegion, MonotonePath, Step};

/// A uniformly random monotone path with `m` East and `r` North steps.
pub fn random_path(m: usize, r: usize, rng: &mut impl Rng) -> MonotonePath {
    let mut steps: Vec<Step> = std::iter::repeat_n(Step::East, m)
        .chain(std::iter::repeat_n(Step::North, r))
        .collect();
    steps.shuffle(rng);
    MonotonePath::from_steps(steps).expect("m + r >= 1")
}

/// A random valid region on a ground set of size `n >= 1`: sample two paths
/// with a common endpoint, then take the pointwise min/max of their
/// north-prefix tables as the lower/upper bounding paths.
pub fn random_region(n: usize, rng: &mut impl Rng) -> LatticeRegion {
    assert!(n >= 1);
    let r = rng.random_range(0..=n);
    let a = random_path(n - r, r, rng);
    let b = random_path(n - r, r, rng);
    let path_from_prefixes = |prefix: &dyn Fn(usize) -> usize| {
        let steps = (1..=n)
            .map(|i| {
                if prefix(i) > prefix(i - 1) {
                    Step::North
                } else {
                    Step::East
                }
            })
            .collect();
        MonotonePath::from_steps(steps).expect("n >= 1")
    };
    let lower = path_from_prefixes(&|i| a.north_prefix(i).min(b.north_prefix(i)));
    let upper = path_from_prefixes(&|i| a.north_prefix(i).max(b.north_prefix(i)));
    LatticeRegion::new(lower, upper).expect("pointwise min/max bound a valid region")
}

/// The widest band on `n` elements (`n` even): lower path all East then all
/// North, upper path all North then all East. Presents the uniform matroid
/// and maximizes every stack, making it the worst case for the sweep.
pub fn widest_region(n: usize) -> LatticeRegion {
    assert!(
        n >= 2 && n.is_multiple_of(2),
        "widest band needs even n >= 2"
    );
    let m = n / 2;
    let lower = MonotonePath::parse(&("E".repeat(m) + &"N".repeat(m))).expect("nonempty");
    let upper = MonotonePath::parse(&("N".repeat(m) + &"E".repeat(m))).expect("nonempty");
    LatticeRegion::new(lower, upper).expect("valid band")
}

/// A small random rational with numerator in `[-3, 3]` and denominator in
/// `[1, 3]`.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(-3i64..=3)),
        BigInt::from(rng.random_range(1i64..=3)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampled_regions_are_valid_and_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=20 {
            let first = random_region(n, &mut a);
            let second = random_region(n, &mut b);
            assert_eq!(first, second);
            assert_eq!(first.ground_set_size(), n);
        }
    }

    #[test]
    fn small_case_is_exhaustively_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let reg = random_region(2, &mut rng);
            let key = reg.spec_key();
            assert!(
                ["EN|NE", "NE|NE", "EN|EN", "NN|NN", "EE|EE", "NE|EN"].contains(&key.as_str())
                    || key == "EN|EN",
                "unexpected spec {key}"
            );
            // lower must never sit above upper, which rules out NE|EN.
            assert_ne!(key, "NE|EN");
        }
    }

    #[test]
    fn widest_band_shape() {
        let reg = widest_region(8);
        assert_eq!(reg.spec_key(), "EEEENNNN|NNNNEEEE");
        for i in 0..=8usize {
            assert_eq!(reg.band_width(i), i.min(8 - i));
        }
    }
}
