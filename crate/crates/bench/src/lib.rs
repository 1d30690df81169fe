//! Shared fixtures for the sweep benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lpm_core::{random_region, widest_region, LatticeRegion};

/// Worst-case input: the full band on `n` elements.
pub fn band(n: usize) -> LatticeRegion {
    widest_region(n)
}

/// A reproducible random region on `n` elements.
pub fn seeded_region(n: usize, seed: u64) -> LatticeRegion {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    random_region(n, &mut rng)
}
