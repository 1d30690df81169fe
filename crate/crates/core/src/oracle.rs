//! Brute-force ground truth: exhaustive path enumeration, the classical
//! basis-activity expansion, and a straightforward path-count dynamic
//! program. Everything here is independent of the sweep engine and exists to
//! check it.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{LatticeEdge, LatticePoint, LatticeRegion, MonotonePath, Step};
use crate::poly::BivariatePoly;
use crate::rings::Ring;
use crate::weights::WeightedLattice;

/// Default ground-set cap for exhaustive path enumeration.
pub const ENUMERATION_MAX_N: usize = 24;

/// Default ground-set cap for the basis-activity expansion.
pub const ACTIVITIES_MAX_N: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("RegionTooLarge(n={n}, max={max})")]
    RegionTooLarge { n: usize, max: usize },
}

fn guard(region: &LatticeRegion, max: usize) -> Result<(), OracleError> {
    let n = region.ground_set_size();
    if n > max {
        Err(OracleError::RegionTooLarge { n, max })
    } else {
        Ok(())
    }
}

/// A subset of the ground set `[n]` (1-based element labels) as a bitmask;
/// bit `i - 1` set means element `i` is in the set. A basis has exactly the
/// region's north extent many elements and decodes to a full path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisSet(pub u64);

impl BasisSet {
    pub fn contains(&self, element: usize) -> bool {
        debug_assert!(element >= 1);
        self.0 >> (element - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn insert(&self, element: usize) -> BasisSet {
        BasisSet(self.0 | 1 << (element - 1))
    }

    pub fn remove(&self, element: usize) -> BasisSet {
        BasisSet(self.0 & !(1 << (element - 1)))
    }

    /// The set of North-step positions of a path.
    pub fn from_path(path: &MonotonePath) -> BasisSet {
        let mut mask = 0u64;
        for (i, step) in path.steps().iter().enumerate() {
            if *step == Step::North {
                mask |= 1 << i;
            }
        }
        BasisSet(mask)
    }

    /// Decodes to a step sequence of length `n`: element `i` in the set
    /// means step `i` is North.
    pub fn to_path(&self, n: usize) -> MonotonePath {
        let steps = (1..=n)
            .map(|i| {
                if self.contains(i) {
                    Step::North
                } else {
                    Step::East
                }
            })
            .collect();
        MonotonePath::from_steps(steps).expect("n >= 1")
    }
}

/// All full paths of the region by backtracking, North branch first, so the
/// result is lexicographic under `N < E`.
pub fn enumerate_full_paths(region: &LatticeRegion) -> Result<Vec<MonotonePath>, OracleError> {
    enumerate_full_paths_with_limit(region, ENUMERATION_MAX_N)
}

pub fn enumerate_full_paths_with_limit(
    region: &LatticeRegion,
    max_n: usize,
) -> Result<Vec<MonotonePath>, OracleError> {
    guard(region, max_n)?;
    let n = region.ground_set_size();
    let mut paths = Vec::new();
    let mut steps: Vec<Step> = Vec::with_capacity(n);
    let mut stack: Vec<(LatticePoint, Step)> = Vec::new();
    let push_moves = |p: LatticePoint, stack: &mut Vec<(LatticePoint, Step)>| {
        // East is tried after North, so push it first.
        if region.contains(p.right()) {
            stack.push((p, Step::East));
        }
        if region.contains(p.up()) {
            stack.push((p, Step::North));
        }
    };
    push_moves(region.source(), &mut stack);
    while let Some((from, step)) = stack.pop() {
        steps.truncate(from.x + from.y);
        steps.push(step);
        let next = match step {
            Step::North => from.up(),
            Step::East => from.right(),
        };
        if next == region.sink() {
            paths.push(MonotonePath::from_steps(steps.clone()).expect("full length"));
        } else {
            push_moves(next, &mut stack);
        }
    }
    Ok(paths)
}

/// Sum over full paths of the product of the path's edge weights.
pub fn lattice_value_bruteforce<R: Ring>(
    weighted: &WeightedLattice,
    ring: &R,
) -> Result<R::Element, OracleError> {
    lattice_value_bruteforce_with_limit(weighted, ring, ENUMERATION_MAX_N)
}

pub fn lattice_value_bruteforce_with_limit<R: Ring>(
    weighted: &WeightedLattice,
    ring: &R,
    max_n: usize,
) -> Result<R::Element, OracleError> {
    value_bruteforce_with_limit(
        weighted.region(),
        ring,
        |e| ring.from_weight(weighted.weight(e).expect("path edge is in region")),
        max_n,
    )
}

/// Brute-force lattice value under an arbitrary edge-weight assignment.
pub fn value_bruteforce_with<R: Ring>(
    region: &LatticeRegion,
    ring: &R,
    weight_of: impl Fn(&LatticeEdge) -> R::Element,
) -> Result<R::Element, OracleError> {
    value_bruteforce_with_limit(region, ring, weight_of, ENUMERATION_MAX_N)
}

pub fn value_bruteforce_with_limit<R: Ring>(
    region: &LatticeRegion,
    ring: &R,
    weight_of: impl Fn(&LatticeEdge) -> R::Element,
    max_n: usize,
) -> Result<R::Element, OracleError> {
    let paths = enumerate_full_paths_with_limit(region, max_n)?;
    let mut total = ring.zero();
    for path in paths {
        let mut product = ring.one();
        for edge in path.edges() {
            product = ring.mul(&product, &weight_of(&edge));
        }
        total = ring.add(&total, &product);
    }
    Ok(total)
}

/// Whether the decoded path of `b` is a full path of the region.
pub fn is_basis(region: &LatticeRegion, b: BasisSet) -> bool {
    let n = region.ground_set_size();
    if b.len() != region.north_extent() || b.0 >> n != 0 {
        return false;
    }
    let mut norths = 0;
    for i in 1..=n {
        if b.contains(i) {
            norths += 1;
        }
        if norths < region.lower().north_prefix(i) || norths > region.upper().north_prefix(i) {
            return false;
        }
    }
    true
}

/// The classical expansion: sum over bases of
/// `x^(internal activity) * y^(external activity)`, with activities decided
/// by exchange tests in the ground-set order `1 < 2 < ... < n`.
pub fn tutte_by_activities(region: &LatticeRegion) -> Result<BivariatePoly, OracleError> {
    tutte_by_activities_with_limit(region, ACTIVITIES_MAX_N)
}

pub fn tutte_by_activities_with_limit(
    region: &LatticeRegion,
    max_n: usize,
) -> Result<BivariatePoly, OracleError> {
    guard(region, max_n)?;
    let n = region.ground_set_size();
    let paths = enumerate_full_paths_with_limit(region, max_n)?;
    let r = region.north_extent();
    let m = region.east_extent();
    let mut counts = vec![vec![BigInt::zero(); m + 1]; r + 1];

    for path in &paths {
        let basis = BasisSet::from_path(path);
        let mut internal = 0;
        for b in (1..=n).filter(|&b| basis.contains(b)) {
            let replaceable = (1..b)
                .filter(|&a| !basis.contains(a))
                .any(|a| is_basis(region, basis.remove(b).insert(a)));
            if !replaceable {
                internal += 1;
            }
        }
        let mut external = 0;
        for e in (1..=n).filter(|&e| !basis.contains(e)) {
            let replaceable = (1..e)
                .filter(|&a| basis.contains(a))
                .any(|a| is_basis(region, basis.remove(a).insert(e)));
            if !replaceable {
                external += 1;
            }
        }
        counts[internal][external] += 1;
    }

    let terms: Vec<(usize, usize, BigInt)> = counts
        .into_iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(e, c)| (i, e, c))
        })
        .collect();
    let mut poly = BivariatePoly::zero();
    for (i, e, c) in terms {
        let term = BivariatePoly::from_terms(&[(i, e, 1)]);
        poly = poly.add(&term.mul(&BivariatePoly::constant(c)));
    }
    Ok(poly)
}

/// Exact full-path count by per-vertex accumulation over the stacks.
pub fn count_paths_dp(region: &LatticeRegion) -> BigInt {
    let m = region.east_extent();
    let r = region.north_extent();
    let idx = |p: LatticePoint| p.x * (r + 1) + p.y;
    let mut counts = vec![BigInt::zero(); (m + 1) * (r + 1)];
    counts[0] = BigInt::one();
    for stack in region.stacks().iter().skip(1) {
        for &v in stack {
            let mut total = BigInt::zero();
            if v.x > 0 {
                let left = LatticePoint::new(v.x - 1, v.y);
                if region.contains(left) {
                    total += &counts[idx(left)];
                }
            }
            if v.y > 0 {
                let below = LatticePoint::new(v.x, v.y - 1);
                if region.contains(below) {
                    total += &counts[idx(below)];
                }
            }
            counts[idx(v)] = total;
        }
    }
    counts[idx(region.sink())].clone()
}
