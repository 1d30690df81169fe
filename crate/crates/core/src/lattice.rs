//! Monotone lattice paths and the regions they bound.
//!
//! A region is a pair of North/East paths from `(0,0)` to `(m,r)` with the
//! lower path never above the upper one. Everything downstream (weighting,
//! stack decomposition, the sweep) is derived from the prefix-count tables
//! built here.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A single unit step of a monotone path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("EmptyPath")]
    EmptyPath,
    /// 1-based position of the offending character.
    #[error("IllegalCharacter({0})")]
    IllegalCharacter(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("LengthMismatch")]
    LengthMismatch,
    #[error("EndpointMismatch")]
    EndpointMismatch,
    /// First prefix length at which the lower path climbs above the upper.
    #[error("LowerAboveUpper({0})")]
    LowerAboveUpper(usize),
}

/// A nonempty monotone North/East path starting at the origin.
///
/// Keeps the step sequence together with its prefix-count table:
/// `north_prefix[i]` is the number of North steps among the first `i` steps,
/// so the path sits at `(i - north_prefix[i], north_prefix[i])` after `i`
/// steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotonePath {
    steps: Vec<Step>,
    north_prefix: Vec<usize>,
}

impl MonotonePath {
    /// Parses a path from a string over `{N, E}` (case-insensitive).
    pub fn parse(text: &str) -> Result<Self, PathError> {
        if text.is_empty() {
            return Err(PathError::EmptyPath);
        }
        let mut steps = Vec::with_capacity(text.len());
        for (idx, ch) in text.chars().enumerate() {
            match ch {
                'N' | 'n' => steps.push(Step::North),
                'E' | 'e' => steps.push(Step::East),
                _ => return Err(PathError::IllegalCharacter(idx + 1)),
            }
        }
        Ok(Self::from_steps(steps).expect("nonempty"))
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, PathError> {
        if steps.is_empty() {
            return Err(PathError::EmptyPath);
        }
        let mut north_prefix = Vec::with_capacity(steps.len() + 1);
        north_prefix.push(0);
        let mut norths = 0;
        for step in &steps {
            if *step == Step::North {
                norths += 1;
            }
            north_prefix.push(norths);
        }
        Ok(Self {
            steps,
            north_prefix,
        })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of North steps among the first `i` steps.
    pub fn north_prefix(&self, i: usize) -> usize {
        self.north_prefix[i]
    }

    /// Number of East steps among the first `i` steps.
    pub fn east_prefix(&self, i: usize) -> usize {
        i - self.north_prefix[i]
    }

    /// Total North steps (the `r` of the endpoint).
    pub fn north_count(&self) -> usize {
        self.north_prefix[self.len()]
    }

    /// Total East steps (the `m` of the endpoint).
    pub fn east_count(&self) -> usize {
        self.east_prefix(self.len())
    }

    /// Position after `i` steps.
    pub fn point_at(&self, i: usize) -> LatticePoint {
        LatticePoint::new(self.east_prefix(i), self.north_prefix(i))
    }

    /// The unit edges traversed by the path, in step order.
    pub fn edges(&self) -> Vec<LatticeEdge> {
        (0..self.len())
            .map(|i| LatticeEdge {
                from: self.point_at(i),
                to: self.point_at(i + 1),
            })
            .collect()
    }

    /// The path with North and East exchanged (reflection across the diagonal).
    pub fn swap_ne(&self) -> MonotonePath {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                Step::North => Step::East,
                Step::East => Step::North,
            })
            .collect();
        Self::from_steps(steps).expect("nonempty")
    }

    /// The sub-path consisting of steps `from..to`, re-based at the origin.
    pub fn slice(&self, from: usize, to: usize) -> MonotonePath {
        Self::from_steps(self.steps[from..to].to_vec()).expect("nonempty slice")
    }
}

impl FromStr for MonotonePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for MonotonePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                Step::North => "N",
                Step::East => "E",
            })?;
        }
        Ok(())
    }
}

/// A point of the integer lattice, `x` east and `y` north of the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: usize,
    pub y: usize,
}

impl LatticePoint {
    pub fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }

    pub fn up(self) -> LatticePoint {
        LatticePoint::new(self.x, self.y + 1)
    }

    pub fn right(self) -> LatticePoint {
        LatticePoint::new(self.x + 1, self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// A unit edge between lattice points; `to - from` is `(0,1)` or `(1,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeEdge {
    pub from: LatticePoint,
    pub to: LatticePoint,
}

impl LatticeEdge {
    pub fn vertical(from: LatticePoint) -> Self {
        Self {
            from,
            to: from.up(),
        }
    }

    pub fn horizontal(from: LatticePoint) -> Self {
        Self {
            from,
            to: from.right(),
        }
    }

    pub fn orientation(&self) -> Orientation {
        if self.to.x == self.from.x {
            Orientation::Vertical
        } else {
            Orientation::Horizontal
        }
    }
}

impl fmt::Display for LatticeEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// The lattice region between a lower and an upper monotone path sharing
/// both endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeRegion {
    lower: MonotonePath,
    upper: MonotonePath,
}

impl LatticeRegion {
    /// Validates that the two paths bound a region: equal lengths, equal
    /// endpoints, and the lower path never above the upper one.
    pub fn new(lower: MonotonePath, upper: MonotonePath) -> Result<Self, RegionError> {
        if lower.len() != upper.len() {
            return Err(RegionError::LengthMismatch);
        }
        if lower.north_count() != upper.north_count() {
            return Err(RegionError::EndpointMismatch);
        }
        for i in 0..=lower.len() {
            if lower.north_prefix(i) > upper.north_prefix(i) {
                return Err(RegionError::LowerAboveUpper(i));
            }
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> &MonotonePath {
        &self.lower
    }

    pub fn upper(&self) -> &MonotonePath {
        &self.upper
    }

    /// East extent `m` of the common endpoint.
    pub fn east_extent(&self) -> usize {
        self.lower.east_count()
    }

    /// North extent `r` of the common endpoint.
    pub fn north_extent(&self) -> usize {
        self.lower.north_count()
    }

    /// Ground-set size `n = m + r`.
    pub fn ground_set_size(&self) -> usize {
        self.lower.len()
    }

    pub fn source(&self) -> LatticePoint {
        LatticePoint::new(0, 0)
    }

    pub fn sink(&self) -> LatticePoint {
        LatticePoint::new(self.east_extent(), self.north_extent())
    }

    /// Vertices-per-anti-diagonal count minus one at prefix length `i`.
    pub fn band_width(&self, i: usize) -> usize {
        self.upper.north_prefix(i) - self.lower.north_prefix(i)
    }

    /// Canonical `"lower|upper"` key.
    pub fn spec_key(&self) -> String {
        format!("{}|{}", self.lower, self.upper)
    }

    /// Whether `p` lies on or between the two bounding paths.
    ///
    /// Equivalent to `pLo(p.x) <= p.y <= qHi(p.x)` where `pLo`/`qHi` are the
    /// lowest/highest heights of the lower/upper path at east-coordinate
    /// `p.x`; on the anti-diagonal `i = x + y` this reads directly off the
    /// prefix tables.
    pub fn contains(&self, p: LatticePoint) -> bool {
        if p.x > self.east_extent() || p.y > self.north_extent() {
            return false;
        }
        let i = p.x + p.y;
        self.lower.north_prefix(i) <= p.y && p.y <= self.upper.north_prefix(i)
    }

    /// The anti-diagonal vertex layers, indexed `0..=n`, each ordered from
    /// northwest (on the upper path) to southeast (on the lower path).
    pub fn stacks(&self) -> Vec<Vec<LatticePoint>> {
        let n = self.ground_set_size();
        (0..=n)
            .map(|i| {
                let top = self.upper.point_at(i);
                (0..=self.band_width(i))
                    .map(|j| LatticePoint::new(top.x + j, top.y - j))
                    .collect()
            })
            .collect()
    }

    /// The edges used by at least one full path, computed by a forward and a
    /// backward reachability sweep over the in-region points.
    pub fn edges(&self) -> BTreeSet<LatticeEdge> {
        let m = self.east_extent();
        let r = self.north_extent();
        let idx = |p: LatticePoint| p.x * (r + 1) + p.y;

        let mut forward = vec![false; (m + 1) * (r + 1)];
        for x in 0..=m {
            for y in 0..=r {
                let p = LatticePoint::new(x, y);
                if !self.contains(p) {
                    continue;
                }
                forward[idx(p)] = (x == 0 && y == 0)
                    || (x > 0
                        && self.contains(LatticePoint::new(x - 1, y))
                        && forward[idx(LatticePoint::new(x - 1, y))])
                    || (y > 0
                        && self.contains(LatticePoint::new(x, y - 1))
                        && forward[idx(LatticePoint::new(x, y - 1))]);
            }
        }

        let mut backward = vec![false; (m + 1) * (r + 1)];
        for x in (0..=m).rev() {
            for y in (0..=r).rev() {
                let p = LatticePoint::new(x, y);
                if !self.contains(p) {
                    continue;
                }
                backward[idx(p)] = (x == m && y == r)
                    || (x < m && self.contains(p.right()) && backward[idx(p.right())])
                    || (y < r && self.contains(p.up()) && backward[idx(p.up())]);
            }
        }

        let mut edges = BTreeSet::new();
        for x in 0..=m {
            for y in 0..=r {
                let p = LatticePoint::new(x, y);
                if !self.contains(p) || !forward[idx(p)] {
                    continue;
                }
                for q in [p.up(), p.right()] {
                    if self.contains(q) && backward[idx(q)] {
                        edges.insert(LatticeEdge { from: p, to: q });
                    }
                }
            }
        }
        edges
    }

    /// The region with both paths North/East-swapped and their roles
    /// exchanged; presents the dual matroid.
    pub fn transposed(&self) -> LatticeRegion {
        LatticeRegion::new(self.upper.swap_ne(), self.lower.swap_ne())
            .expect("transpose preserves validity")
    }

    /// Interior prefix lengths where the two paths meet.
    pub fn pinch_indices(&self) -> Vec<usize> {
        (1..self.ground_set_size())
            .filter(|&i| self.band_width(i) == 0)
            .collect()
    }

    /// Splits the region at every pinch point into independent sub-regions
    /// whose polynomials multiply to the whole.
    pub fn split_at_pinches(&self) -> Vec<LatticeRegion> {
        let mut cuts = vec![0];
        cuts.extend(self.pinch_indices());
        cuts.push(self.ground_set_size());
        cuts.windows(2)
            .map(|w| {
                LatticeRegion::new(self.lower.slice(w[0], w[1]), self.upper.slice(w[0], w[1]))
                    .expect("pinch slices are valid regions")
            })
            .collect()
    }
}
