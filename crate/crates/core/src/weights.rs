//! Edge weighting of a region and the per-vertex matrices the sweep
//! multiplies.
//!
//! Vertical edges on the upper path carry `X`, horizontal edges on the lower
//! path carry `Y`, everything else carries `One`; the value of the weighted
//! lattice under this assignment is the Tutte polynomial of the region's
//! matroid.

use std::collections::{BTreeMap, HashSet};

use crate::lattice::{LatticeEdge, LatticePoint, LatticeRegion, Orientation};

/// Symbolic edge weight, resolved to a ring element by `Ring::from_weight`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightTag {
    X,
    Y,
    One,
}

/// A region together with a total weight assignment on its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedLattice {
    region: LatticeRegion,
    weights: BTreeMap<LatticeEdge, WeightTag>,
}

/// Assigns the Tutte weighting: `X` on the upper path's north steps, `Y` on
/// the lower path's east steps, `One` elsewhere. The two rules cannot clash
/// on a shared edge since `X` applies only to vertical edges and `Y` only to
/// horizontal ones.
pub fn tutte_weighting(region: &LatticeRegion) -> WeightedLattice {
    let upper_norths: HashSet<LatticeEdge> = region
        .upper()
        .edges()
        .into_iter()
        .filter(|e| e.orientation() == Orientation::Vertical)
        .collect();
    let lower_easts: HashSet<LatticeEdge> = region
        .lower()
        .edges()
        .into_iter()
        .filter(|e| e.orientation() == Orientation::Horizontal)
        .collect();

    let weights = region
        .edges()
        .into_iter()
        .map(|e| {
            let tag = if upper_norths.contains(&e) {
                WeightTag::X
            } else if lower_easts.contains(&e) {
                WeightTag::Y
            } else {
                WeightTag::One
            };
            (e, tag)
        })
        .collect();

    WeightedLattice {
        region: region.clone(),
        weights,
    }
}

impl WeightedLattice {
    pub fn region(&self) -> &LatticeRegion {
        &self.region
    }

    /// Weight of a region edge; `None` for edges outside the region.
    pub fn weight(&self, e: &LatticeEdge) -> Option<WeightTag> {
        self.weights.get(e).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// Edges with their tags, in lexicographic edge order.
    pub fn edges(&self) -> impl Iterator<Item = (&LatticeEdge, WeightTag)> {
        self.weights.iter().map(|(e, t)| (e, *t))
    }

    fn has_edge(&self, e: &LatticeEdge) -> bool {
        self.weights.contains_key(e)
    }

    /// Incoming region edges of `v`, left-arriving before below-arriving.
    pub fn in_edges(&self, v: LatticePoint) -> Vec<LatticeEdge> {
        let mut edges = Vec::with_capacity(2);
        if v.x > 0 {
            let left = LatticeEdge::horizontal(LatticePoint::new(v.x - 1, v.y));
            if self.has_edge(&left) {
                edges.push(left);
            }
        }
        if v.y > 0 {
            let below = LatticeEdge::vertical(LatticePoint::new(v.x, v.y - 1));
            if self.has_edge(&below) {
                edges.push(below);
            }
        }
        edges
    }

    /// Outgoing region edges of `v`, up before right.
    pub fn out_edges(&self, v: LatticePoint) -> Vec<LatticeEdge> {
        [LatticeEdge::vertical(v), LatticeEdge::horizontal(v)]
            .into_iter()
            .filter(|e| self.has_edge(e))
            .collect()
    }

    /// The matrix associated with vertex `v`: one row per incoming edge, one
    /// column per outgoing edge, every column filled with that outgoing
    /// edge's weight. The source gets a single virtual row carrying the
    /// outgoing weights; the sink a single virtual all-ones column.
    pub fn vertex_matrix(&self, v: LatticePoint) -> VertexMatrix {
        let in_edges = self.in_edges(v);
        let out_edges = self.out_edges(v);
        let entries = if v == self.region.source() {
            let row: Vec<WeightTag> = out_edges
                .iter()
                .map(|e| self.weight(e).expect("outgoing edge is in region"))
                .collect();
            vec![row]
        } else if v == self.region.sink() {
            vec![vec![WeightTag::One]; in_edges.len()]
        } else {
            let row: Vec<WeightTag> = out_edges
                .iter()
                .map(|e| self.weight(e).expect("outgoing edge is in region"))
                .collect();
            vec![row; in_edges.len()]
        };
        VertexMatrix {
            vertex: v,
            in_edges,
            out_edges,
            entries,
        }
    }

    /// Concatenated outgoing-edge lists of a stack's vertices (NW to SE).
    pub fn stack_out_edges(&self, stack: &[LatticePoint]) -> Vec<LatticeEdge> {
        stack.iter().flat_map(|&v| self.out_edges(v)).collect()
    }

    /// Concatenated incoming-edge lists of a stack's vertices (NW to SE).
    pub fn stack_in_edges(&self, stack: &[LatticePoint]) -> Vec<LatticeEdge> {
        stack.iter().flat_map(|&v| self.in_edges(v)).collect()
    }
}

/// The rows-by-columns weight grid attached to one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMatrix {
    pub vertex: LatticePoint,
    pub in_edges: Vec<LatticeEdge>,
    pub out_edges: Vec<LatticeEdge>,
    pub entries: Vec<Vec<WeightTag>>,
}

impl VertexMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }
}
