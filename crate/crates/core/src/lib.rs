//! Exact Tutte polynomials of lattice path matroids.
//!
//! A lattice path matroid is presented by two monotone North/East paths with
//! common endpoints; its bases are the full paths between them. The Tutte
//! polynomial is the value of the lattice under the weighting that puts `x`
//! on the upper path's north steps and `y` on the lower path's east steps,
//! and that value is computed by sweeping a partitioned row vector through
//! the per-vertex matrices of each anti-diagonal stack. The sweep runs over
//! any exact coefficient ring, so the same code produces the polynomial or
//! evaluates it at a fixed rational point, with operation counters exposing
//! the arithmetic cost.
//!
//! Brute-force oracles (path enumeration, the basis-activity expansion) and
//! an explicit minor-matrix circuit construction are included for
//! verification at small scale.

pub mod detcircuit;
pub mod engine;
pub mod lattice;
pub mod oracle;
pub mod poly;
pub mod random;
pub mod rings;
pub mod weights;

pub use detcircuit::{
    circuit_value_det, circuit_value_trace, circuit_with_weights, lattice_to_circuit, sdet,
    CircuitError, SDetMatrix, StackMatrix, SDET_MAX_DIM,
};
pub use engine::{count_bases, sweep, sweep_weighted, sweep_with, tutte_eval, tutte_polynomial};
pub use lattice::{
    LatticeEdge, LatticePoint, LatticeRegion, MonotonePath, Orientation, PathError, RegionError,
    Step,
};
pub use oracle::{
    count_paths_dp, enumerate_full_paths, enumerate_full_paths_with_limit, is_basis,
    lattice_value_bruteforce, lattice_value_bruteforce_with_limit, tutte_by_activities,
    tutte_by_activities_with_limit, value_bruteforce_with, value_bruteforce_with_limit, BasisSet,
    OracleError, ACTIVITIES_MAX_N, ENUMERATION_MAX_N,
};
pub use poly::{BivariatePoly, PolyJsonError};
pub use random::{random_path, random_rational, random_region, widest_region};
pub use rings::{IntegerRing, OpCount, PolynomialRing, RationalRing, Ring};
pub use weights::{tutte_weighting, VertexMatrix, WeightTag, WeightedLattice};
