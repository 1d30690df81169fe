//! The stack sweep: a partitioned row vector pushed through the per-vertex
//! matrices, one anti-diagonal at a time.
//!
//! The block-diagonal stack matrix is never materialized. The running vector
//! `T` is partitioned so each segment lines up with one vertex's incoming
//! edges, each segment is multiplied by that vertex's small matrix, and the
//! results are concatenated in stack order. Boundary consistency between
//! consecutive stacks is what makes the concatenation correct, and the sweep
//! asserts it as it goes. After the final stack `T` has a single entry: the
//! value of the weighted lattice, i.e. the Tutte polynomial (or its value at
//! a fixed point, depending on the ring).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::lattice::LatticeRegion;
use crate::poly::BivariatePoly;
use crate::rings::{PolynomialRing, RationalRing, Ring};
use crate::weights::{tutte_weighting, WeightedLattice};

/// Sweeps the Tutte-weighted region over `ring` and returns the final value.
pub fn sweep<R: Ring>(region: &LatticeRegion, ring: &R) -> R::Element {
    sweep_with(region, ring, |_, _| {})
}

/// Like [`sweep`], invoking `observe(k, &T)` after the `k`-th stack
/// (`k = 1..=n+1`); in the polynomial ring the entries of `T` have total
/// degree at most `k` at that point.
pub fn sweep_with<R, F>(region: &LatticeRegion, ring: &R, observe: F) -> R::Element
where
    R: Ring,
    F: FnMut(usize, &[R::Element]),
{
    sweep_weighted(&tutte_weighting(region), ring, observe)
}

/// The sweep over an already-built weighted lattice.
pub fn sweep_weighted<R, F>(weighted: &WeightedLattice, ring: &R, mut observe: F) -> R::Element
where
    R: Ring,
    F: FnMut(usize, &[R::Element]),
{
    let stacks = weighted.region().stacks();
    let mut t = vec![ring.one()];

    for (i, stack) in stacks.iter().enumerate() {
        let mut next = Vec::new();
        let mut offset = 0;
        for &v in stack {
            let matrix = weighted.vertex_matrix(v);
            let rows = matrix.rows();
            let cols = matrix.cols();
            // The segment's entries must arrive on exactly this vertex's
            // incoming edges (the source consumes the initial unit entry).
            if i > 0 {
                assert_eq!(
                    rows,
                    matrix.in_edges.len(),
                    "interior vertex {v} row/incoming mismatch"
                );
            }
            assert!(
                offset + rows <= t.len(),
                "stack {i} partition overruns T at vertex {v}"
            );
            let segment = &t[offset..offset + rows];
            for j in 0..cols {
                let mut acc = ring.mul(&segment[0], &ring.from_weight(matrix.entries[0][j]));
                for (k, entry) in segment.iter().enumerate().skip(1) {
                    acc = ring.add(
                        &acc,
                        &ring.mul(entry, &ring.from_weight(matrix.entries[k][j])),
                    );
                }
                next.push(acc);
            }
            offset += rows;
        }
        assert_eq!(offset, t.len(), "stack {i} partition did not cover T");
        t = next;
        observe(i + 1, &t);
    }

    assert_eq!(t.len(), 1, "sweep must terminate with a single entry");
    t.pop().expect("nonempty")
}

/// The Tutte polynomial of the region's lattice path matroid.
pub fn tutte_polynomial(region: &LatticeRegion) -> BivariatePoly {
    sweep(region, &PolynomialRing::new())
}

/// The Tutte polynomial evaluated exactly at `(x0, y0)`.
pub fn tutte_eval(region: &LatticeRegion, x0: &BigRational, y0: &BigRational) -> BigRational {
    sweep(region, &RationalRing::new(x0.clone(), y0.clone()))
}

/// Number of bases of the matroid, i.e. the value at `(1, 1)`.
pub fn count_bases(region: &LatticeRegion) -> BigInt {
    let one = BigRational::from(BigInt::from(1));
    tutte_eval(region, &one, &one).to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::MonotonePath;
    use crate::rings::OpCount;
    use num_traits::One;

    fn region(lower: &str, upper: &str) -> LatticeRegion {
        LatticeRegion::new(
            MonotonePath::parse(lower).unwrap(),
            MonotonePath::parse(upper).unwrap(),
        )
        .unwrap()
    }

    fn golden_region() -> LatticeRegion {
        region("ENENNEEN", "NNEENNEE")
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn product_example() -> BivariatePoly {
        let a = BivariatePoly::from_terms(&[(2, 0, 1), (1, 1, 1), (0, 2, 1), (1, 0, 1), (0, 1, 1)]);
        let c = BivariatePoly::from_terms(&[(1, 0, 1), (0, 1, 1), (0, 2, 1)]);
        a.mul(&BivariatePoly::var_x()).mul(&c)
    }

    #[test]
    fn unit_square_polynomial() {
        assert_eq!(
            tutte_polynomial(&region("EN", "NE")),
            BivariatePoly::from_terms(&[(1, 0, 1), (0, 1, 1)])
        );
    }

    #[test]
    fn degenerate_single_path_polynomial() {
        assert_eq!(
            tutte_polynomial(&region("NE", "NE")),
            BivariatePoly::from_terms(&[(1, 1, 1)])
        );
    }

    #[test]
    fn golden_region_polynomial_matches_factored_product() {
        assert_eq!(tutte_polynomial(&golden_region()), product_example());
    }

    #[test]
    fn golden_region_evaluations() {
        let f = golden_region();
        assert_eq!(tutte_eval(&f, &rat(1, 1), &rat(1, 1)), rat(15, 1));
        assert_eq!(tutte_eval(&f, &rat(2, 1), &rat(2, 1)), rat(256, 1));
        assert_eq!(count_bases(&f), BigInt::from(15));
    }

    #[test]
    fn unit_square_evaluations() {
        let unit = region("EN", "NE");
        assert_eq!(tutte_eval(&unit, &rat(3, 1), &rat(7, 1)), rat(10, 1));
        assert_eq!(tutte_eval(&unit, &rat(1, 2), &rat(1, 3)), rat(5, 6));
        assert_eq!(count_bases(&unit), BigInt::from(2));
        assert_eq!(count_bases(&region("NE", "NE")), BigInt::one());
    }

    #[test]
    fn uniform_presentation_has_six_bases() {
        let uniform = region("EENN", "NNEE");
        let p = tutte_polynomial(&uniform);
        assert_eq!(p.eval(&rat(1, 1), &rat(1, 1)), rat(6, 1));
        assert_eq!(count_bases(&uniform), BigInt::from(6));
    }

    #[test]
    fn eval_agrees_with_polynomial_evaluation() {
        let f = golden_region();
        let p = tutte_polynomial(&f);
        for (x, y) in [(rat(1, 2), rat(2, 3)), (rat(-3, 1), rat(5, 7))] {
            assert_eq!(tutte_eval(&f, &x, &y), p.eval(&x, &y));
        }
    }

    #[test]
    fn operation_count_is_exact_on_unit_square() {
        // Source row 1x2: 2 muls. Two interior 1x1 blocks: 2 muls. Sink
        // column 2x1: 2 muls + 1 add.
        let ring = RationalRing::from_i64(1, 1);
        sweep(&region("EN", "NE"), &ring);
        assert_eq!(ring.ops(), OpCount { adds: 1, muls: 6 });
    }

    #[test]
    fn intermediate_degrees_stay_within_stack_count() {
        let ring = PolynomialRing::new();
        sweep_with(&golden_region(), &ring, |k, t| {
            for entry in t {
                assert!(entry.total_degree() <= k, "degree exceeds stack count {k}");
            }
        });
    }

    #[test]
    fn degree_bounds_at_extents() {
        let f = golden_region();
        let p = tutte_polynomial(&f);
        assert!(p.deg_x() <= f.north_extent());
        assert!(p.deg_y() <= f.east_extent());
    }
}
