//! Explicit determinantal circuits at verification scale.
//!
//! A circuit is a closed chain of rational matrices (stacks). Its value can
//! be computed two ways: exponentially, by mapping each stack through the
//! minor operator `sdet` (an `n x m` matrix becomes the `2^n x 2^m` grid of
//! its minors) and tracing the composed product; or polynomially, as
//! `det(I + product of the stacks)`. The two agree, and for the circuit
//! built from a weighted lattice the value minus one equals the lattice
//! value. This module exists to check those identities concretely; real
//! computation goes through the sweep engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::LatticeEdge;
use crate::weights::{WeightTag, WeightedLattice};

/// Hard cap on stack dimensions fed to [`sdet`]; the output is `2^k`-sized.
pub const SDET_MAX_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("DimensionTooLarge(rows={rows}, cols={cols}, max={SDET_MAX_DIM})")]
    DimensionTooLarge { rows: usize, cols: usize },
    #[error("DimensionMismatch(cols={cols}, rows={rows})")]
    DimensionMismatch { cols: usize, rows: usize },
    #[error("EmptyCircuit")]
    EmptyCircuit,
}

/// A dense rational matrix; one stack of a circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl StackMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Self {
        assert!(!entries.is_empty() && !entries[0].is_empty());
        assert!(entries.iter().all(|row| row.len() == entries[0].len()));
        Self { entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&v| BigRational::from(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![vec![BigRational::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = BigRational::one();
        }
        Self { entries }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r][c]
    }

    pub fn mul(&self, other: &StackMatrix) -> Result<StackMatrix, CircuitError> {
        if self.cols() != other.rows() {
            return Err(CircuitError::DimensionMismatch {
                cols: self.cols(),
                rows: other.rows(),
            });
        }
        let entries = (0..self.rows())
            .map(|i| {
                (0..other.cols())
                    .map(|j| {
                        (0..self.cols())
                            .map(|k| &self.entries[i][k] * &other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(StackMatrix { entries })
    }

    pub fn add(&self, other: &StackMatrix) -> StackMatrix {
        assert_eq!((self.rows(), self.cols()), (other.rows(), other.cols()));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        StackMatrix { entries }
    }

    /// Block-diagonal placement of the given blocks, in order.
    pub fn direct_sum(blocks: &[StackMatrix]) -> StackMatrix {
        assert!(!blocks.is_empty());
        let rows = blocks.iter().map(StackMatrix::rows).sum();
        let cols = blocks.iter().map(StackMatrix::cols).sum();
        let mut entries = vec![vec![BigRational::zero(); cols]; rows];
        let mut ro = 0;
        let mut co = 0;
        for block in blocks {
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    entries[ro + r][co + c] = block.entries[r][c].clone();
                }
            }
            ro += block.rows();
            co += block.cols();
        }
        StackMatrix { entries }
    }

    /// Exact determinant by rational Gaussian elimination with row swaps.
    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows(), self.cols(), "determinant of square matrix");
        let n = self.rows();
        let mut a = self.entries.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => return BigRational::zero(),
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= &a[col][col];
            let (upper, below) = a.split_at_mut(col + 1);
            let pivot_row = &upper[col];
            for row in below {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot_row[col];
                for (cell, pivot_cell) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell -= &factor * pivot_cell;
                }
            }
        }
        det
    }

    /// Minor over the rows and columns selected by the bitmasks (bit `k`
    /// selects index `k`); the empty minor is 1, and selections of unequal
    /// size have no minor.
    fn minor(&self, row_mask: usize, col_mask: usize) -> BigRational {
        if row_mask.count_ones() != col_mask.count_ones() {
            return BigRational::zero();
        }
        let rows: Vec<usize> = (0..self.rows())
            .filter(|k| row_mask >> k & 1 == 1)
            .collect();
        let cols: Vec<usize> = (0..self.cols())
            .filter(|k| col_mask >> k & 1 == 1)
            .collect();
        if rows.is_empty() {
            return BigRational::one();
        }
        let sub = StackMatrix::new(
            rows.iter()
                .map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect())
                .collect(),
        );
        sub.determinant()
    }
}

/// The `2^rows x 2^cols` matrix of all minors of a stack, indexed by subset
/// bitmask (bit `k` of an index selects row/column `k` of the base matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDetMatrix {
    row_bits: usize,
    col_bits: usize,
    entries: Vec<Vec<BigRational>>,
}

impl SDetMatrix {
    pub fn row_dim(&self) -> usize {
        1 << self.row_bits
    }

    pub fn col_dim(&self) -> usize {
        1 << self.col_bits
    }

    /// Entry at row-subset `i_mask`, column-subset `j_mask`.
    pub fn entry(&self, i_mask: usize, j_mask: usize) -> &BigRational {
        &self.entries[i_mask][j_mask]
    }

    pub fn mul(&self, other: &SDetMatrix) -> Result<SDetMatrix, CircuitError> {
        if self.col_bits != other.row_bits {
            return Err(CircuitError::DimensionMismatch {
                cols: self.col_dim(),
                rows: other.row_dim(),
            });
        }
        let entries = (0..self.row_dim())
            .map(|i| {
                (0..other.col_dim())
                    .map(|j| {
                        (0..self.col_dim())
                            .map(|k| &self.entries[i][k] * &other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(SDetMatrix {
            row_bits: self.row_bits,
            col_bits: other.col_bits,
            entries,
        })
    }

    pub fn trace(&self) -> Result<BigRational, CircuitError> {
        if self.row_bits != self.col_bits {
            return Err(CircuitError::DimensionMismatch {
                cols: self.col_dim(),
                rows: self.row_dim(),
            });
        }
        Ok((0..self.row_dim())
            .map(|i| self.entries[i][i].clone())
            .sum())
    }
}

/// Maps a stack to its grid of minors.
pub fn sdet(m: &StackMatrix) -> Result<SDetMatrix, CircuitError> {
    if m.rows() > SDET_MAX_DIM || m.cols() > SDET_MAX_DIM {
        return Err(CircuitError::DimensionTooLarge {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let row_bits = m.rows();
    let col_bits = m.cols();
    let entries = (0..1usize << row_bits)
        .map(|i_mask| {
            (0..1usize << col_bits)
                .map(|j_mask| m.minor(i_mask, j_mask))
                .collect()
        })
        .collect();
    Ok(SDetMatrix {
        row_bits,
        col_bits,
        entries,
    })
}

fn check_closed(stacks: &[StackMatrix]) -> Result<(), CircuitError> {
    if stacks.is_empty() {
        return Err(CircuitError::EmptyCircuit);
    }
    for pair in stacks.windows(2) {
        if pair[0].cols() != pair[1].rows() {
            return Err(CircuitError::DimensionMismatch {
                cols: pair[0].cols(),
                rows: pair[1].rows(),
            });
        }
    }
    let last = stacks.last().expect("nonempty");
    if last.cols() != stacks[0].rows() {
        return Err(CircuitError::DimensionMismatch {
            cols: last.cols(),
            rows: stacks[0].rows(),
        });
    }
    Ok(())
}

/// Circuit value the exponential way: trace of the composed minor matrices.
pub fn circuit_value_trace(stacks: &[StackMatrix]) -> Result<BigRational, CircuitError> {
    check_closed(stacks)?;
    let mut acc = sdet(&stacks[0])?;
    for stack in &stacks[1..] {
        acc = acc.mul(&sdet(stack)?)?;
    }
    acc.trace()
}

/// Circuit value the polynomial way: `det(I + product of the stacks)`.
pub fn circuit_value_det(stacks: &[StackMatrix]) -> Result<BigRational, CircuitError> {
    check_closed(stacks)?;
    let mut product = stacks[0].clone();
    for stack in &stacks[1..] {
        product = product.mul(stack)?;
    }
    Ok(StackMatrix::identity(product.rows())
        .add(&product)
        .determinant())
}

/// One stack matrix per anti-diagonal: the direct sum of its vertices'
/// matrices (NW to SE) with edge weights resolved by `weight_of`. Composing
/// the whole chain yields a `1 x 1` matrix holding the lattice value.
pub fn circuit_with_weights<F>(weighted: &WeightedLattice, weight_of: F) -> Vec<StackMatrix>
where
    F: Fn(&LatticeEdge) -> BigRational,
{
    let region = weighted.region();
    region
        .stacks()
        .iter()
        .map(|stack| {
            let blocks: Vec<StackMatrix> = stack
                .iter()
                .map(|&v| {
                    let m = weighted.vertex_matrix(v);
                    let entries = if v == region.sink() {
                        vec![vec![BigRational::one()]; m.rows()]
                    } else {
                        let row: Vec<BigRational> = m.out_edges.iter().map(&weight_of).collect();
                        vec![row; m.rows()]
                    };
                    StackMatrix::new(entries)
                })
                .collect();
            StackMatrix::direct_sum(&blocks)
        })
        .collect()
}

/// The circuit of a Tutte-weighted lattice with `X`/`Y` substituted by
/// `(x0, y0)`.
pub fn lattice_to_circuit(
    weighted: &WeightedLattice,
    x0: &BigRational,
    y0: &BigRational,
) -> Vec<StackMatrix> {
    circuit_with_weights(weighted, |e| {
        match weighted.weight(e).expect("edge is in region") {
            WeightTag::X => x0.clone(),
            WeightTag::Y => y0.clone(),
            WeightTag::One => BigRational::one(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{LatticePoint, LatticeRegion, MonotonePath};
    use crate::weights::tutte_weighting;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn region(lower: &str, upper: &str) -> LatticeRegion {
        LatticeRegion::new(
            MonotonePath::parse(lower).unwrap(),
            MonotonePath::parse(upper).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn sdet_of_one_by_one() {
        let m = StackMatrix::from_i64(&[&[5]]);
        let s = sdet(&m).unwrap();
        assert_eq!(s.row_dim(), 2);
        assert_eq!(s.col_dim(), 2);
        assert_eq!(*s.entry(0b0, 0b0), rat(1));
        assert_eq!(*s.entry(0b1, 0b1), rat(5));
        assert_eq!(*s.entry(0b0, 0b1), rat(0));
        assert_eq!(*s.entry(0b1, 0b0), rat(0));
    }

    #[test]
    fn sdet_of_identity_is_identity() {
        let s = sdet(&StackMatrix::identity(2)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*s.entry(i, j), if i == j { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn sdet_top_minor_is_determinant() {
        let m = StackMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let s = sdet(&m).unwrap();
        assert_eq!(*s.entry(0b11, 0b11), rat(-2));
    }

    #[test]
    fn sdet_guard() {
        let wide = StackMatrix::new(vec![vec![BigRational::one(); 13]]);
        assert_eq!(
            sdet(&wide),
            Err(CircuitError::DimensionTooLarge { rows: 1, cols: 13 })
        );
    }

    #[test]
    fn single_stack_values() {
        let m = StackMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        // Principal minors: 1 (empty) + 1 + 4 + (4 - 6).
        assert_eq!(
            circuit_value_trace(std::slice::from_ref(&m)).unwrap(),
            rat(4)
        );
        assert_eq!(circuit_value_det(&[m]).unwrap(), rat(4));

        let v = StackMatrix::from_i64(&[&[7]]);
        assert_eq!(
            circuit_value_trace(std::slice::from_ref(&v)).unwrap(),
            rat(8)
        );
        assert_eq!(circuit_value_det(&[v]).unwrap(), rat(8));
    }

    #[test]
    fn two_path_example_circuit() {
        let stacks = vec![
            StackMatrix::from_i64(&[&[1, 4]]),
            StackMatrix::from_i64(&[&[2, 0], &[0, 3]]),
            StackMatrix::from_i64(&[&[1], &[1]]),
        ];
        assert_eq!(circuit_value_trace(&stacks).unwrap(), rat(15));
        assert_eq!(circuit_value_det(&stacks).unwrap(), rat(15));
    }

    #[test]
    fn closure_errors() {
        assert_eq!(circuit_value_det(&[]), Err(CircuitError::EmptyCircuit));
        assert_eq!(circuit_value_trace(&[]), Err(CircuitError::EmptyCircuit));

        let open = vec![
            StackMatrix::from_i64(&[&[1, 2]]),
            StackMatrix::from_i64(&[&[1], &[1]]),
            StackMatrix::from_i64(&[&[1], &[1]]),
        ];
        assert!(matches!(
            circuit_value_det(&open),
            Err(CircuitError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn unit_square_lattice_circuit() {
        let w = tutte_weighting(&region("EN", "NE"));
        let stacks = lattice_to_circuit(&w, &rat(1), &rat(1));
        let mut product = stacks[0].clone();
        for s in &stacks[1..] {
            product = product.mul(s).unwrap();
        }
        assert_eq!((product.rows(), product.cols()), (1, 1));
        assert_eq!(*product.get(0, 0), rat(2));
        assert_eq!(circuit_value_det(&stacks).unwrap(), rat(3));
    }

    #[test]
    fn example_circuit_from_custom_weights() {
        // Unit square with explicit weights: left 1, top 2, bottom 4,
        // right 3. Two full paths of weights 2 and 12.
        let w = tutte_weighting(&region("EN", "NE"));
        let origin = LatticePoint::new(0, 0);
        let weight_of = move |e: &LatticeEdge| {
            if *e == LatticeEdge::vertical(origin) {
                rat(1)
            } else if *e == LatticeEdge::horizontal(origin.up()) {
                rat(2)
            } else if *e == LatticeEdge::vertical(origin.right()) {
                rat(3)
            } else {
                rat(4)
            }
        };
        let stacks = circuit_with_weights(&w, weight_of);
        assert_eq!(stacks[0], StackMatrix::from_i64(&[&[1, 4]]));
        assert_eq!(stacks[1], StackMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(stacks[2], StackMatrix::from_i64(&[&[1], &[1]]));
        assert_eq!(circuit_value_det(&stacks).unwrap(), rat(15));
        assert_eq!(circuit_value_trace(&stacks).unwrap(), rat(15));
    }

    #[test]
    fn golden_circuit_stack_shapes() {
        let w = tutte_weighting(&region("ENENNEEN", "NNEENNEE"));
        let stacks = lattice_to_circuit(&w, &rat(2), &rat(3));
        let dims: Vec<(usize, usize)> = stacks.iter().map(|s| (s.rows(), s.cols())).collect();
        assert_eq!(
            dims,
            vec![
                (1, 2),
                (2, 3),
                (3, 3),
                (3, 2),
                (2, 1),
                (1, 2),
                (2, 3),
                (3, 2),
                (2, 1),
            ]
        );
        // Second stack is the direct sum of a 1x2 block and a 1x1 block.
        assert_eq!(
            stacks[1],
            StackMatrix::new(vec![
                vec![rat(2), rat(1), rat(0)],
                vec![rat(0), rat(0), rat(1)],
            ])
        );
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(
            StackMatrix::from_i64(&[&[0, 1], &[1, 0]]).determinant(),
            rat(-1)
        );
        assert_eq!(
            StackMatrix::from_i64(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).determinant(),
            rat(30)
        );
        assert_eq!(
            StackMatrix::from_i64(&[&[1, 2], &[2, 4]]).determinant(),
            rat(0)
        );
    }
}
