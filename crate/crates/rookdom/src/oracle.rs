//! Definition-level brute force on small boards: enumerate all 2^(nm)
//! square subsets with bitboards and count the ones that dominate (or that
//! occupy every line). Deliberately naive; its answers are the ground truth
//! the formulas are validated against.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::board::BoardDims;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Largest number of squares the exhaustive oracle will enumerate.
/// 2^24 subsets is around a second of work; beyond that the oracle refuses.
pub const ORACLE_SQUARES_CAP: usize = 24;

/// Bitboard view of an n-by-m board: square (x, y) is bit `x*m + y`.
#[derive(Debug, Clone)]
pub struct RookBoard {
    dims: BoardDims,
    /// Bit j set iff square j shares a row or column with square i (j != i).
    neighbor_masks: Vec<u32>,
    /// `neighbor_masks[i]` with bit i added: everything square i dominates.
    closed_masks: Vec<u32>,
    row_masks: Vec<u32>,
    col_masks: Vec<u32>,
    full_mask: u32,
}

impl RookBoard {
    pub fn new(dims: BoardDims) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyBoard);
        }
        let squares = dims.squares();
        if squares > ORACLE_SQUARES_CAP {
            return Err(Error::CapacityExceeded {
                squares,
                cap: ORACLE_SQUARES_CAP,
            });
        }
        let BoardDims { n, m } = dims;
        let row_masks: Vec<u32> = (0..n)
            .map(|x| (0..m).fold(0, |acc, y| acc | 1 << (x * m + y)))
            .collect();
        let col_masks: Vec<u32> = (0..m)
            .map(|y| (0..n).fold(0, |acc, x| acc | 1 << (x * m + y)))
            .collect();
        let closed_masks: Vec<u32> = (0..squares)
            .map(|i| row_masks[i / m] | col_masks[i % m])
            .collect();
        let neighbor_masks = closed_masks
            .iter()
            .enumerate()
            .map(|(i, &mask)| mask & !(1 << i))
            .collect();
        Ok(Self {
            dims,
            neighbor_masks,
            closed_masks,
            row_masks,
            col_masks,
            full_mask: (1u32 << squares) - 1,
        })
    }

    pub fn dims(&self) -> BoardDims {
        self.dims
    }

    pub fn neighbor_mask(&self, square: usize) -> u32 {
        self.neighbor_masks[square]
    }

    /// True iff every square is in `subset` or shares a line with a member.
    pub fn is_dominating(&self, subset: u32) -> bool {
        let mut covered = 0u32;
        let mut rest = subset;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            covered |= self.closed_masks[i];
            if covered == self.full_mask {
                return true;
            }
            rest &= rest - 1;
        }
        covered == self.full_mask
    }

    /// True iff `subset` has a square in every row and every column.
    pub fn covers_all_lines(&self, subset: u32) -> bool {
        self.row_masks.iter().all(|&r| subset & r != 0)
            && self.col_masks.iter().all(|&c| subset & c != 0)
    }
}

/// Counts indexed by subset size k = 0..=nm, the raw view of a polynomial
/// whose trailing zero counts are still meaningful positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    counts: Vec<BigInt>,
}

impl CoeffTable {
    pub fn new(counts: Vec<BigInt>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn count(&self, k: usize) -> BigInt {
        self.counts.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.counts.clone())
    }

    /// Lossless inverse of `to_polynomial` given the table length, `nm + 1`.
    pub fn from_polynomial(poly: &IntPolynomial, len: usize) -> Self {
        assert!(poly.coeffs().len() <= len, "polynomial longer than table");
        let mut counts = poly.coeffs().to_vec();
        counts.resize_with(len, BigInt::zero);
        Self { counts }
    }

    fn from_u64(counts: Vec<u64>) -> Self {
        Self {
            counts: counts.into_iter().map(BigInt::from).collect(),
        }
    }
}

fn enumerate(dims: BoardDims, keep: impl Fn(&RookBoard, u32) -> bool) -> Result<CoeffTable> {
    let board = RookBoard::new(dims)?;
    let squares = dims.squares();
    // Counts are bounded by C(24,12) < 2^23, far inside u64.
    let mut counts = vec![0u64; squares + 1];
    for subset in 0..1u64 << squares {
        let subset = subset as u32;
        if keep(&board, subset) {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(CoeffTable::from_u64(counts))
}

/// `counts[k]` = number of k-subsets of squares dominating the whole board.
pub fn brute_force_domination(dims: BoardDims) -> Result<CoeffTable> {
    enumerate(dims, RookBoard::is_dominating)
}

/// `counts[k]` = number of k-subsets occupying every row and every column,
/// i.e. the edge covers of K_{n,m} with squares read as edges.
pub fn brute_force_edge_cover(dims: BoardDims) -> Result<CoeffTable> {
    enumerate(dims, RookBoard::covers_all_lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(n: usize, m: usize) -> BoardDims {
        BoardDims::new(n, m)
    }

    fn counts(table: &CoeffTable) -> Vec<i64> {
        table
            .counts()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn board_masks() {
        let board = RookBoard::new(dims(2, 2)).unwrap();
        assert_eq!(board.full_mask, 0b1111);
        // square 0 = (0,0) attacks (0,1) = bit 1 and (1,0) = bit 2
        assert_eq!(board.neighbor_mask(0), 0b0110);
        for i in 0..4 {
            assert_eq!(board.neighbor_mask(i).count_ones(), 2);
            for j in 0..4 {
                assert_eq!(
                    board.neighbor_mask(i) >> j & 1,
                    board.neighbor_mask(j) >> i & 1,
                    "adjacency not symmetric at ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn is_dominating_examples() {
        let board = RookBoard::new(dims(2, 2)).unwrap();
        // one corner rook leaves the opposite corner unattacked
        assert!(!board.is_dominating(0b0001));
        // both diagonal corners cover everything
        assert!(board.is_dominating(0b1001));
        assert!(board.is_dominating(0b1111));
        assert!(!board.is_dominating(0));
    }

    #[test]
    fn domination_counts_small_boards() {
        assert_eq!(
            counts(&brute_force_domination(dims(2, 2)).unwrap()),
            vec![0, 0, 6, 4, 1]
        );
        assert_eq!(
            counts(&brute_force_domination(dims(1, 2)).unwrap()),
            vec![0, 2, 1]
        );
        assert_eq!(
            counts(&brute_force_domination(dims(1, 1)).unwrap()),
            vec![0, 1]
        );
    }

    #[test]
    fn edge_cover_counts_small_boards() {
        assert_eq!(
            counts(&brute_force_edge_cover(dims(2, 2)).unwrap()),
            vec![0, 0, 2, 4, 1]
        );
        assert_eq!(
            counts(&brute_force_edge_cover(dims(1, 3)).unwrap()),
            vec![0, 0, 0, 1]
        );
        // 2x3 covers with 3 squares: one per column, 2^3 row choices minus
        // the two single-row ones = 6
        let table = brute_force_edge_cover(dims(2, 3)).unwrap();
        assert_eq!(table.count(2), BigInt::zero());
        assert_eq!(table.count(3), BigInt::from(6));
        assert_eq!(table.count(4), BigInt::from(12));
    }

    #[test]
    fn rejects_oversized_and_empty_boards() {
        assert_eq!(
            brute_force_domination(dims(5, 5)),
            Err(Error::CapacityExceeded {
                squares: 25,
                cap: ORACLE_SQUARES_CAP
            })
        );
        assert_eq!(brute_force_domination(dims(0, 3)), Err(Error::EmptyBoard));
        assert_eq!(brute_force_edge_cover(dims(0, 0)), Err(Error::EmptyBoard));
    }

    #[test]
    fn coeff_table_roundtrips_through_polynomial() {
        let table = brute_force_domination(dims(2, 2)).unwrap();
        let poly = table.to_polynomial();
        assert_eq!(CoeffTable::from_polynomial(&poly, 5), table);
        // trailing zero counts survive the round trip via the length
        let padded = CoeffTable::new(vec![BigInt::from(1), BigInt::zero()]);
        assert_eq!(
            CoeffTable::from_polynomial(&padded.to_polynomial(), 2),
            padded
        );
    }
}
