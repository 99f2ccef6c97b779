//! The inclusion-exclusion route: a recursion over sub-boards for the
//! edge-cover counts of K_{n,m}, the reduction of rook domination counts to
//! those, and the two-term shortcut for near-full boards.
//!
//! This path shares nothing with the closed forms beyond raw polynomial
//! arithmetic, which is what makes agreement between the two a meaningful
//! cross-check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::board::BoardDims;
use crate::error::{Error, Result};
use crate::poly::{binomial, binomial_row, IntPolynomial};

/// Memo table of edge-cover polynomials keyed by board dimensions.
///
/// Entries are never mutated once stored. The recursion fills the whole
/// `(n+1) x (m+1)` grid bottom-up, since every sub-board is needed anyway;
/// each entry is stored at its natural length and zero-extended on use.
#[derive(Debug, Default)]
pub struct EdgeCoverMemo {
    table: HashMap<(usize, usize), IntPolynomial>,
}

impl EdgeCoverMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, dims: BoardDims) -> Option<&IntPolynomial> {
        self.table.get(&(dims.n, dims.m))
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

fn edge_cover_entry(
    n: usize,
    m: usize,
    table: &HashMap<(usize, usize), IntPolynomial>,
) -> IntPolynomial {
    // The empty edge set covers the empty graph; a board with rows but no
    // columns (or vice versa) cannot be covered at all.
    if n == 0 && m == 0 {
        return IntPolynomial::one();
    }
    if n == 0 || m == 0 {
        return IntPolynomial::zero();
    }
    // E_{n,m}(k) = C(nm,k) - sum_{r,c not both 0} C(n,r) C(m,c) E_{n-r,m-c}(k):
    // every k-subset either covers all lines or leaves some r rows and c
    // columns untouched while covering the rest of the sub-board.
    let mut acc = IntPolynomial::from_coeffs(binomial_row((n * m) as u64));
    for r in 0..=n {
        for c in 0..=m {
            if r == 0 && c == 0 {
                continue;
            }
            let sub = &table[&(n - r, m - c)];
            if sub.is_zero() {
                continue;
            }
            let weight = -(binomial(n as u64, r as i64) * binomial(m as u64, c as i64));
            acc.add_scaled(sub, &weight);
        }
    }
    acc
}

/// Edge-cover polynomial of K_{n,m} by recursion over sub-boards; agrees
/// exactly with the closed-form `edge_cover_poly` on every input. Populates
/// `memo` for all dimensions up to `dims` component-wise.
pub fn edge_cover_poly_recursive(dims: BoardDims, memo: &mut EdgeCoverMemo) -> IntPolynomial {
    for a in 0..=dims.n {
        for b in 0..=dims.m {
            if !memo.table.contains_key(&(a, b)) {
                let entry = edge_cover_entry(a, b, &memo.table);
                memo.table.insert((a, b), entry);
            }
        }
    }
    memo.table[&(dims.n, dims.m)].clone()
}

/// Domination polynomial of the n-by-m rook graph via
///
/// `d(k) = C(nm,k) - sum_{r=1}^{n} sum_{c=1}^{m} C(n,r) C(m,c) E_{n-r,m-c}(k)`:
///
/// a subset fails to dominate exactly when some r >= 1 rows and c >= 1
/// columns are completely rook-free while the remaining sub-board has every
/// line occupied. Rejects empty boards, whose counting argument this is not.
pub fn domination_poly_recursive(dims: BoardDims) -> Result<IntPolynomial> {
    if dims.is_empty() {
        return Err(Error::EmptyBoard);
    }
    let BoardDims { n, m } = dims;
    let mut memo = EdgeCoverMemo::new();
    edge_cover_poly_recursive(BoardDims::new(n - 1, m - 1), &mut memo);

    let mut acc = IntPolynomial::from_coeffs(binomial_row((n * m) as u64));
    for r in 1..=n {
        for c in 1..=m {
            let sub = &memo.table[&(n - r, m - c)];
            if sub.is_zero() {
                continue;
            }
            let weight = -(binomial(n as u64, r as i64) * binomial(m as u64, c as i64));
            acc.add_scaled(sub, &weight);
        }
    }
    debug_assert!(acc.coeffs().iter().all(|c| !c.is_negative()));
    Ok(acc)
}

/// Exact `d(k)` when the board is so crowded that at most one square can be
/// left unattacked: `C(nm,k) - nm * C((n-1)(m-1), k)`, every non-dominating
/// placement being "one empty square plus k rooks avoiding its lines".
/// Valid only for `k > nm - n - m - min(n,m) + 2`; smaller k are refused
/// because the two-term formula is not claimed there.
pub fn high_density_coefficient(dims: BoardDims, k: usize) -> Result<BigInt> {
    if dims.is_empty() {
        return Err(Error::EmptyBoard);
    }
    let BoardDims { n, m } = dims;
    // Equals nm - n - m - min(n,m) + 2; never underflows since
    // (lo-1)(hi-1) + 1 >= lo reduces to (lo-1)(lo-2) >= 0.
    let threshold = (n - 1) * (m - 1) + 1 - dims.min_side();
    if k <= threshold {
        return Err(Error::OutsideHighDensityRange { k, threshold });
    }
    let nm = (n * m) as u64;
    Ok(binomial(nm, k as i64)
        - BigInt::from(n * m) * binomial(((n - 1) * (m - 1)) as u64, k as i64))
}
