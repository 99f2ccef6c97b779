//! Closed-form generating functions: the edge-cover polynomial of the
//! complete bipartite graph, two summation forms of the rook domination
//! polynomial, and the scalar formulas for totals and boundary coefficients.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::board::BoardDims;
use crate::error::{Error, Result};
use crate::poly::{binomial, factorial, IntPolynomial};

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn one_plus_x() -> IntPolynomial {
    IntPolynomial::from_ints(&[1, 1])
}

/// Edge-cover counts of K_{n,m} as a generating function: the coefficient
/// of `x^k` is the number of ways to choose k squares of an n-by-m board so
/// that every row and every column is occupied.
///
/// Computed as `sum_{k=0}^{m} (-1)^{m-k} C(m,k) ((1+x)^k - 1)^n`. With the
/// `0^0 = 1` convention this evaluates to 1 for the 0x0 board and to 0 when
/// exactly one side is zero.
pub fn edge_cover_poly(dims: BoardDims) -> IntPolynomial {
    let BoardDims { n, m } = dims;
    let step = one_plus_x();
    let mut power = IntPolynomial::one();
    let mut acc = IntPolynomial::zero();
    for k in 0..=m {
        let base = &power - &IntPolynomial::one();
        let weight = sign(m - k) * binomial(m as u64, k as i64);
        acc.add_scaled(&base.pow(n as u32), &weight);
        if k < m {
            power = &power * &step;
        }
    }
    debug_assert!(acc.coeffs().iter().all(|c| !c.is_negative()));
    acc
}

/// The single-sum form of the domination polynomial of the n-by-m rook
/// graph:
///
/// `D(x) = ((1+x)^n - 1)^m - (-1)^m sum_{k=0}^{m-1} (-1)^k C(m,k) ((1+x)^k - 1)^n`
///
/// Running powers of `(1+x)` are carried incrementally across the sum, so
/// each term costs one polynomial power and one scaled accumulation. Empty
/// boards yield the constant 1 (the empty set dominates the empty graph),
/// which is exactly the formula's value under `0^0 = 1`.
pub fn domination_poly_closed(dims: BoardDims) -> IntPolynomial {
    let BoardDims { n, m } = dims;
    let step = one_plus_x();
    let rows = &step.pow(n as u32) - &IntPolynomial::one();
    let mut acc = rows.pow(m as u32);
    let outer = -sign(m);
    let mut power = IntPolynomial::one();
    for k in 0..m {
        let base = &power - &IntPolynomial::one();
        let weight = &outer * sign(k) * binomial(m as u64, k as i64);
        acc.add_scaled(&base.pow(n as u32), &weight);
        if k + 1 < m {
            power = &power * &step;
        }
    }
    debug_assert!(acc.coeffs().iter().all(|c| !c.is_negative()));
    acc
}

/// The manifestly symmetric double-sum form:
///
/// `D(x) = ((1+x)^n - 1)^m + ((1+x)^m - 1)^n
///         - (-1)^{n+m} sum_{l=0}^{n} sum_{k=0}^{m} C(n,l) C(m,k) (-1)^{k+l} (1+x)^{kl}`
///
/// The double sum only ever involves `(1+x)^e` for e = k*l, and distinct
/// products are far scarcer than index pairs, so the weights are gathered
/// per exponent first and the expansion runs once over an incremental power.
pub fn domination_poly_symmetric(dims: BoardDims) -> IntPolynomial {
    let BoardDims { n, m } = dims;
    let step = one_plus_x();
    let rows = &step.pow(n as u32) - &IntPolynomial::one();
    let cols = &step.pow(m as u32) - &IntPolynomial::one();
    let mut acc = &rows.pow(m as u32) + &cols.pow(n as u32);

    let mut weights = vec![BigInt::zero(); n * m + 1];
    for l in 0..=n {
        let row_binom = binomial(n as u64, l as i64);
        for k in 0..=m {
            weights[k * l] += sign(k + l) * &row_binom * binomial(m as u64, k as i64);
        }
    }

    let outer = -sign(n + m);
    let mut power = IntPolynomial::one();
    for (e, w) in weights.iter().enumerate() {
        if !w.is_zero() {
            acc.add_scaled(&power, &(&outer * w));
        }
        if e < n * m {
            power = &power * &step;
        }
    }
    debug_assert!(acc.coeffs().iter().all(|c| !c.is_negative()));
    acc
}

/// Total number of dominating sets, `D(1)`, from the evaluated form
/// `(2^n - 1)^m + (2^m - 1)^n - (-1)^{n+m} sum_{l,k} C(n,l) C(m,k) (-1)^{k+l} 2^{kl}`.
pub fn total_dominating_sets(dims: BoardDims) -> BigInt {
    let BoardDims { n, m } = dims;
    let rows = ((BigInt::one() << n) - 1u8).pow(m as u32);
    let cols = ((BigInt::one() << m) - 1u8).pow(n as u32);
    let mut cross = BigInt::zero();
    for l in 0..=n {
        let row_binom = binomial(n as u64, l as i64);
        for k in 0..=m {
            cross += sign(k + l)
                * &row_binom
                * binomial(m as u64, k as i64)
                * (BigInt::one() << (k * l));
        }
    }
    rows + cols - sign(n + m) * cross
}

/// Domination number of the n-by-m rook graph, `min(n, m)`: one rook per
/// short-side line is necessary and sufficient.
pub fn gamma(dims: BoardDims) -> Result<usize> {
    if dims.is_empty() {
        return Err(Error::EmptyBoard);
    }
    Ok(dims.min_side())
}

/// Number of minimum dominating sets, i.e. the coefficient of `x^{gamma}`:
/// `max(n,m)^{min(n,m)}` for rectangular boards, `2 n^n - n!` for square ones.
pub fn lowest_coefficient(dims: BoardDims) -> Result<BigInt> {
    if dims.is_empty() {
        return Err(Error::EmptyBoard);
    }
    let lo = dims.min_side() as u32;
    let hi = dims.max_side();
    Ok(if dims.n == dims.m {
        BigInt::from(2) * BigInt::from(hi).pow(lo) - factorial(lo as u64)
    } else {
        BigInt::from(hi).pow(lo)
    })
}
