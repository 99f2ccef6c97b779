//! Exact domination polynomials of rook graphs.
//!
//! The rook graph of an n-by-m board has one vertex per square, two squares
//! adjacent when they share a row or column. The coefficient of `x^k` in the
//! domination polynomial counts the k-subsets of squares such that every
//! square either holds a rook or is attacked by one.
//!
//! Four independent computations of the same polynomial are provided:
//!
//! * [`closed::domination_poly_closed`], a single-sum closed form;
//! * [`closed::domination_poly_symmetric`], a double-sum form that is
//!   manifestly symmetric in n and m;
//! * [`recursion::domination_poly_recursive`], inclusion-exclusion through
//!   edge covers of complete bipartite graphs;
//! * [`oracle::brute_force_domination`], exhaustive bitboard enumeration on
//!   small boards.
//!
//! They share only the polynomial arithmetic in [`poly`], so their agreement
//! is a strong correctness check. All arithmetic is exact; coefficients are
//! arbitrary-precision integers throughout.

pub mod board;
pub mod closed;
pub mod error;
pub mod method;
pub mod oracle;
pub mod poly;
pub mod recursion;

pub use board::BoardDims;
pub use error::{Error, Result};
pub use method::{Method, MethodReport};
pub use poly::IntPolynomial;
