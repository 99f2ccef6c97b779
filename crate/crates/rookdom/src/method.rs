//! Uniform dispatch over the four computation routes, with timing.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::board::BoardDims;
use crate::closed::{domination_poly_closed, domination_poly_symmetric};
use crate::error::Result;
use crate::oracle::brute_force_domination;
use crate::poly::IntPolynomial;
use crate::recursion::domination_poly_recursive;

/// The four independent routes to the domination polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Single-sum closed form.
    Closed,
    /// Symmetric double-sum closed form.
    Symmetric,
    /// Inclusion-exclusion recursion through edge covers.
    Recursive,
    /// Exhaustive bitboard enumeration (small boards only).
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Closed,
        Method::Symmetric,
        Method::Recursive,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Symmetric => "symmetric",
            Method::Recursive => "recursive",
            Method::Oracle => "oracle",
        }
    }

    pub fn compute(self, dims: BoardDims) -> Result<IntPolynomial> {
        match self {
            Method::Closed => Ok(domination_poly_closed(dims)),
            Method::Symmetric => Ok(domination_poly_symmetric(dims)),
            Method::Recursive => domination_poly_recursive(dims),
            Method::Oracle => Ok(brute_force_domination(dims)?.to_polynomial()),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown method {0:?}; expected closed, symmetric, recursive, or oracle")]
pub struct ParseMethodError(String);

impl FromStr for Method {
    type Err = ParseMethodError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "closed" => Ok(Method::Closed),
            "symmetric" => Ok(Method::Symmetric),
            "recursive" => Ok(Method::Recursive),
            "oracle" => Ok(Method::Oracle),
            other => Err(ParseMethodError(other.to_string())),
        }
    }
}

/// One timed computation of a domination polynomial.
#[derive(Debug, Clone)]
pub struct MethodReport {
    pub method: Method,
    pub dims: BoardDims,
    pub poly: IntPolynomial,
    pub elapsed: Duration,
}

impl MethodReport {
    pub fn run(method: Method, dims: BoardDims) -> Result<Self> {
        let start = Instant::now();
        let poly = method.compute(dims)?;
        // clamp so downstream code can rely on a strictly positive duration
        let elapsed = start.elapsed().max(Duration::from_nanos(1));
        Ok(Self {
            method,
            dims,
            poly,
            elapsed,
        })
    }
}
