//! Deterministic renderings of polynomials and sequence output.
//!
//! Everything here is pure string building; identical inputs must produce
//! byte-identical output, since the integration tests diff raw stdout.

use num_bigint::BigInt;
use rookdom::IntPolynomial;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Coefficients 0..len as decimal strings, zero-padded beyond the degree.
/// JSON carries big integers as strings so no consumer is tempted to read
/// them through a 53-bit float.
pub fn padded_coeffs(poly: &IntPolynomial, len: usize) -> Vec<String> {
    (0..len).map(|k| poly.coeff(k).to_string()).collect()
}

#[derive(Serialize)]
pub struct PolyJson<'a> {
    pub n: usize,
    pub m: usize,
    pub method: &'a str,
    pub coeffs: Vec<String>,
}

pub fn poly_csv(poly: &IntPolynomial, len: usize) -> String {
    let mut out = String::from("k,count\n");
    for (k, c) in padded_coeffs(poly, len).iter().enumerate() {
        out.push_str(&format!("{k},{c}\n"));
    }
    out
}

/// One triangle row: the coefficients from the first nonzero one upward.
pub fn triangle_row(poly: &IntPolynomial, low: usize, high: usize) -> Vec<String> {
    (low..=high).map(|k| poly.coeff(k).to_string()).collect()
}

#[derive(Serialize)]
pub struct TriangleJson<'a> {
    pub id: &'a str,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct TermsJson<'a> {
    pub id: &'a str,
    pub terms: Vec<String>,
}

/// Canonical digest of a coefficient table: sha256 over the decimal
/// coefficients 0..len joined by commas.
pub fn coeff_digest(poly: &IntPolynomial, len: usize) -> String {
    let canonical = padded_coeffs(poly, len).join(",");
    let digest = Sha256::digest(canonical.as_bytes());
    let mut out = String::with_capacity(2 * digest.len());
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// First k where the tables differ, with every method's value there.
pub fn first_difference(polys: &[(&str, &IntPolynomial)], len: usize) -> Option<(usize, String)> {
    let (_, reference) = polys[0];
    for k in 0..len {
        let want: BigInt = reference.coeff(k);
        if polys.iter().any(|(_, p)| p.coeff(k) != want) {
            let detail = polys
                .iter()
                .map(|(name, p)| format!("{name}={}", p.coeff(k)))
                .collect::<Vec<_>>()
                .join(" ");
            return Some((k, detail));
        }
    }
    None
}
