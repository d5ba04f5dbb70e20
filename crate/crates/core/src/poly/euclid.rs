//! Euclidean division in the polynomial 2-ring over a 1-field: given
//! `a` and `b ≠ 0`, find `q, r` with `a ∈ q·b + r` and `deg r < deg b`
//! (sequence-degree convention) or `r = 0`.
//!
//! Quotient-remainder pairs are far from unique here, so the witness is
//! pinned deterministically: the direct constructions below for the easy
//! shapes, otherwise the first valid pair in lexicographic order over
//! padded coefficient vectors (quotient major, index 0 most significant).

use super::{
    enumerate_padded, poly_mul_set, polyset_add_poly, MultiPoly, PolySet,
};
use crate::error::DivisionError;
use crate::structure::FiniteMultiring;
use serde::Serialize;

/// A verified division result: `a ∈ quotient·b + remainder`, with the
/// combined cells retained as the membership certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionWitness {
    pub quotient: MultiPoly,
    pub remainder: MultiPoly,
    /// The cells of `quotient·b + remainder`, the Cartesian product whose
    /// membership certifies the division.
    pub certificate: PolySet,
}

impl DivisionWitness {
    /// Recomputes the certificate and revalidates membership and the
    /// degree bound.
    pub fn replay(&self, s: &FiniteMultiring, a: &MultiPoly, b: &MultiPoly) -> bool {
        let cells = polyset_add_poly(s, &poly_mul_set(s, &self.quotient, b), &self.remainder);
        cells == self.certificate
            && cells.contains_poly(s, a)
            && (self.remainder.is_zero() || self.remainder.paper_deg() < b.paper_deg())
    }
}

fn witness(
    s: &FiniteMultiring,
    q: MultiPoly,
    r: MultiPoly,
    b: &MultiPoly,
) -> DivisionWitness {
    let certificate = polyset_add_poly(s, &poly_mul_set(s, &q, b), &r);
    DivisionWitness { quotient: q, remainder: r, certificate }
}

/// Division with remainder over a structure with strict multiplication
/// and invertible nonzero elements.
pub fn euclid_divide(
    s: &FiniteMultiring,
    a: &MultiPoly,
    b: &MultiPoly,
) -> Result<DivisionWitness, DivisionError> {
    if b.is_zero() {
        return Err(DivisionError::ZeroDivisor);
    }
    if !s.mul_strict() {
        return Err(DivisionError::NonStrictMul);
    }

    // deg a < deg b: q = 0, r = a.
    if a.paper_deg() < b.paper_deg() {
        return Ok(witness(s, MultiPoly::zero(), a.clone(), b));
    }

    // b of degree 1 (a nonzero constant): scale every coefficient of a
    // by b0^-1; the product cells are then exactly the coefficients of a.
    if b.paper_deg() == 1 {
        let b0 = b.coeff(s, 0);
        let inv = s.inverse(b0).ok_or(DivisionError::NoInverse(b0))?;
        let q = MultiPoly::from_coeffs(
            s,
            a.coeffs().iter().map(|&c| s.mul_elem(c, inv)).collect(),
        );
        return Ok(witness(s, q, MultiPoly::zero(), b));
    }

    // Bounded search: deg q <= deg a, deg r < deg b. The containment is
    // rechecked cellwise for each candidate; the first hit in the padded
    // lexicographic order is returned.
    let qmax = a.paper_deg();
    let rbound = b.paper_deg() - 1;
    for q in enumerate_padded(s, qmax) {
        let qb = poly_mul_set(s, &q, b);
        for r in enumerate_padded(s, rbound) {
            let cells = polyset_add_poly(s, &qb, &r);
            if cells.contains_poly(s, a) {
                return Ok(DivisionWitness { quotient: q, remainder: r, certificate: cells });
            }
        }
    }
    Err(DivisionError::NoWitness { qmax, rbound })
}
