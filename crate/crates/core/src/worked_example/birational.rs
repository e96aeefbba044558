//! The rational map from the octic to a complete intersection in `P^5`,
//! checked as exact polynomial identities.
//!
//! Radicals are ring symbols: `r1 = sqrt(c1)`, `r2 = sqrt(c2)` and
//! `s = sqrt(x3 x4 x5)`. Rewriting from the greatest variable down, the
//! rules are `c6 -> 2 r1 r2`, `r1^2 -> c1`, `r2^2 -> c2`, `s^2 -> x3 x4 x5`.

use std::sync::Arc;

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{poly_identity_check, IdentityCheck, Poly, PolyRing};
use crate::error::Result;

/// Variable order; earlier is greater.
pub const VARIABLES: [&str; 15] =
    ["c6", "r1", "r2", "s", "c0", "c1", "c2", "c3", "c4", "c5", "x1", "x2", "x3", "x4", "x5"];

/// A single corrupted relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelationFault {
    /// `2 r1 r2 = c6 + 1`.
    ShiftC6,
    /// `r1^2 = 2 c1`.
    ScaleC1,
    /// `s^2 = x3 x4`.
    TruncateS,
}

pub fn birational_ring(fault: Option<RelationFault>) -> Result<Arc<PolyRing>> {
    let f = PolyRing::free(&VARIABLES);
    let v = |n: &str| f.var(n);
    let two_r1r2 = (&v("r1") * &v("r2")).scale(&BigRational::from_integer(2.into()));
    let c6_rhs = if fault == Some(RelationFault::ShiftC6) { &two_r1r2 - &f.int(1) } else { two_r1r2 };
    let c1_rhs = if fault == Some(RelationFault::ScaleC1) { v("c1").scale(&BigRational::from_integer(2.into())) } else { v("c1") };
    let x34 = &v("x3") * &v("x4");
    let s_rhs = if fault == Some(RelationFault::TruncateS) { x34 } else { &x34 * &v("x5") };
    f.with_relations(&[
        (v("c6"), c6_rhs),
        (v("r1").pow(2), c1_rhs),
        (v("r2").pow(2), v("c2")),
        (v("s").pow(2), s_rhs),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirationalReport {
    /// `r1 y1^4 + r2 y2^4 - y0 y3 y4 y5 = 0`.
    pub first: IdentityCheck,
    /// `y0^2 + c0 y1 y2 + c3 y3^2 + c4 y4^2 + c5 y5^2` against the octic.
    pub second: IdentityCheck,
    /// Normal form of the octic.
    pub octic: Poly,
}

impl BirationalReport {
    pub fn holds(&self) -> bool {
        self.first.holds && self.second.holds
    }
}

pub fn verify_birational_map(fault: Option<RelationFault>) -> Result<BirationalReport> {
    let ring = birational_ring(fault)?;
    let v = |n: &str| ring.var(n);
    let (x1, x2, x3, x4, x5) = (v("x1"), v("x2"), v("x3"), v("x4"), v("x5"));
    let y0 = &(&v("r1") * &x1.pow(4)) + &(&v("r2") * &x2.pow(4));
    let y1 = &x1 * &v("s");
    let y2 = &x2 * &v("s");
    let (y3, y4, y5) = (x3.pow(2), x4.pow(2), x5.pow(2));

    let first_lhs = &(&v("r1") * &y1.pow(4)) + &(&v("r2") * &y2.pow(4));
    let first_rhs = &(&(&y0 * &y3) * &y4) * &y5;
    let first = poly_identity_check(&first_lhs, &first_rhs)?;

    let second_lhs = [
        y0.pow(2),
        &(&v("c0") * &y1) * &y2,
        &v("c3") * &y3.pow(2),
        &v("c4") * &y4.pow(2),
        &v("c5") * &y5.pow(2),
    ]
    .iter()
    .fold(ring.zero(), |acc, t| &acc + t);
    let octic = [
        &(&(&(&v("c0") * &x1) * &x2) * &(&x3 * &x4)) * &x5,
        &v("c1") * &x1.pow(8),
        &v("c2") * &x2.pow(8),
        &v("c3") * &x3.pow(4),
        &v("c4") * &x4.pow(4),
        &v("c5") * &x5.pow(4),
        &(&v("c6") * &x1.pow(4)) * &x2.pow(4),
    ]
    .iter()
    .fold(ring.zero(), |acc, t| &acc + t);
    let second = poly_identity_check(&second_lhs, &octic)?;
    Ok(BirationalReport { first, second, octic })
}
