//! Toric extremal transitions between reflexive polytopes, their mirrors,
//! conifold Hodge bookkeeping and transition webs.
//!
//! An inclusion `Q ⊆ P` of reflexive polytopes (same lattice, same interior
//! point) degenerates the family with Newton polytope `P` to the one with
//! Newton polytope `Q`. Polarity reverses the inclusion, `P° ⊆ Q°`, which is
//! the mirror transition.

mod canonical;
mod corpus;
mod web;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodge::hodge_numbers;
use crate::reflexive::ReflexivePolytope;

pub use canonical::{canonical_form, CanonicalKey};
pub use corpus::{reflexive_polygons_in_box, reflexive_subpolytopes};
pub use web::{build_web, TransitionWeb, WebEdge, WebNode};

/// `(h11, h21)`.
pub type HodgePair = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConifoldDelta {
    delta: i64,
    rho: i64,
}

impl ConifoldDelta {
    /// `delta >= 1` nodes, relative Picard number `0 <= rho <= delta`.
    pub fn new(delta: i64, rho: i64) -> Result<Self> {
        if delta < 1 {
            return Err(Error::InvalidDelta(format!("delta = {delta} must be at least 1")));
        }
        if rho < 0 || rho > delta {
            return Err(Error::InvalidDelta(format!("rho = {rho} must lie in [0, delta = {delta}]")));
        }
        Ok(ConifoldDelta { delta, rho })
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn rho(&self) -> i64 {
        self.rho
    }

    /// Number of conditions the nodes impose on complex moduli.
    pub fn sigma(&self) -> i64 {
        self.delta - self.rho
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConifoldResult {
    pub hodge: HodgePair,
    /// `chi(output) - chi(input)` with `chi = 2 (h11 - h21)`.
    pub euler_change: i64,
}

fn euler(h: HodgePair) -> i64 {
    2 * (h.0 - h.1)
}

/// Smoothing side to resolution side: `(h11 + rho, h21 - sigma)`.
pub fn conifold_transition(h: HodgePair, d: ConifoldDelta) -> Result<ConifoldResult> {
    if h.1 < d.sigma() {
        return Err(Error::InvalidDelta(format!("h21 = {} is smaller than sigma = {}", h.1, d.sigma())));
    }
    let out = (h.0 + d.rho(), h.1 - d.sigma());
    Ok(ConifoldResult { hodge: out, euler_change: euler(out) - euler(h) })
}

/// The mirror transition, with the roles of `rho` and `sigma` exchanged:
/// `(h11 + sigma, h21 - rho)`.
pub fn mirror_conifold_transition(h: HodgePair, d: ConifoldDelta) -> Result<ConifoldResult> {
    if h.1 < d.rho() {
        return Err(Error::InvalidDelta(format!("h21 = {} is smaller than rho = {}", h.1, d.rho())));
    }
    let out = (h.0 + d.sigma(), h.1 - d.rho());
    Ok(ConifoldResult { hodge: out, euler_change: euler(out) - euler(h) })
}

/// A verified inclusion `sub ⊆ sup` of reflexive polytopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionEdge {
    pub sub: ReflexivePolytope,
    pub sup: ReflexivePolytope,
    /// `H(sup) - H(sub)` componentwise; `None` outside dimension 4.
    pub hodge_delta: Option<HodgePair>,
    pub mirror_verified: bool,
}

pub fn make_transition(q: &ReflexivePolytope, p: &ReflexivePolytope) -> Result<TransitionEdge> {
    if q.ambient_dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), found: q.ambient_dim() });
    }
    if !p.contains(q)? {
        return Err(Error::NotContained);
    }
    if !q.polar().contains(&p.polar())? {
        return Err(Error::Internal("polar of an inclusion of reflexive polytopes is not reversed".into()));
    }
    let hodge_delta = if p.ambient_dim() == 4 {
        let (hp, hq) = (hodge_numbers(p)?, hodge_numbers(q)?);
        Some((hp.h11 - hq.h11, hp.h21 - hq.h21))
    } else {
        None
    };
    Ok(TransitionEdge { sub: q.clone(), sup: p.clone(), hodge_delta, mirror_verified: true })
}

/// `P° ⊆ Q°` for the edge `Q ⊆ P`. Since `H(X°) = swap H(X)`, the delta
/// becomes `(-dh21, -dh11)`.
pub fn mirror_edge(e: &TransitionEdge) -> TransitionEdge {
    TransitionEdge {
        sub: e.sup.polar(),
        sup: e.sub.polar(),
        hodge_delta: e.hodge_delta.map(|(a, b)| (-b, -a)),
        mirror_verified: e.mirror_verified,
    }
}
