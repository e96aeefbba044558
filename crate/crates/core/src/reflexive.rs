//! Newton polytopes, interior points, the reflexivity test and polar duality.
//!
//! A lattice polytope is reflexive when
//!
//! 1. it is the convex hull of the lattice points it contains,
//! 2. it has exactly one interior lattice point `a0`, and
//! 3. its polar with respect to `a0`, `{y : <y, a - a0> >= -1 for all a}`,
//!    has lattice vertices.
//!
//! [`check_reflexive`] evaluates those three conditions literally (the polar
//! vertices come from vertex enumeration of the polar's H-description) and
//! compares the verdict with the facet criterion: after moving `a0` to the
//! origin every primitive facet equation reads `<n, x> >= -1`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::linalg::solve_unique;
use crate::util::combinations;
use crate::lattice::{Face, LatticePolytope, LatticeVector, RationalVector};

/// Reflexive polytope translated so that its interior point is the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReflexivePolytope {
    polytope: LatticePolytope,
    interior_point_original: LatticeVector,
}

impl ReflexivePolytope {
    /// Validates reflexivity and normalizes the interior point to the origin.
    pub fn new(p: &LatticePolytope) -> Result<Self> {
        let report = check_reflexive(p)?;
        if !report.is_reflexive() {
            return Err(Error::NotReflexive(report.failure_reason()));
        }
        let a0 = report.interior_points[0].clone();
        Ok(ReflexivePolytope { polytope: p.translate(&-&a0), interior_point_original: a0 })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        Self::new(&LatticePolytope::from_i64(points)?)
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn into_polytope(self) -> LatticePolytope {
        self.polytope
    }

    /// The interior point before translation.
    pub fn interior_point_original(&self) -> &LatticeVector {
        &self.interior_point_original
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        self.polytope.vertices()
    }

    pub fn ambient_dim(&self) -> usize {
        self.polytope.ambient_dim()
    }

    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        self.polytope.lattice_points()
    }

    pub fn contains(&self, other: &ReflexivePolytope) -> Result<bool> {
        self.polytope.contains(&other.polytope)
    }

    /// `P° = conv{facet normals}`; reflexive again, with `(P°)° = P`.
    pub fn polar(&self) -> ReflexivePolytope {
        let normals: Vec<LatticeVector> = self.polytope.facets().iter().map(|f| f.normal.clone()).collect();
        let polytope = LatticePolytope::convex_hull(&normals).expect("facet normals of a full-dimensional polytope span");
        debug_assert!(polytope.facets().iter().all(|f| f.offset.is_one()));
        ReflexivePolytope { polytope, interior_point_original: LatticeVector::zero(self.ambient_dim()) }
    }
}

/// Convex hull of the exponent vectors of a Laurent polynomial.
pub fn newton_polytope(exponents: &[LatticeVector]) -> Result<LatticePolytope> {
    LatticePolytope::convex_hull(exponents)
}

pub fn interior_lattice_points(p: &LatticePolytope) -> Vec<LatticeVector> {
    p.interior_lattice_points()
}

/// Lattice points in the relative interior of a face of `p`: points on every
/// facet containing the face and strictly inside every other facet.
pub fn face_interior_points(p: &LatticePolytope, face: &Face) -> Vec<LatticeVector> {
    let on: BTreeSet<usize> = face.facets.iter().copied().collect();
    p.lattice_points()
        .into_iter()
        .filter(|x| {
            p.facets().iter().enumerate().all(|(j, f)| {
                let s = f.slack(x);
                if on.contains(&j) {
                    s.is_zero()
                } else {
                    s.is_positive()
                }
            })
        })
        .collect()
}

pub fn polar_polytope(p: &ReflexivePolytope) -> ReflexivePolytope {
    p.polar()
}

/// Condition-by-condition outcome of the reflexivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexivityReport {
    /// Condition (1).
    pub hull_of_lattice_points: bool,
    /// Every interior lattice point; condition (2) asks for exactly one.
    pub interior_points: Vec<LatticeVector>,
    /// Vertices of the polar with respect to the unique interior point, when
    /// condition (2) holds.
    pub polar_vertices: Option<Vec<RationalVector>>,
    /// Whether every facet offset equals 1 after centering, when condition
    /// (2) holds.
    pub facet_offsets_all_one: Option<bool>,
}

impl ReflexivityReport {
    pub fn unique_interior_point(&self) -> bool {
        self.interior_points.len() == 1
    }

    /// Condition (3); `None` when it could not be evaluated.
    pub fn polar_vertices_integral(&self) -> Option<bool> {
        self.polar_vertices.as_ref().map(|vs| vs.iter().all(RationalVector::is_integral))
    }

    pub fn is_reflexive(&self) -> bool {
        self.hull_of_lattice_points && self.unique_interior_point() && self.polar_vertices_integral() == Some(true)
    }

    /// First failed condition (1, 2 or 3).
    pub fn failed_condition(&self) -> Option<u8> {
        if !self.hull_of_lattice_points {
            Some(1)
        } else if !self.unique_interior_point() {
            Some(2)
        } else if self.polar_vertices_integral() != Some(true) {
            Some(3)
        } else {
            None
        }
    }

    pub fn failure_reason(&self) -> String {
        match self.failed_condition() {
            None => "all conditions hold".to_string(),
            Some(1) => "the polytope is not the hull of its lattice points".to_string(),
            Some(2) => format!("{} interior lattice points instead of one", self.interior_points.len()),
            Some(_) => {
                let bad = self
                    .polar_vertices
                    .iter()
                    .flatten()
                    .find(|v| !v.is_integral())
                    .map(|v| v.to_string())
                    .unwrap_or_default();
                format!("polar vertex {bad} is not a lattice point")
            }
        }
    }
}

/// Runs the three reflexivity conditions and cross-checks them against the
/// facet-offset criterion.
pub fn check_reflexive(p: &LatticePolytope) -> Result<ReflexivityReport> {
    let points = p.lattice_points();
    let rehull = LatticePolytope::convex_hull(&points)?;
    let hull_of_lattice_points = rehull.vertices() == p.vertices();

    let interior_points: Vec<LatticeVector> = points.into_iter().filter(|x| p.strictly_contains_point(x)).collect();

    let mut report =
        ReflexivityReport { hull_of_lattice_points, interior_points, polar_vertices: None, facet_offsets_all_one: None };
    if report.unique_interior_point() {
        let a0 = &report.interior_points[0];
        report.polar_vertices = Some(polar_vertices_by_enumeration(p, a0));
        let centered = p.translate(&-a0);
        report.facet_offsets_all_one = Some(centered.facets().iter().all(|f| f.offset.is_one()));
    }

    let conditions = report.is_reflexive();
    let facets = report.facet_offsets_all_one.unwrap_or(false);
    if conditions != facets {
        return Err(Error::CriterionMismatch { conditions, facets });
    }
    Ok(report)
}

pub fn is_reflexive(p: &LatticePolytope) -> Result<bool> {
    Ok(check_reflexive(p)?.is_reflexive())
}

/// Vertices of `{y : <y, a - a0> >= -1 for every vertex a of p}`, found by
/// solving every `d`-subset of constraints at equality and keeping feasible
/// unique solutions. Sorted and deduplicated.
pub fn polar_vertices_by_enumeration(p: &LatticePolytope, a0: &LatticeVector) -> Vec<RationalVector> {
    let d = p.ambient_dim();
    let rows: Vec<Vec<BigRational>> = p
        .vertices()
        .iter()
        .map(|a| (a - a0).coords().iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let minus_one = -BigRational::one();
    let mut found: BTreeSet<RationalVector> = BTreeSet::new();
    for subset in combinations(rows.len(), d) {
        let a: Vec<Vec<BigRational>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let b = vec![minus_one.clone(); d];
        let Some(y) = solve_unique(&a, &b) else { continue };
        let feasible = rows.iter().all(|r| r.iter().zip(&y).map(|(u, v)| u * v).sum::<BigRational>() >= minus_one);
        if feasible {
            found.insert(RationalVector::new(y));
        }
    }
    found.into_iter().collect()
}
