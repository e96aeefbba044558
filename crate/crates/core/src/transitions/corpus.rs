//! Bounded generators of reflexive polytopes.

use std::collections::BTreeSet;

use crate::lattice::{LatticePolytope, LatticeVector};
use crate::reflexive::ReflexivePolytope;
use crate::util::combinations;

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Points in convex position, listed counterclockwise, or `None`.
fn convex_cycle(pts: &[(i64, i64)]) -> Option<Vec<(i64, i64)>> {
    let mut sorted = pts.to_vec();
    sorted.sort_unstable();
    // Monotone chain keeping only strict turns.
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> =
            if pass == 0 { Box::new(sorted.iter()) } else { Box::new(sorted.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    (hull.len() == pts.len()).then_some(hull)
}

/// Interior lattice points of a counterclockwise convex polygon.
fn interior_points(cycle: &[(i64, i64)], bound: i64) -> Vec<(i64, i64)> {
    let n = cycle.len();
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if (0..n).all(|i| cross(cycle[i], cycle[(i + 1) % n], (x, y)) > 0) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Every reflexive polygon whose vertices lie in `[-bound, bound]^2` and
/// whose interior point is the origin, sorted by vertex list.
pub fn reflexive_polygons_in_box(bound: i64) -> Vec<ReflexivePolytope> {
    let pts: Vec<(i64, i64)> =
        (-bound..=bound).flat_map(|x| (-bound..=bound).map(move |y| (x, y))).filter(|&p| p != (0, 0)).collect();
    let mut found = BTreeSet::new();
    // Reflexive polygons have at most six vertices.
    for k in 3..=6.min(pts.len()) {
        for subset in combinations(pts.len(), k) {
            let chosen: Vec<(i64, i64)> = subset.iter().map(|&i| pts[i]).collect();
            let Some(cycle) = convex_cycle(&chosen) else { continue };
            if interior_points(&cycle, bound) != [(0, 0)] {
                continue;
            }
            let vs: Vec<LatticeVector> = chosen.iter().map(|&(x, y)| LatticeVector::from_i64(&[x, y])).collect();
            let poly = LatticePolytope::convex_hull(&vs).expect("full-dimensional by construction");
            if let Ok(r) = ReflexivePolytope::new(&poly) {
                found.insert(r.vertices().to_vec());
            }
        }
    }
    found
        .into_iter()
        .map(|vs| ReflexivePolytope::new(&LatticePolytope::convex_hull(&vs).expect("checked above")).expect("checked above"))
        .collect()
}

/// Reflexive polytopes obtained from `p` by deleting between 1 and
/// `max_drop` vertices and taking the hull of the remaining lattice points.
/// Only results that keep the origin as interior point are returned; the
/// output is deduplicated and sorted by vertex list.
pub fn reflexive_subpolytopes(p: &ReflexivePolytope, max_drop: usize) -> Vec<ReflexivePolytope> {
    let points = p.lattice_points();
    let vertices = p.vertices();
    let mut found = BTreeSet::new();
    for k in 1..=max_drop.min(vertices.len()) {
        for drop in combinations(vertices.len(), k) {
            let keep: Vec<LatticeVector> =
                points.iter().filter(|x| !drop.iter().any(|&i| &vertices[i] == *x)).cloned().collect();
            let Ok(q) = LatticePolytope::convex_hull(&keep) else { continue };
            if let Ok(r) = ReflexivePolytope::new(&q) {
                if r.interior_point_original().is_zero() {
                    found.insert(r.vertices().to_vec());
                }
            }
        }
    }
    found
        .into_iter()
        .map(|vs| ReflexivePolytope::new(&LatticePolytope::convex_hull(&vs).expect("checked above")).expect("checked above"))
        .collect()
}
