//! Incremental (beneath-beyond) convex hull over the integers.
//!
//! The boundary is kept as a list of oriented simplices. Inserting a point
//! deletes every simplex whose hyperplane strictly separates it from the
//! hull, and cones the horizon ridges to the new point. Simplices whose
//! hyperplane merely contains the point stay, so coplanar input needs no
//! special casing. At the end simplices are grouped by hyperplane into
//! facets.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{affine_rank, hyperplane_normal, rank};
use super::{Facet, LatticeVector, MAX_AMBIENT_DIM};
use crate::error::{Error, Result};

struct Simplex {
    verts: Vec<usize>,
    normal: LatticeVector,
    offset: BigInt,
}

impl Simplex {
    /// `<n, p> + offset`; negative means `p` is beyond this simplex.
    fn eval(&self, p: &LatticeVector) -> BigInt {
        self.normal.dot(p) + &self.offset
    }
}

pub(crate) struct HullOutput {
    pub vertices: Vec<LatticeVector>,
    pub facets: Vec<Facet>,
}

pub(crate) fn convex_hull(points: &[LatticeVector]) -> Result<HullOutput> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
    }
    if d > MAX_AMBIENT_DIM {
        return Err(Error::UnsupportedDimension(d));
    }

    let mut pts: Vec<LatticeVector> = points.to_vec();
    pts.sort();
    pts.dedup();

    let seed = initial_simplex(&pts, d)?;

    // Interior reference point scaled by d+1 to stay integral.
    let mut reference = LatticeVector::zero(d);
    for &i in &seed {
        reference = &reference + &pts[i];
    }
    let scale = BigInt::from(d + 1);

    let orient = |verts: Vec<usize>, pts: &[LatticeVector]| -> Simplex {
        let refs: Vec<&LatticeVector> = verts.iter().map(|&i| &pts[i]).collect();
        let mut normal = LatticeVector::new(hyperplane_normal(&refs)).primitive();
        debug_assert!(!normal.is_zero());
        let mut offset = -normal.dot(refs[0]);
        if (normal.dot(&reference) + &offset * &scale).is_negative() {
            normal = -&normal;
            offset = -offset;
        }
        Simplex { verts, normal, offset }
    };

    let mut simplices: Vec<Simplex> = (0..seed.len())
        .map(|skip| {
            let verts: Vec<usize> = seed.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
            orient(verts, &pts)
        })
        .collect();

    for idx in 0..pts.len() {
        if seed.contains(&idx) {
            continue;
        }
        let p = &pts[idx];
        let (visible, kept): (Vec<Simplex>, Vec<Simplex>) =
            simplices.into_iter().partition(|s| s.eval(p).is_negative());
        simplices = kept;
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for s in &visible {
            for skip in 0..s.verts.len() {
                let ridge: Vec<usize> =
                    s.verts.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
                *ridges.entry(ridge).or_default() += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridges.into_iter().filter(|&(_, c)| c == 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(idx);
            ridge.sort_unstable();
            simplices.push(orient(ridge, &pts));
        }
    }

    // Group simplices by supporting hyperplane.
    let mut planes: BTreeMap<(LatticeVector, BigInt), ()> = BTreeMap::new();
    let mut candidates: Vec<usize> = Vec::new();
    for s in &simplices {
        planes.insert((s.normal.clone(), s.offset.clone()), ());
        candidates.extend_from_slice(&s.verts);
    }
    candidates.sort_unstable();
    candidates.dedup();

    let facets: Vec<Facet> = planes.into_keys().map(|(normal, offset)| Facet { normal, offset }).collect();

    // A point is a vertex iff the normals of the facets through it span.
    let vertices: Vec<LatticeVector> = candidates
        .into_iter()
        .map(|i| &pts[i])
        .filter(|p| {
            let tight: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|f| f.slack(p).is_zero())
                .map(|f| f.normal.coords().to_vec())
                .collect();
            tight.len() >= d && rank(&tight) == d
        })
        .cloned()
        .collect();

    Ok(HullOutput { vertices, facets })
}

/// Greedily pick `d+1` affinely independent points.
fn initial_simplex(pts: &[LatticeVector], d: usize) -> Result<Vec<usize>> {
    let mut chosen = vec![0usize];
    for i in 1..pts.len() {
        if chosen.len() == d + 1 {
            break;
        }
        let mut trial: Vec<&LatticeVector> = chosen.iter().map(|&j| &pts[j]).collect();
        trial.push(&pts[i]);
        if affine_rank(&trial) == chosen.len() {
            chosen.push(i);
        }
    }
    if chosen.len() < d + 1 {
        return Err(Error::DegeneratePolytope { rank: chosen.len() - 1, ambient: d });
    }
    Ok(chosen)
}
