//! Hodge numbers of Calabi–Yau hypersurfaces attached to reflexive
//! 4-polytopes.
//!
//! For a reflexive `P` (the Newton polytope of the family) with polar `P°`:
//!
//! ```text
//! h11 = l(P°) - 5 - Σ_{facets F of P°} l*(F) + Σ_{2-faces T of P°} l*(T) l*(T^)
//! h21 = l(P)  - 5 - Σ_{facets F of P}  l*(F) + Σ_{2-faces T of P}  l*(T) l*(T^)
//! ```
//!
//! where `T^` is the dual edge of `T` in the other polytope. The dual-face
//! pairing is rebuilt from the two face lattices on every call and checked
//! to be an order-reversing bijection with `dim + dim^ = 3`.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{FaceLattice, LatticePolytope};
use crate::reflexive::ReflexivePolytope;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeData {
    pub h11: i64,
    pub h21: i64,
    pub l_p: usize,
    pub l_polar: usize,
    /// `Σ l*(F)` over facets of `P` (enters `h21`).
    pub facet_interior_sum_p: usize,
    /// `Σ l*(F)` over facets of `P°` (enters `h11`).
    pub facet_interior_sum_polar: usize,
    /// `Σ l*(T) l*(T^)` over 2-faces `T` of `P` (enters `h21`).
    pub codim2_correction_p: usize,
    /// `Σ l*(T) l*(T^)` over 2-faces `T` of `P°` (enters `h11`).
    pub codim2_correction_polar: usize,
    pub euler: i64,
}

impl HodgeData {
    /// The mirror family's data: `P` and `P°` exchanged.
    pub fn mirror(&self) -> HodgeData {
        HodgeData {
            h11: self.h21,
            h21: self.h11,
            l_p: self.l_polar,
            l_polar: self.l_p,
            facet_interior_sum_p: self.facet_interior_sum_polar,
            facet_interior_sum_polar: self.facet_interior_sum_p,
            codim2_correction_p: self.codim2_correction_polar,
            codim2_correction_polar: self.codim2_correction_p,
            euler: -self.euler,
        }
    }

    /// `h11 >= 1` and `h21 >= 0`. Flagged, not enforced.
    pub fn is_plausible(&self) -> bool {
        self.h11 >= 1 && self.h21 >= 0
    }
}

/// Per-face interior counts `l*`, keyed by the face's facet set, for one
/// polytope.
struct FaceCounts {
    lattice: FaceLattice,
    interior: HashMap<Vec<usize>, usize>,
    lattice_points: usize,
}

impl FaceCounts {
    fn new(p: &LatticePolytope) -> Self {
        let lattice = p.face_lattice();
        let points = p.lattice_points();
        // A lattice point lies in the relative interior of exactly the face
        // whose facet set equals the point's set of tight facets.
        let mut interior: HashMap<Vec<usize>, usize> = HashMap::new();
        for x in &points {
            let tight: Vec<usize> = (0..p.facets().len()).filter(|&j| p.facets()[j].slack(x).is_zero()).collect();
            *interior.entry(tight).or_default() += 1;
        }
        FaceCounts { lattice, interior, lattice_points: points.len() }
    }

    fn l_star(&self, facets: &[usize]) -> usize {
        self.interior.get(facets).copied().unwrap_or(0)
    }
}

pub fn hodge_numbers(p: &ReflexivePolytope) -> Result<HodgeData> {
    if p.ambient_dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, found: p.ambient_dim() });
    }
    let polar = p.polar();
    let (pp, qq) = (p.polytope(), polar.polytope());
    let counts_p = FaceCounts::new(pp);
    let counts_q = FaceCounts::new(qq);

    let pairing = dual_face_pairing(pp, qq, &counts_p.lattice, &counts_q.lattice)?;
    let (faces_p, faces_q) = (counts_p.lattice.faces(), counts_q.lattice.faces());

    let facet_sum = |c: &FaceCounts| -> usize { c.lattice.faces_of_dim(3).map(|f| c.l_star(&f.facets)).sum() };

    let (mut codim2_p, mut codim2_q) = (0, 0);
    for &(i, j) in &pairing {
        let (f, g) = (&faces_p[i], &faces_q[j]);
        let term = counts_p.l_star(&f.facets) * counts_q.l_star(&g.facets);
        match f.dim {
            2 => codim2_p += term,
            1 => codim2_q += term,
            _ => {}
        }
    }

    let sum_p = facet_sum(&counts_p);
    let sum_q = facet_sum(&counts_q);
    let h11 = counts_q.lattice_points as i64 - 5 - sum_q as i64 + codim2_q as i64;
    let h21 = counts_p.lattice_points as i64 - 5 - sum_p as i64 + codim2_p as i64;
    Ok(HodgeData {
        h11,
        h21,
        l_p: counts_p.lattice_points,
        l_polar: counts_q.lattice_points,
        facet_interior_sum_p: sum_p,
        facet_interior_sum_polar: sum_q,
        codim2_correction_p: codim2_p,
        codim2_correction_polar: codim2_q,
        euler: 2 * (h11 - h21),
    })
}

/// Index pairs `(face of P, dual face of P°)` over all proper faces.
///
/// Facets of `P°` correspond to vertices of `P` and vertices of `P°` to
/// facets of `P`, so the dual of `F` has vertex set `F.facets` and facet set
/// `F.vertices` after reindexing.
fn dual_face_pairing(
    p: &LatticePolytope,
    q: &LatticePolytope,
    lat_p: &FaceLattice,
    lat_q: &FaceLattice,
) -> Result<Vec<(usize, usize)>> {
    let q_facet_of_p_vertex: Vec<usize> = p
        .vertices()
        .iter()
        .map(|v| q.facets().iter().position(|f| &f.normal == v))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("a vertex of P is not a facet normal of P°".into()))?;
    let q_vertex_of_p_facet: Vec<usize> = p
        .facets()
        .iter()
        .map(|f| q.vertices().iter().position(|w| w == &f.normal))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("a facet normal of P is not a vertex of P°".into()))?;

    let d = p.dim();
    let index_q: HashMap<&[usize], usize> =
        lat_q.faces().iter().enumerate().map(|(j, g)| (g.vertices.as_slice(), j)).collect();
    let mut pairing = Vec::new();
    let mut dual_of = vec![usize::MAX; lat_p.faces().len()];
    let mut hit = BTreeSet::new();
    for (i, face) in lat_p.faces().iter().enumerate() {
        if face.dim == d {
            continue;
        }
        let mut vs: Vec<usize> = face.facets.iter().map(|&k| q_vertex_of_p_facet[k]).collect();
        vs.sort_unstable();
        let mut fs: Vec<usize> = face.vertices.iter().map(|&k| q_facet_of_p_vertex[k]).collect();
        fs.sort_unstable();
        let j = *index_q
            .get(vs.as_slice())
            .ok_or_else(|| Error::Internal(format!("no dual face for {:?}", face.vertices)))?;
        let dual = &lat_q.faces()[j];
        if dual.facets != fs || dual.dim + face.dim != d - 1 {
            return Err(Error::Internal(format!("dual face pairing broken at {:?}", face.vertices)));
        }
        hit.insert(j);
        dual_of[i] = j;
        pairing.push((i, j));
    }
    let proper_q = lat_q.faces().iter().filter(|g| g.dim < d).count();
    if hit.len() != proper_q || pairing.len() != proper_q {
        return Err(Error::Internal("dual face pairing is not a bijection".into()));
    }
    // F ⊆ G iff dual(G) ⊆ dual(F), checked on covering pairs.
    for &(i, _) in &pairing {
        for &(k, _) in &pairing {
            let (f, g) = (&lat_p.faces()[i], &lat_p.faces()[k]);
            if g.dim != f.dim + 1 {
                continue;
            }
            let (df, dg) = (&lat_q.faces()[dual_of[i]], &lat_q.faces()[dual_of[k]]);
            if FaceLattice::is_subface(f, g) != FaceLattice::is_subface(dg, df) {
                return Err(Error::Internal("dual face pairing is not order reversing".into()));
            }
        }
    }
    Ok(pairing)
}
