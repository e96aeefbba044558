use std::collections::{BTreeSet, HashSet};

use super::linalg::affine_rank;
use super::{LatticePolytope, LatticeVector};

/// A nonempty face, identified by the polytope's vertex indices it contains
/// and the facet indices containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
    pub facets: Vec<usize>,
}

/// All nonempty faces of a polytope including the polytope itself, sorted by
/// `(dim, vertices)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    faces: Vec<Face>,
    dim: usize,
}

impl FaceLattice {
    pub(crate) fn new(p: &LatticePolytope) -> Self {
        let incidence = p.vertex_facet_incidence();
        let nf = p.facets().len();
        let facet_sets: Vec<BTreeSet<usize>> = (0..nf)
            .map(|j| (0..p.vertices().len()).filter(|&i| incidence[i].contains(&j)).collect())
            .collect();

        // Close the facet vertex-sets under intersection.
        let mut seen: HashSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
        let mut queue: Vec<BTreeSet<usize>> = facet_sets.clone();
        while let Some(face) = queue.pop() {
            for fs in &facet_sets {
                let meet: BTreeSet<usize> = face.intersection(fs).copied().collect();
                if !meet.is_empty() && seen.insert(meet.clone()) {
                    queue.push(meet);
                }
            }
        }
        seen.insert((0..p.vertices().len()).collect());

        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vs| {
                let pts: Vec<&LatticeVector> = vs.iter().map(|&i| &p.vertices()[i]).collect();
                let facets = (0..nf).filter(|&j| vs.is_subset(&facet_sets[j])).collect();
                Face { dim: affine_rank(&pts), vertices: vs.into_iter().collect(), facets }
            })
            .collect();
        faces.sort();
        FaceLattice { faces, dim: p.dim() }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    /// `f[k]` = number of `k`-dimensional faces, for `k = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim).map(|k| self.faces_of_dim(k).count()).collect()
    }

    /// Euler's relation on proper faces.
    pub fn satisfies_euler(&self) -> bool {
        let f = self.f_vector();
        let alt: i64 = (0..self.dim).map(|k| if k % 2 == 0 { f[k] as i64 } else { -(f[k] as i64) }).sum();
        let want = if self.dim % 2 == 0 { 0 } else { 2 };
        alt == want && f[self.dim] == 1
    }

    pub fn find_by_vertices(&self, vertices: &[usize]) -> Option<&Face> {
        self.faces.iter().find(|f| f.vertices == vertices)
    }

    pub fn find_by_facets(&self, facets: &[usize]) -> Option<&Face> {
        self.faces.iter().find(|f| f.facets == facets)
    }

    /// Face inclusion `a ⊆ b`.
    pub fn is_subface(a: &Face, b: &Face) -> bool {
        a.vertices.iter().all(|v| b.vertices.binary_search(v).is_ok())
    }
}
