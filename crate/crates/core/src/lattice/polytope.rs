use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hull;
use super::{FaceLattice, LatticeVector};
use crate::error::{Error, Result};

/// Facet inequality `<normal, x> >= -offset` with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: LatticeVector,
    pub offset: BigInt,
}

impl Facet {
    /// `<normal, x> + offset`, nonnegative exactly on the polytope's side.
    pub fn slack(&self, x: &LatticeVector) -> BigInt {
        self.normal.dot(x) + &self.offset
    }
}

/// Full-dimensional lattice polytope with both representations.
///
/// Vertices are sorted lexicographically, facets by `(normal, offset)`.
/// The H-representation is always derived from the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    vertices: Vec<LatticeVector>,
    facets: Vec<Facet>,
    ambient_dim: usize,
}

impl LatticePolytope {
    /// Convex hull of a point set. Redundant and duplicate points are
    /// discarded.
    pub fn convex_hull(points: &[LatticeVector]) -> Result<Self> {
        let out = hull::convex_hull(points)?;
        Ok(LatticePolytope { vertices: out.vertices, facets: out.facets, ambient_dim: points[0].dim() })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        let pts: Vec<LatticeVector> = points.iter().map(|p| LatticeVector::from_i64(p)).collect();
        Self::convex_hull(&pts)
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Always equal to the ambient dimension; lower-dimensional input is
    /// rejected at construction.
    pub fn dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn contains_point(&self, x: &LatticeVector) -> Result<bool> {
        self.check_dim(x.dim())?;
        Ok(self.facets.iter().all(|f| !f.slack(x).is_negative()))
    }

    pub fn strictly_contains_point(&self, x: &LatticeVector) -> bool {
        self.facets.iter().all(|f| f.slack(x).is_positive())
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains(&self, other: &LatticePolytope) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        Ok(other.vertices.iter().all(|v| self.facets.iter().all(|f| !f.slack(v).is_negative())))
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found });
        }
        Ok(())
    }

    /// All lattice points, in lexicographic order. Bounding-box scan with
    /// H-representation filtering.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let d = self.ambient_dim;
        let lo: Vec<BigInt> =
            (0..d).map(|i| self.vertices.iter().map(|v| v.coords()[i].clone()).min().unwrap()).collect();
        let hi: Vec<BigInt> =
            (0..d).map(|i| self.vertices.iter().map(|v| v.coords()[i].clone()).max().unwrap()).collect();

        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let p = LatticeVector::new(cur.clone());
            if self.facets.iter().all(|f| !f.slack(&p).is_negative()) {
                out.push(p);
            }
            // Odometer with the last coordinate fastest keeps lex order.
            let mut k = d;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    for j in k + 1..d {
                        cur[j] = lo[j].clone();
                    }
                    break;
                }
            }
        }
    }

    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        self.lattice_points().into_iter().filter(|p| self.strictly_contains_point(p)).collect()
    }

    pub fn translate(&self, by: &LatticeVector) -> LatticePolytope {
        let vertices = self.vertices.iter().map(|v| v + by).collect();
        let mut facets: Vec<Facet> = self
            .facets
            .iter()
            .map(|f| Facet { normal: f.normal.clone(), offset: &f.offset - f.normal.dot(by) })
            .collect();
        facets.sort();
        LatticePolytope { vertices, facets, ambient_dim: self.ambient_dim }
    }

    /// Image under `x -> A x` for an integer matrix given by rows. The hull
    /// is recomputed, so `A` only needs to be nonsingular.
    pub fn transform(&self, a: &[Vec<BigInt>]) -> Result<LatticePolytope> {
        let pts: Vec<LatticeVector> = self
            .vertices
            .iter()
            .map(|v| LatticeVector::new(a.iter().map(|row| row.iter().zip(v.coords()).map(|(x, y)| x * y).sum()).collect()))
            .collect();
        Self::convex_hull(&pts)
    }

    pub fn face_lattice(&self) -> FaceLattice {
        FaceLattice::new(self)
    }

    /// Indices of facets passing through each vertex.
    pub(crate) fn vertex_facet_incidence(&self) -> Vec<Vec<usize>> {
        self.vertices
            .iter()
            .map(|v| (0..self.facets.len()).filter(|&j| self.facets[j].slack(v).is_zero()).collect())
            .collect()
    }
}
