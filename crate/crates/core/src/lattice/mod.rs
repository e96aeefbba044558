//! Exact integer geometry: lattice vectors, convex hulls, lattice-point
//! enumeration, face lattices and integer normal forms.
//!
//! Everything here is exact. Coordinates are [`BigInt`]s, facet offsets are
//! integers (hulls of lattice points always have integral primitive facet
//! equations) and intermediate linear algebra is fraction-free or runs over
//! [`BigRational`].

mod face;
mod hull;
pub mod linalg;
mod normal_form;
mod polytope;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use face::{Face, FaceLattice};
pub use normal_form::{hermite_normal_form, smith_normal_form, IntMatrix, SnfResult};
pub use polytope::{Facet, LatticePolytope};

/// Largest ambient dimension the hull code accepts.
pub const MAX_AMBIENT_DIM: usize = 6;

/// A point of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    /// Panics on an empty coordinate list; lattice vectors have positive
    /// dimension.
    pub fn new(coords: Vec<BigInt>) -> Self {
        assert!(!coords.is_empty(), "lattice vectors need at least one coordinate");
        LatticeVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// gcd of the entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divide out the content. The zero vector is returned unchanged.
    pub fn primitive(&self) -> LatticeVector {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        LatticeVector(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Coordinates as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| i64::try_from(c).ok()).collect()
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of `Q^n`. Entries are kept in lowest terms with positive
/// denominators, which `BigRational` guarantees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        assert!(!coords.is_empty(), "rational vectors need at least one coordinate");
        RationalVector(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticeVector> {
        if self.is_integral() {
            Some(LatticeVector(self.0.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    pub fn dot_lattice(&self, v: &LatticeVector) -> BigRational {
        self.0
            .iter()
            .zip(v.coords())
            .map(|(a, b)| a * BigRational::from_integer(b.clone()))
            .sum()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
