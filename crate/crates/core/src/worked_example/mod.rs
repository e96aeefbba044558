//! The two-parameter octic model: lattice data of the blowup, divisor
//! classes, the symmetry groups of the weighted projective space and of
//! `P^5`, the torus change of basis, the birational map to a complete
//! intersection, and a pipeline that runs every check.

mod birational;
mod pipeline;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::linalg::{solve_unique, to_rational_matrix};
use crate::lattice::{smith_normal_form, IntMatrix, LatticeVector};

pub use birational::{birational_ring, verify_birational_map, BirationalReport, RelationFault};
pub use pipeline::{run_pipeline, CheckResult, PipelineConfig, PipelineReport};

/// The rays `v1..v6` of the blown-up fan.
pub fn standard_vectors() -> [LatticeVector; 6] {
    [
        LatticeVector::from_i64(&[-1, -2, -2, -2]),
        LatticeVector::from_i64(&[1, 0, 0, 0]),
        LatticeVector::from_i64(&[0, 1, 0, 0]),
        LatticeVector::from_i64(&[0, 0, 1, 0]),
        LatticeVector::from_i64(&[0, 0, 0, 1]),
        LatticeVector::from_i64(&[0, -1, -1, -1]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupData {
    pub v: [LatticeVector; 6],
    /// Rows: `v3 + v4 + v5 + v6 = 0` and `v1 + v2 - 2 v6 = 0`.
    pub relations: IntMatrix,
    /// `[D_i] = a η1 + b η2` as `(a, b)`; column `i` of `relations`.
    pub divisor_classes: [(i64, i64); 6],
}

impl BlowupData {
    /// Unchecked data for arbitrary rays; see [`BlowupData::checks`].
    pub fn with_vectors(v: [LatticeVector; 6]) -> Self {
        BlowupData {
            v,
            relations: IntMatrix::from_i64(&[&[0, 0, 1, 1, 1, 1], &[1, 1, 0, 0, 0, -2]]),
            divisor_classes: [(0, 1), (0, 1), (1, 0), (1, 0), (1, 0), (1, -2)],
        }
    }

    /// `v` as a 6×4 integer matrix.
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::new(self.v.iter().map(|x| x.coords().to_vec()).collect())
    }

    /// Named self-checks: both relations, the class matrix annihilating the
    /// rays, saturation of the relation lattice, `v6` as midpoint of
    /// `v1 v2`, and the six representatives of `η1`.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let mut out = Vec::new();
        let product = self.relations.mul(&self.ray_matrix());
        out.push(("relations_hold", product.is_zero()));
        let class_matrix = IntMatrix::new(vec![
            self.divisor_classes.iter().map(|c| BigInt::from(c.0)).collect(),
            self.divisor_classes.iter().map(|c| BigInt::from(c.1)).collect(),
        ]);
        out.push(("classes_match_relations", class_matrix == self.relations));
        let snf = smith_normal_form(&class_matrix);
        out.push(("relation_lattice_saturated", snf.d.iter().all(|x| x.is_one())));
        out.push(("v6_is_midpoint", &(&self.v[0] + &self.v[1]) == &self.v[5].scale(&BigInt::from(2))));
        // 2D1 + D6, D1 + D2 + D6, 2D2 + D6, D3, D4, D5.
        let reps: [[i64; 6]; 6] = [
            [2, 0, 0, 0, 0, 1],
            [1, 1, 0, 0, 0, 1],
            [0, 2, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
        ];
        let eta1_ok = reps.iter().all(|r| {
            let a: i64 = r.iter().zip(&self.divisor_classes).map(|(k, c)| k * c.0).sum();
            let b: i64 = r.iter().zip(&self.divisor_classes).map(|(k, c)| k * c.1).sum();
            (a, b) == (1, 0)
        });
        out.push(("eta1_representatives", eta1_ok));
        out
    }
}

/// The standard data; fails if any self-check fails.
pub fn build_blowup_data() -> Result<BlowupData> {
    let data = BlowupData::with_vectors(standard_vectors());
    if let Some((name, _)) = data.checks().into_iter().find(|(_, ok)| !ok) {
        return Err(Error::Internal(format!("blowup data check {name} failed")));
    }
    Ok(data)
}

/// Finite abelian group `{λ in (C*)^n : λ^r = 1 for every row r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relation_matrix: IntMatrix,
}

impl GroupPresentation {
    pub fn new(relation_matrix: IntMatrix) -> Self {
        GroupPresentation { generators: relation_matrix.cols(), relation_matrix }
    }

    /// `λ1^8 = λ2^8 = λ3^4 = λ4^4 = λ5^4 = λ1λ2λ3λ4λ5 = 1`.
    pub fn g_tilde() -> Self {
        Self::new(IntMatrix::from_i64(&[
            &[8, 0, 0, 0, 0],
            &[0, 8, 0, 0, 0],
            &[0, 0, 4, 0, 0],
            &[0, 0, 0, 4, 0],
            &[0, 0, 0, 0, 4],
            &[1, 1, 1, 1, 1],
        ]))
    }

    /// `μ0^2 = μ1^4 = μ2^4 = μ3^2 = μ4^2 = μ5^2 = μ1μ2 = μ0μ3μ4μ5 = 1`.
    pub fn gamma_tilde() -> Self {
        Self::new(IntMatrix::from_i64(&[
            &[2, 0, 0, 0, 0, 0],
            &[0, 4, 0, 0, 0, 0],
            &[0, 0, 4, 0, 0, 0],
            &[0, 0, 0, 2, 0, 0],
            &[0, 0, 0, 0, 2, 0],
            &[0, 0, 0, 0, 0, 2],
            &[0, 1, 1, 0, 0, 0],
            &[1, 0, 0, 1, 1, 1],
        ]))
    }
}

/// Weights of the scalar action on the weighted projective space.
pub const OCTIC_WEIGHTS: [i64; 5] = [1, 1, 2, 2, 2];

/// The group order is the order of `Z^n / rowspace`, the product of the
/// Smith invariants. With `quotient_by = w` the result is divided by the size
/// of `{(t^w1, .., t^wn)} ∩ group`: `t` must be a `g`-th root of unity for
/// `g = gcd_r <w, r>`, and `t -> t^w` has kernel `μ_gcd(g, gcd w)`.
pub fn group_order(g: &GroupPresentation, quotient_by: Option<&[i64]>) -> Result<BigInt> {
    let snf = smith_normal_form(&g.relation_matrix);
    let order = snf.cokernel_order().ok_or(Error::InfiniteGroup { rank: snf.rank(), generators: g.generators })?;
    let Some(w) = quotient_by else { return Ok(order) };
    if w.len() != g.generators {
        return Err(Error::DimensionMismatch { expected: g.generators, found: w.len() });
    }
    let w: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
    let gg = g
        .relation_matrix
        .as_rows()
        .iter()
        .map(|r| r.iter().zip(&w).map(|(a, b)| a * b).sum::<BigInt>())
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
    let gw = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gg.is_zero() {
        return Err(Error::Internal("scalar subgroup lies entirely in the group".into()));
    }
    let image = &gg / gg.gcd(&gw);
    Ok(order / image)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusTerm {
    pub coefficient: String,
    /// Exponents in `x1..x5` after dividing by `x1 x2 x3 x4 x5`.
    pub shifted_exponent: Vec<i64>,
    /// Exponents in `t1..t4`, if integral.
    pub torus_exponent: Option<Vec<i64>>,
    pub expected: Vec<i64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusBasisReport {
    pub terms: Vec<TorusTerm>,
    pub all_match: bool,
}

/// Octic monomials `c0 x1x2x3x4x5, c1 x1^8, .., c6 x1^4 x2^4`.
pub const OCTIC_MONOMIALS: [[i64; 5]; 7] = [
    [1, 1, 1, 1, 1],
    [8, 0, 0, 0, 0],
    [0, 8, 0, 0, 0],
    [0, 0, 4, 0, 0],
    [0, 0, 0, 4, 0],
    [0, 0, 0, 0, 4],
    [4, 4, 0, 0, 0],
];

/// `t1..t4` as exponent vectors in `x1..x5`.
pub const TORUS_BASIS: [[i64; 5]; 4] =
    [[-1, 7, -1, -1, -1], [-1, -1, 3, -1, -1], [-1, -1, -1, 3, -1], [-1, -1, -1, -1, 3]];

/// Rewrites each octic monomial over `x1 x2 x3 x4 x5` in the `t`-basis and
/// compares with `0, v1, .., v6`.
pub fn torus_basis_check() -> TorusBasisReport {
    let v = standard_vectors();
    let a: Vec<Vec<BigInt>> = (0..5).map(|k| TORUS_BASIS.iter().map(|t| BigInt::from(t[k])).collect()).collect();
    let a = to_rational_matrix(&a);
    let terms: Vec<TorusTerm> = OCTIC_MONOMIALS
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let shifted: Vec<i64> = m.iter().map(|e| e - 1).collect();
            let b: Vec<BigRational> = shifted.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            let torus_exponent = solve_unique(&a, &b).and_then(|x| {
                x.iter().map(|c| if c.is_integer() { i64::try_from(c.to_integer()).ok() } else { None }).collect()
            });
            let expected = if i == 0 { vec![0; 4] } else { v[i - 1].to_i64().expect("small") };
            let matches = torus_exponent.as_ref() == Some(&expected);
            TorusTerm { coefficient: format!("c{i}"), shifted_exponent: shifted, torus_exponent, expected, matches }
        })
        .collect();
    let all_match = terms.iter().all(|t| t.matches);
    TorusBasisReport { terms, all_match }
}
