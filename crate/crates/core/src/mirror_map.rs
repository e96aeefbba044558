//! Mirror-map analytics of the two-parameter octic model on the boundary
//! curve `B = {q1 = 0}`.
//!
//! On `B` the period equations reduce to `L = θ^2 - q (-2θ)(-2θ - 1)`,
//! i.e. `(1 - 4q) θ^2 - 2q θ`, with `θ = q d/dq` and `q = q2`. Its Frobenius
//! basis at `q = 0` is `{1, log q + g(q)}` and the flat coordinate is
//! `z = q exp(g)`, which satisfies `q = z / (1 + z)^2`. The closed form on
//! the real branch is `z = 2q / (1 - 2q + sqrt(1 - 4q))`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{LogSeries, Series, ThetaOperator};
use crate::error::{Error, Result};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A moduli coordinate: an exact rational or the formal limit `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coordinate {
    Finite(BigRational),
    Infinity,
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coordinate::Finite(x) => write!(f, "{x}"),
            Coordinate::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Coordinate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModuliPoint {
    pub q1: Coordinate,
    pub q2: Coordinate,
}

/// `q1 = c3 c4 c5 c6 / c0^4`, `q2 = c1 c2 / c6^2` for coefficients
/// `c0..c6` of the octic.
pub fn moduli_coordinates(c: &[BigRational; 7]) -> Result<ModuliPoint> {
    if c[0].is_zero() {
        return Err(Error::DivisionByZero("c0"));
    }
    if c[6].is_zero() {
        return Err(Error::DivisionByZero("c6"));
    }
    let q1 = &c[3] * &c[4] * &c[5] * &c[6] / (&c[0] * &c[0] * &c[0] * &c[0]);
    let q2 = &c[1] * &c[2] / (&c[6] * &c[6]);
    Ok(ModuliPoint { q1: Coordinate::Finite(q1), q2: Coordinate::Finite(q2) })
}

/// The `q2` value of the principal discriminant `Δ0` over `q1`:
/// `(1 - q1/256)^2 / 4`.
pub fn principal_discriminant(q1: &BigRational) -> BigRational {
    let t = BigRational::one() - q1 / rat(256);
    &t * &t / rat(4)
}

/// `q2 = 1/4`, where the two square roots can satisfy `2 r1 r2 = c6`.
pub fn is_transition_locus(p: &ModuliPoint) -> bool {
    p.q2 == Coordinate::Finite(BigRational::new(1.into(), 4.into()))
}

/// `L = Σ_j q^j P_j(θ)`, with `P_j` given by coefficient lists in `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkzOperator {
    pub polys: Vec<Vec<BigRational>>,
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    p.iter().enumerate().skip(1).map(|(k, c)| c * rat(k as i64)).collect()
}

impl GkzOperator {
    /// `θ^2 - q (4θ^2 + 2θ)`.
    pub fn boundary() -> Self {
        GkzOperator { polys: vec![vec![rat(0), rat(0), rat(1)], vec![rat(0), rat(-2), rat(-4)]] }
    }

    /// As a sum `Σ c_k(q) θ^k` with coefficients known to `order`.
    pub fn to_theta_operator(&self, order: usize) -> ThetaOperator {
        let degree = self.polys.iter().map(Vec::len).max().unwrap_or(0);
        let terms = (0..degree)
            .map(|k| {
                let c: Vec<BigRational> =
                    self.polys.iter().map(|p| p.get(k).cloned().unwrap_or_else(BigRational::zero)).collect();
                (Series::polynomial(&c, order), k as u32)
            })
            .filter(|(c, _)| !c.is_zero())
            .collect();
        ThetaOperator::new(terms)
    }

    /// Frobenius basis `{ϖ0, ϖ1 = ϖ0 log q + A}` with `ϖ0(0) = 1`, `A(0) = 0`.
    /// Needs `P_0(0) = P_0'(0) = 0` and `P_0(m) != 0` for `1 <= m < order`.
    pub fn frobenius_basis(&self, order: usize) -> Result<BoundarySolutions> {
        let p0 = &self.polys[0];
        let zero = BigRational::zero();
        if !eval(p0, &zero).is_zero() || !eval(&derivative(p0), &zero).is_zero() {
            return Err(Error::UnsupportedOperator("indicial polynomial lacks a double root at 0".into()));
        }
        let mut a = vec![BigRational::zero(); order];
        let mut b = vec![BigRational::zero(); order];
        if order > 0 {
            a[0] = BigRational::one();
        }
        let derivs: Vec<Vec<BigRational>> = self.polys.iter().map(|p| derivative(p)).collect();
        for m in 1..order {
            let mm = rat(m as i64);
            let lead = eval(p0, &mm);
            if lead.is_zero() {
                return Err(Error::UnsupportedOperator(format!("indicial polynomial vanishes at {m}")));
            }
            let mut sa = BigRational::zero();
            let mut sb = BigRational::zero();
            for (j, pj) in self.polys.iter().enumerate().skip(1).filter(|(j, _)| *j <= m) {
                let x = rat((m - j) as i64);
                sa += eval(pj, &x) * &a[m - j];
                sb += eval(pj, &x) * &b[m - j];
            }
            a[m] = -sa / &lead;
            // Log part: P(θ)(f log q) = (P(θ) f) log q + P'(θ) f.
            for (j, dj) in derivs.iter().enumerate().filter(|(j, _)| *j <= m) {
                sb += eval(dj, &rat((m - j) as i64)) * &a[m - j];
            }
            b[m] = -sb / &lead;
        }
        let (a, b) = (Series::new(a), Series::new(b));
        Ok(BoundarySolutions {
            varpi0: LogSeries::analytic(a.clone()),
            varpi1: LogSeries::new(b.clone(), a),
            g: b,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySolutions {
    pub varpi0: LogSeries,
    pub varpi1: LogSeries,
    /// The analytic part of `ϖ1` (valid as `ϖ1 - log q` when `ϖ0 = 1`).
    pub g: Series,
}

impl BoundarySolutions {
    /// `L ϖ0` and `L ϖ1`.
    pub fn residuals(&self, op: &GkzOperator) -> Result<(LogSeries, LogSeries)> {
        let theta = op.to_theta_operator(self.varpi0.order());
        Ok((theta.apply(&self.varpi0)?, theta.apply(&self.varpi1)?))
    }
}

pub fn boundary_ode_solutions(order: usize) -> Result<BoundarySolutions> {
    GkzOperator::boundary().frobenius_basis(order)
}

/// `z = q exp(g)` to the given order.
pub fn flat_coordinate_series(order: usize) -> Result<Series> {
    let sol = boundary_ode_solutions(order)?;
    let e = sol.g.exp()?;
    Ok(&Series::q(order) * &e)
}

/// A real flat-coordinate value. Intervals are closed and contain the true
/// value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlatValue {
    Exact(BigRational),
    Interval { lo: BigRational, hi: BigRational },
}

impl FlatValue {
    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            FlatValue::Exact(z) => Some(z),
            FlatValue::Interval { .. } => None,
        }
    }
}

/// Exact square root of a nonnegative rational, if it is a rational square.
fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// Interval bits for irrational square roots.
const SQRT_BITS: u32 = 64;

/// `z2` on the real branch, `0 <= q2 <= 1/4`, or the limit `-1` at `∞`.
pub fn flat_coordinate(q2: &Coordinate) -> Result<FlatValue> {
    let q = match q2 {
        Coordinate::Infinity => return Ok(FlatValue::Exact(rat(-1))),
        Coordinate::Finite(q) => q,
    };
    let quarter = BigRational::new(1.into(), 4.into());
    if q.is_negative() || q > &quarter {
        return Err(Error::OutOfBranch(q.to_string()));
    }
    let disc = BigRational::one() - q * rat(4);
    let base = BigRational::one() - q * rat(2);
    let two_q = q * rat(2);
    if let Some(s) = rational_sqrt(&disc) {
        return Ok(FlatValue::Exact(&two_q / (&base + s)));
    }
    // sqrt(n/d) = sqrt(n d)/d lies in [r, r+1] / (d K).
    let k = BigInt::one() << SQRT_BITS;
    let (n, d) = (disc.numer(), disc.denom());
    let r = (n * d * &k * &k).sqrt();
    let scale = d * &k;
    let s_lo = BigRational::new(r.clone(), scale.clone());
    let s_hi = BigRational::new(r + 1, scale);
    // z decreases in s on this branch.
    Ok(FlatValue::Interval { lo: &two_q / (&base + s_hi), hi: &two_q / (&base + s_lo) })
}

/// `q = z / (1 + z)^2`, with `z = -1` sent to `∞`.
pub fn inverse_flat_coordinate(z: &BigRational) -> Coordinate {
    let w = BigRational::one() + z;
    if w.is_zero() {
        Coordinate::Infinity
    } else {
        Coordinate::Finite(z / (&w * &w))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pole {
    pub q2: Coordinate,
    #[serde(serialize_with = "ser_rat")]
    pub z2: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub modulus: BigRational,
    pub source: String,
}

fn ser_rat<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleReport {
    pub poles: Vec<Pole>,
    pub minimal_set: Vec<Pole>,
}

/// The poles attaining the least `|z2|`, in input order.
pub fn minimal_modulus(poles: &[Pole]) -> Vec<Pole> {
    let Some(min) = poles.iter().map(|p| &p.modulus).min() else {
        return Vec::new();
    };
    poles.iter().filter(|p| &p.modulus == min).cloned().collect()
}

/// Poles of correlation functions along `B`: where `B` meets `Δ0` and the
/// component `{q2 = 1/4}`, and where it meets the orbifold locus
/// `{q2^{-1/2} = 0}`.
pub fn locate_transition_poles() -> Result<PoleReport> {
    let sites = [
        (Coordinate::Finite(principal_discriminant(&BigRational::zero())), "principal discriminant and q2 = 1/4"),
        (Coordinate::Infinity, "orbifold locus q2^(-1/2) = 0"),
    ];
    let mut poles = Vec::new();
    for (q2, source) in sites {
        let z2 = flat_coordinate(&q2)?
            .exact()
            .cloned()
            .ok_or_else(|| Error::Internal(format!("flat coordinate at {q2} is not exact")))?;
        if inverse_flat_coordinate(&z2) != q2 {
            return Err(Error::Internal(format!("z2 = {z2} does not map back to q2 = {q2}")));
        }
        poles.push(Pole { q2, modulus: z2.abs(), z2, source: source.into() });
    }
    let minimal_set = minimal_modulus(&poles);
    Ok(PoleReport { poles, minimal_set })
}
