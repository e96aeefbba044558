//! Truncated power series in one variable over `Q`, with an optional
//! first-order logarithmic part.
//!
//! A [`Series`] of order `N` knows its coefficients modulo `q^N`. Every
//! binary operation returns the smaller of the input orders, so no
//! coefficient is ever reported beyond what the inputs determine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 32;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// `coeffs[k]` is the coefficient of `q^k`; the order is `coeffs.len()`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Series { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// A polynomial, known to `order` (missing coefficients are zero,
    /// excess ones are dropped).
    pub fn polynomial(coeffs: &[BigRational], order: usize) -> Self {
        let mut c: Vec<BigRational> = coeffs.iter().take(order).cloned().collect();
        c.resize(order, BigRational::zero());
        Self::new(c)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigRational::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigRational::one(), order)
    }

    /// `c q^k` to the given order.
    pub fn monomial(k: usize, c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The variable `q`.
    pub fn q(order: usize) -> Self {
        Self::monomial(1, BigRational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^k`. Panics if `k` is not below the order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs[..order.min(self.order())].to_vec())
    }

    pub fn scale(&self, k: &BigRational) -> Series {
        Series::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `θ = q d/dq`: `q^m -> m q^m`.
    pub fn theta(&self) -> Series {
        Series::new(self.coeffs.iter().enumerate().map(|(m, c)| c * rat(m as i64)).collect())
    }

    /// `f(q)^{-1}`; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Series> {
        let n = self.order();
        if n == 0 || self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible("constant term vanishes".into()));
        }
        let inv0 = self.coeffs[0].recip();
        let mut out = vec![BigRational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let s: BigRational = (1..=k).map(|j| &self.coeffs[j] * &out[k - j]).sum();
            out[k] = -s * &inv0;
        }
        Ok(Series::new(out))
    }

    /// `f(g(q))`; needs `g(0) = 0`.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        if g.order() > 0 && !g.coeffs[0].is_zero() {
            return Err(Error::UndefinedSeriesOperation("inner series has a nonzero constant term".into()));
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        // Horner from the top coefficient.
        let mut acc = Series::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = &acc * &g;
            if n > 0 {
                acc.coeffs[0] += c;
            }
        }
        Ok(acc)
    }

    /// `exp(f)`; needs `f(0) = 0`. Uses `θE = E θf`.
    pub fn exp(&self) -> Result<Series> {
        let n = self.order();
        if n > 0 && !self.coeffs[0].is_zero() {
            return Err(Error::UndefinedSeriesOperation("exp of a series with nonzero constant term".into()));
        }
        let mut e = vec![BigRational::zero(); n];
        if n > 0 {
            e[0] = BigRational::one();
        }
        for m in 1..n {
            let s: BigRational = (1..=m).map(|k| rat(k as i64) * &self.coeffs[k] * &e[m - k]).sum();
            e[m] = s / rat(m as i64);
        }
        Ok(Series::new(e))
    }

    /// `log(f)`; needs `f(0) = 1`. Uses `f θL = θf`.
    pub fn log(&self) -> Result<Series> {
        let n = self.order();
        if n > 0 && !self.coeffs[0].is_one() {
            return Err(Error::UndefinedSeriesOperation("log of a series with constant term other than 1".into()));
        }
        let mut l = vec![BigRational::zero(); n];
        for m in 1..n {
            let s: BigRational = (1..m).map(|k| rat(k as i64) * &l[k] * &self.coeffs[m - k]).sum();
            l[m] = (rat(m as i64) * &self.coeffs[m] - s) / rat(m as i64);
        }
        Ok(Series::new(l))
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::new((0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::new((0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Series::new(out)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

/// `A(q) + B(q) log q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LogSeries {
    pub analytic: Series,
    pub log_coeff: Series,
}

impl LogSeries {
    pub fn new(analytic: Series, log_coeff: Series) -> Self {
        LogSeries { analytic, log_coeff }
    }

    pub fn analytic(a: Series) -> Self {
        let n = a.order();
        LogSeries { analytic: a, log_coeff: Series::zero(n) }
    }

    /// `log q` to the given order.
    pub fn log_q(order: usize) -> Self {
        LogSeries { analytic: Series::zero(order), log_coeff: Series::one(order) }
    }

    pub fn order(&self) -> usize {
        self.analytic.order().min(self.log_coeff.order())
    }

    pub fn is_analytic(&self) -> bool {
        self.log_coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.analytic.is_zero() && self.log_coeff.is_zero()
    }

    pub fn scale_series(&self, c: &Series) -> LogSeries {
        LogSeries { analytic: &self.analytic * c, log_coeff: &self.log_coeff * c }
    }

    /// `θ(A + B log q) = (θA + B) + θB log q`.
    pub fn theta(&self) -> LogSeries {
        LogSeries { analytic: &self.analytic.theta() + &self.log_coeff, log_coeff: self.log_coeff.theta() }
    }

    pub fn mul(&self, rhs: &LogSeries) -> Result<LogSeries> {
        if !self.is_analytic() && !rhs.is_analytic() {
            return Err(Error::HigherLogPower);
        }
        Ok(LogSeries {
            analytic: &self.analytic * &rhs.analytic,
            log_coeff: &(&self.analytic * &rhs.log_coeff) + &(&self.log_coeff * &rhs.analytic),
        })
    }
}

impl Add for &LogSeries {
    type Output = LogSeries;
    fn add(self, rhs: &LogSeries) -> LogSeries {
        LogSeries { analytic: &self.analytic + &rhs.analytic, log_coeff: &self.log_coeff + &rhs.log_coeff }
    }
}

impl Sub for &LogSeries {
    type Output = LogSeries;
    fn sub(self, rhs: &LogSeries) -> LogSeries {
        LogSeries { analytic: &self.analytic - &rhs.analytic, log_coeff: &self.log_coeff - &rhs.log_coeff }
    }
}

/// `Σ c_k(q) θ^{p_k}` with coefficient series `c_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaOperator {
    pub terms: Vec<(Series, u32)>,
}

impl ThetaOperator {
    pub fn new(terms: Vec<(Series, u32)>) -> Self {
        ThetaOperator { terms }
    }

    /// Coefficients must be known at least to the order of `f`.
    pub fn apply(&self, f: &LogSeries) -> Result<LogSeries> {
        let n = f.order();
        let mut out = LogSeries::analytic(Series::zero(n));
        for (c, p) in &self.terms {
            if c.order() < n {
                return Err(Error::InsufficientOrder { needed: n, have: c.order() });
            }
            let mut g = f.clone();
            for _ in 0..*p {
                g = g.theta();
            }
            out = &out + &g.scale_series(&c.truncate(n));
        }
        Ok(out)
    }
}

pub fn apply_theta_operator(op: &ThetaOperator, f: &LogSeries) -> Result<LogSeries> {
    op.apply(f)
}

/// Compositional inverse of `z = q + O(q^2)` by Newton iteration on
/// `z(w) - q = 0`, doubling the number of correct coefficients per step.
pub fn series_invert(z: &LogSeries) -> Result<LogSeries> {
    if !z.is_analytic() {
        return Err(Error::NotInvertible("series has a logarithmic part".into()));
    }
    let f = &z.analytic;
    let n = f.order();
    if n < 2 || !f.coeff(0).is_zero() || !f.coeff(1).is_one() {
        return Err(Error::NotInvertible("series is not of the form q + O(q^2)".into()));
    }
    let fprime = Series::new((1..n).map(|k| f.coeff(k) * rat(k as i64)).chain([BigRational::zero()]).collect());
    let mut w = Series::q(n);
    let mut correct = 2;
    while correct < n {
        correct = (2 * correct).min(n);
        let wt = w.truncate(correct);
        let residual = &f.truncate(correct).compose(&wt)? - &Series::q(correct);
        let slope = fprime.truncate(correct).compose(&wt)?.reciprocal()?;
        let next = &wt - &(&residual * &slope);
        w = Series::polynomial(next.coeffs(), n);
    }
    Ok(LogSeries::analytic(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_scales_monomials() {
        let s = Series::monomial(5, rat(3), 8);
        assert_eq!(s.theta(), Series::monomial(5, rat(15), 8));
        let l = LogSeries::log_q(4).theta();
        assert_eq!(l, LogSeries::analytic(Series::one(4)));
    }

    #[test]
    fn reciprocal_of_geometric() {
        let one_minus_q = &Series::one(6) - &Series::q(6);
        assert_eq!(one_minus_q.reciprocal().unwrap(), Series::from_i64(&[1, 1, 1, 1, 1, 1]));
        assert!(Series::q(3).reciprocal().is_err());
    }

    #[test]
    fn exp_log_round_trip() {
        let f = Series::from_i64(&[0, 1, -2, 5, 0, 7]);
        let e = f.exp().unwrap();
        assert_eq!(e.log().unwrap(), f);
        // exp(q) = Σ q^k / k!
        assert_eq!(*Series::q(5).exp().unwrap().coeff(4), BigRational::new(1.into(), 24.into()));
    }

    #[test]
    fn catalan_inverse() {
        let z = LogSeries::analytic(Series::from_i64(&[0, 1, 2, 5, 14]));
        let w = series_invert(&z).unwrap();
        assert_eq!(w.analytic, Series::from_i64(&[0, 1, -2, 3, -4]));
        assert_eq!(series_invert(&LogSeries::analytic(Series::q(6))).unwrap().analytic, Series::q(6));
    }

    #[test]
    fn invert_rejects() {
        assert!(series_invert(&LogSeries::analytic(Series::from_i64(&[0, 2, 1]))).is_err());
        assert!(series_invert(&LogSeries::analytic(Series::from_i64(&[1, 1, 1]))).is_err());
        assert!(series_invert(&LogSeries::log_q(4)).is_err());
    }

    #[test]
    fn orders_propagate() {
        let a = Series::from_i64(&[1, 2, 3]);
        let b = Series::from_i64(&[1, 1, 1, 1, 1]);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
        let op = ThetaOperator::new(vec![(Series::one(2), 1)]);
        assert!(matches!(op.apply(&LogSeries::analytic(b)), Err(Error::InsufficientOrder { needed: 5, have: 2 })));
    }

    #[test]
    fn log_squared_is_rejected() {
        let l = LogSeries::log_q(3);
        assert!(matches!(l.mul(&l), Err(Error::HigherLogPower)));
        let a = LogSeries::analytic(Series::from_i64(&[2, 0, 0]));
        assert_eq!(a.mul(&l).unwrap().log_coeff, Series::from_i64(&[2, 0, 0]));
    }
}
