//! Exact polynomial and series arithmetic.

mod poly;
mod series;

pub use poly::{poly_identity_check, IdentityCheck, Monomial, Poly, PolyRing, Relation};
pub use series::{apply_theta_operator, series_invert, LogSeries, Series, ThetaOperator, DEFAULT_ORDER};
