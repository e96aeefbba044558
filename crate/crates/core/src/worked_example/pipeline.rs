//! One-shot reproduction of every worked-example check, as a JSON report.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use super::{
    group_order, torus_basis_check, verify_birational_map, BlowupData, GroupPresentation, OCTIC_WEIGHTS,
};
use crate::algebra::{Series, DEFAULT_ORDER};
use crate::error::Result;
use crate::hodge::hodge_numbers;
use crate::lattice::{LatticePolytope, LatticeVector};
use crate::mirror_map::{
    boundary_ode_solutions, flat_coordinate, flat_coordinate_series, locate_transition_poles, Coordinate,
    FlatValue, GkzOperator,
};
use crate::reflexive::ReflexivePolytope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Series truncation order.
    pub order: usize,
    /// Replaces `v6` in the lattice data (fault injection).
    pub v6_override: Option<LatticeVector>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { order: DEFAULT_ORDER, v6_override: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct PipelineReport {
    pub checks: BTreeMap<String, CheckResult>,
}

impl PipelineReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn check(pass: bool, details: Value) -> CheckResult {
    CheckResult { pass, details }
}

fn failed(e: impl std::fmt::Display) -> CheckResult {
    check(false, json!({ "error": e.to_string() }))
}

fn rat_str(x: &BigRational) -> String {
    x.to_string()
}

fn lattice_check(data: &BlowupData) -> CheckResult {
    let checks = data.checks();
    let pass = checks.iter().all(|(_, ok)| *ok);
    let details: serde_json::Map<String, Value> = checks.into_iter().map(|(n, ok)| (n.to_string(), json!(ok))).collect();
    check(pass, Value::Object(details))
}

fn hodge_check(data: &BlowupData) -> Result<CheckResult> {
    let fan = LatticePolytope::convex_hull(&data.v[..5])?;
    let fan = ReflexivePolytope::new(&fan)?;
    let newton = fan.polar();
    let h = hodge_numbers(&newton)?;
    let hm = hodge_numbers(&fan)?;
    let pass = (h.h11, h.h21) == (2, 86) && hm == h.mirror();
    Ok(check(
        pass,
        json!({
            "h11": h.h11,
            "h21": h.h21,
            "euler": h.euler,
            "lattice_points": h.l_p,
            "lattice_points_polar": h.l_polar,
            "facet_interior_sum": h.facet_interior_sum_p,
            "codim2_correction": h.codim2_correction_p,
            "mirror_swaps": hm == h.mirror(),
        }),
    ))
}

fn groups_check() -> Result<CheckResult> {
    let g_tilde = group_order(&GroupPresentation::g_tilde(), None)?;
    let g = group_order(&GroupPresentation::g_tilde(), Some(&OCTIC_WEIGHTS))?;
    let gamma = group_order(&GroupPresentation::gamma_tilde(), None)?;
    let pass = g_tilde == BigInt::from(512) && g == BigInt::from(64) && gamma == BigInt::from(32);
    Ok(check(pass, json!({ "G_tilde": g_tilde.to_string(), "G": g.to_string(), "Gamma_tilde": gamma.to_string() })))
}

fn birational_check() -> Result<CheckResult> {
    let r = verify_birational_map(None)?;
    Ok(check(
        r.holds(),
        json!({
            "first_equation_remainder": r.first.remainder.to_string(),
            "second_equation_remainder": r.second.remainder.to_string(),
            "octic_normal_form": r.octic.to_string(),
        }),
    ))
}

/// `C_{k+1}` for `k < n`, from `C_{j+1} = C_j 2(2j+1)/(j+2)`.
fn shifted_catalan(n: usize) -> Vec<BigRational> {
    let mut c = BigRational::one();
    let mut out = Vec::with_capacity(n);
    for j in 0..=n {
        if j > 0 {
            out.push(c.clone());
        }
        c = c * BigRational::from_integer((2 * (2 * j as i64 + 1)).into()) / BigRational::from_integer((j as i64 + 2).into());
    }
    out.truncate(n);
    out
}

fn ode_check(order: usize) -> Result<CheckResult> {
    let op = GkzOperator::boundary();
    let sol = boundary_ode_solutions(order)?;
    let (r0, r1) = sol.residuals(&op)?;
    let exp_g = sol.g.exp()?;
    let catalan_ok = exp_g.coeffs() == shifted_catalan(order).as_slice();
    let z = flat_coordinate_series(order)?;
    let one_plus = &Series::one(order) + &z;
    let relation_ok = (&Series::q(order) * &(&one_plus * &one_plus)) == z;
    let pass = r0.is_zero() && r1.is_zero() && sol.varpi0.analytic == Series::one(order) && catalan_ok && relation_ok;
    Ok(check(
        pass,
        json!({
            "order": order,
            "residuals_zero": r0.is_zero() && r1.is_zero(),
            "exp_g_is_catalan": catalan_ok,
            "z_equals_q_times_one_plus_z_squared": relation_ok,
            "z_coefficients": z.coeffs().iter().take(8).map(rat_str).collect::<Vec<_>>(),
        }),
    ))
}

fn flat_check() -> Result<CheckResult> {
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let cases = [
        (Coordinate::Finite(BigRational::zero()), r(0, 1)),
        (Coordinate::Finite(r(2, 9)), r(1, 2)),
        (Coordinate::Finite(r(1, 4)), r(1, 1)),
        (Coordinate::Infinity, r(-1, 1)),
    ];
    let mut pass = true;
    let mut details = serde_json::Map::new();
    for (q, want) in cases {
        let got = flat_coordinate(&q)?;
        pass &= got == FlatValue::Exact(want);
        let shown = got.exact().map_or_else(|| "interval".to_string(), rat_str);
        details.insert(q.to_string(), json!(shown));
    }
    Ok(check(pass, Value::Object(details)))
}

fn poles_check() -> Result<CheckResult> {
    let rep = locate_transition_poles()?;
    let pass = rep.poles.len() == 2 && rep.minimal_set.len() == 2 && rep.poles.iter().all(|p| p.modulus.is_one());
    Ok(check(pass, serde_json::to_value(&rep).expect("report serializes")))
}

pub fn run_pipeline(config: &PipelineConfig) -> PipelineReport {
    let mut v = super::standard_vectors();
    if let Some(v6) = &config.v6_override {
        v[5] = v6.clone();
    }
    let data = BlowupData::with_vectors(v);
    let torus = torus_basis_check();
    let mut checks = BTreeMap::new();
    checks.insert("lattice_data".to_string(), lattice_check(&data));
    checks.insert("hodge_numbers".to_string(), hodge_check(&data).unwrap_or_else(failed));
    checks.insert("group_orders".to_string(), groups_check().unwrap_or_else(failed));
    checks.insert(
        "torus_basis".to_string(),
        check(torus.all_match, serde_json::to_value(&torus).expect("report serializes")),
    );
    checks.insert("birational_map".to_string(), birational_check().unwrap_or_else(failed));
    checks.insert("boundary_ode".to_string(), ode_check(config.order).unwrap_or_else(failed));
    checks.insert("flat_coordinate".to_string(), flat_check().unwrap_or_else(failed));
    checks.insert("transition_poles".to_string(), poles_check().unwrap_or_else(failed));
    PipelineReport { checks }
}
