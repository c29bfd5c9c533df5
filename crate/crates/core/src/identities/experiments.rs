//! Numerical experiments on open questions. These report observations; none
//! of them is a pass/fail check.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distortion::{linearized_g_a, phi_k, Dilatation};
use crate::error::{Error, Result};
use crate::modulus::{mu_inv, newton_trace, Signature};
use crate::radius::UnitRadius;
use crate::specfun::{beta_fn, ramanujan_r_pos};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExperimentId {
    /// Maclaurin coefficients of `G = (Q-1)/(1-r)`, `Q = B F(a,b;a+b;r)/log(e^R/(1-r))`.
    QMaclaurin,
    /// Plain Newton iterates for `μ(x) = y` from `x₀ = 1/cosh y`.
    NewtonMonotone,
    /// `artanh φ_K(r) / artanh(r^{1/K})` against `min/max{K, 4^{1-1/K}}`.
    ArtanhRatio,
    /// Slopes of the logit-linearized `φ^a_K`.
    LinearizePhiA,
}

impl ExperimentId {
    pub const ALL: &'static [ExperimentId] = &[
        ExperimentId::QMaclaurin,
        ExperimentId::NewtonMonotone,
        ExperimentId::ArtanhRatio,
        ExperimentId::LinearizePhiA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentId::QMaclaurin => "Q_maclaurin",
            ExperimentId::NewtonMonotone => "NewtonMonotone",
            ExperimentId::ArtanhRatio => "ArtanhRatio",
            ExperimentId::LinearizePhiA => "LinearizePhiA",
        }
    }
}

impl fmt::Display for ExperimentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| *c != '_' && *c != '-').collect();
        ExperimentId::ALL
            .iter()
            .copied()
            .find(|e| e.name().replace('_', "").eq_ignore_ascii_case(&key))
            .ok_or_else(|| Error::domain("ExperimentId", format!("unknown experiment `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: ExperimentId,
    pub parameters: Vec<(String, f64)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub findings: Vec<Finding>,
}

fn finding(statement: impl Into<String>, holds: bool) -> Finding {
    Finding { statement: statement.into(), holds }
}

/// Coefficients `q_n` of `Q` and `g_n` of `G` for `n < terms`, by power
/// series division.
pub fn q_maclaurin(a: f64, b: f64, terms: usize) -> Result<ExperimentReport> {
    if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
        return Err(Error::domain("q_maclaurin", format!("(a, b) = ({a}, {b}) must lie in (0,1)^2")));
    }
    if terms == 0 || terms > 400 {
        return Err(Error::domain("q_maclaurin", format!("terms = {terms} must be in 1..=400")));
    }
    let beta = beta_fn(a, b)?;
    let r_const = ramanujan_r_pos(a, b);
    let c = a + b;
    let mut f = vec![1.0];
    for n in 1..terms {
        let m = (n - 1) as f64;
        f.push(f[n - 1] * (a + m) * (b + m) / ((c + m) * (m + 1.0)));
    }
    // log(e^R/(1-r)) = R + Σ r^n/n
    let log_coef = |n: usize| if n == 0 { r_const } else { 1.0 / n as f64 };
    let mut q: Vec<f64> = Vec::with_capacity(terms);
    for n in 0..terms {
        let conv: f64 = (1..=n).map(|k| log_coef(k) * q[n - k]).sum();
        q.push((beta * f[n] - conv) / r_const);
    }
    let mut rows = Vec::with_capacity(terms);
    let mut g = 0.0;
    for (n, &qn) in q.iter().enumerate() {
        g += qn - if n == 0 { 1.0 } else { 0.0 };
        rows.push(vec![n as f64, qn, g]);
    }
    let g_positive = rows.iter().all(|row| row[2] > 0.0);
    let g_increasing = rows.windows(2).all(|w| w[1][2] >= w[0][2]);
    Ok(ExperimentReport {
        experiment: ExperimentId::QMaclaurin,
        parameters: vec![("a".into(), a), ("b".into(), b), ("terms".into(), terms as f64)],
        columns: vec!["n", "q_n", "g_n"],
        findings: vec![
            finding(format!("all g_n > 0 for n < {terms}"), g_positive),
            finding(format!("g_n non-decreasing for n < {terms}"), g_increasing),
        ],
        rows,
    })
}

/// Iterates of the unsafeguarded Newton scheme and whether they converge
/// and increase.
pub fn newton_monotone(y: f64, steps: usize) -> Result<ExperimentReport> {
    let trace = newton_trace(y, steps)?;
    let target = mu_inv(y).ok().map(|r| r.r());
    let last = *trace.last().expect("trace starts with x0");
    let converged = target.is_some_and(|t| (last - t).abs() <= 1e-12 * t);
    let increasing = trace.windows(2).all(|w| w[0] < w[1] || (w[1] - w[0]).abs() <= 16.0 * f64::EPSILON * w[0])
        && trace.iter().all(|&x| x > 0.0 && x < 1.0);
    let rows = trace.iter().enumerate().map(|(n, &x)| vec![n as f64, x]).collect();
    Ok(ExperimentReport {
        experiment: ExperimentId::NewtonMonotone,
        parameters: vec![("y".into(), y), ("steps".into(), steps as f64)],
        columns: vec!["n", "x_n"],
        rows,
        findings: vec![
            finding("iterates converge to the inverse", converged),
            finding("x_n < x_{n+1} < 1 along the trace", increasing),
        ],
    })
}

/// `artanh(u)` from `u` and `u'`: `log(1+u) - log(u')`.
fn artanh(u: UnitRadius) -> f64 {
    u.r().ln_1p() - u.rc().ln()
}

/// The ratio `artanh φ_K(r) / artanh(r^{1/K})` on a grid of radii.
pub fn artanh_ratio(k: f64, radii: &[f64]) -> Result<ExperimentReport> {
    let dil = Dilatation::new(k)?;
    let c = 4f64.powf(1.0 - 1.0 / k);
    let (lo, hi) = (k.min(c), k.max(c));
    let mut rows = Vec::with_capacity(radii.len());
    for &x in radii {
        let r = UnitRadius::new(x)?;
        let num = artanh(phi_k(dil, r)?);
        let den = UnitRadius::new(x.powf(1.0 / k)).map(artanh)?;
        rows.push(vec![x, num / den]);
    }
    let inside = rows.iter().all(|row| row[1] >= lo * (1.0 - 1e-12) && row[1] <= hi * (1.0 + 1e-12));
    let monotone = rows.windows(2).all(|w| w[1][1] >= w[0][1]) || rows.windows(2).all(|w| w[1][1] <= w[0][1]);
    Ok(ExperimentReport {
        experiment: ExperimentId::ArtanhRatio,
        parameters: vec![("K".into(), k), ("lower".into(), lo), ("upper".into(), hi)],
        columns: vec!["r", "ratio"],
        rows,
        findings: vec![
            finding(format!("ratio within [{lo}, {hi}] on the grid"), inside),
            finding("ratio monotone in r on the grid", monotone),
        ],
    })
}

/// Values and centred-difference slopes of `g(x) = logit φ^a_K(logistic x)`.
pub fn linearize_phi_a(a: f64, k: f64, xs: &[f64]) -> Result<ExperimentReport> {
    let sig = Signature::new(a)?;
    let dil = Dilatation::new(k)?;
    let h = 1e-4;
    let mut rows = Vec::with_capacity(xs.len());
    for &x in xs {
        let g = linearized_g_a(sig, dil, x)?;
        let slope = (linearized_g_a(sig, dil, x + h)? - linearized_g_a(sig, dil, x - h)?) / (2.0 * h);
        rows.push(vec![x, g, slope]);
    }
    let bounded = rows.iter().all(|row| row[2] > 1.0 / k - 1e-6 && row[2] < k + 1e-6);
    let increasing = rows.windows(2).all(|w| w[1][2] >= w[0][2] - 1e-6);
    Ok(ExperimentReport {
        experiment: ExperimentId::LinearizePhiA,
        parameters: vec![("a".into(), a), ("K".into(), k)],
        columns: vec!["x", "g", "slope"],
        rows,
        findings: vec![finding("slopes lie in (1/K, K)", bounded), finding("slopes non-decreasing in x", increasing)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &e in ExperimentId::ALL {
            assert_eq!(e.name().parse::<ExperimentId>().unwrap(), e);
        }
        assert_eq!("q-maclaurin".parse::<ExperimentId>().unwrap(), ExperimentId::QMaclaurin);
    }

    #[test]
    fn q_series_matches_direct_evaluation() {
        // Compare the truncated series for Q with a direct evaluation at r = 0.1.
        let (a, b) = (0.5, 0.5);
        let rep = q_maclaurin(a, b, 40).unwrap();
        let x: f64 = 0.1;
        let series: f64 = rep.rows.iter().map(|row| row[1] * x.powi(row[0] as i32)).sum();
        let f = crate::specfun::gauss_f_split(a, b, 1.0, x, 1.0 - x).unwrap();
        let direct = std::f64::consts::PI * f / (4.0 * std::f64::consts::LN_2 - (-x).ln_1p());
        assert!((series - direct).abs() < 1e-14);
        // Q(0) = B/R.
        assert!((rep.rows[0][1] - std::f64::consts::PI / (4.0 * std::f64::consts::LN_2)).abs() < 1e-15);
    }

    #[test]
    fn newton_from_large_modulus_increases() {
        let rep = newton_monotone(5.0, 30).unwrap();
        assert!(rep.findings.iter().all(|f| f.holds), "{:?}", rep.findings);
    }

    #[test]
    fn artanh_ratio_at_two() {
        let rep = artanh_ratio(2.0, &[0.1, 0.5, 0.9]).unwrap();
        assert_eq!(rep.rows.len(), 3);
        assert!(rep.rows.iter().all(|r| r[1] > 1.0));
    }

    #[test]
    fn linearization_slopes() {
        let rep = linearize_phi_a(0.25, 2.0, &[-3.0, 0.0, 3.0]).unwrap();
        assert!(rep.findings[0].holds);
    }

    #[test]
    fn domain_checks() {
        assert!(q_maclaurin(1.5, 0.5, 10).unwrap_err().is_domain());
        assert!(newton_monotone(-1.0, 5).unwrap_err().is_domain());
        assert!(artanh_ratio(0.5, &[0.5]).unwrap_err().is_domain());
    }
}
