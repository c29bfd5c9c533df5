//! Mean values and the complete elliptic integral `K(r)`.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radius::{complement, UnitRadius};

/// Relative gap at which the AGM iteration stops.
pub const AGM_RTOL: f64 = 1e-16;
/// Iteration cap; quadratic convergence never gets close to it for finite input.
pub const AGM_MAX_ITER: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Logarithmic,
    ArithmeticGeometric,
}

/// Exponent `t > 0` of the power modification `M_t(x,y) = M(x^t, y^t)^{1/t}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerModification(f64);

impl PowerModification {
    pub fn new(t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::domain("PowerModification", format!("t = {t} must be positive")));
        }
        Ok(PowerModification(t))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// The mean of the given kind of two positive numbers.
pub fn mean(kind: MeanKind, x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(Error::domain("mean", format!("({x}, {y}) must be positive and finite")));
    }
    match kind {
        MeanKind::Arithmetic => Ok(0.5 * x + 0.5 * y),
        MeanKind::Geometric => Ok(x.sqrt() * y.sqrt()),
        MeanKind::Logarithmic => Ok(log_mean(x, y)),
        MeanKind::ArithmeticGeometric => agm(x, y),
    }
}

/// `M_t(x,y)`.
pub fn mean_mod(kind: MeanKind, t: PowerModification, x: f64, y: f64) -> Result<f64> {
    let t = t.get();
    let m = mean(kind, x.powf(t), y.powf(t))?;
    Ok(m.powf(1.0 / t))
}

fn log_mean(x: f64, y: f64) -> f64 {
    if x == y {
        return x;
    }
    // log(x/y) = log1p((x - y)/y) keeps precision when x ≈ y.
    (x - y) / ((x - y) / y).ln_1p()
}

/// The arithmetic–geometric mean `AG(x, y)`.
pub fn agm(x: f64, y: f64) -> Result<f64> {
    let (mut a, mut b) = (x.max(y), x.min(y));
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= AGM_RTOL * a {
            return Ok(a);
        }
        let next_a = 0.5 * (a + b);
        let next_b = (a * b).sqrt();
        if next_a == a && next_b == b {
            // Stalled one ulp apart.
            return Ok(next_a);
        }
        a = next_a;
        b = next_b;
    }
    Err(Error::NonConvergence { func: "agm", iterations: AGM_MAX_ITER })
}

/// `K(r)` for `r ∈ [0,1)` via `K(r) = π / (2 AG(1, r'))`.
pub fn ellint_k(r: f64) -> Result<f64> {
    if r == 1.0 {
        return Err(Error::Divergent { func: "ellint_K", at: 1.0 });
    }
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain("ellint_K", format!("r = {r} is not in [0,1)")));
    }
    let k = FRAC_PI_2 / agm(1.0, complement(r))?;
    debug_assert!(r < 1e-3 || kuhnau_bracket_holds(r, k));
    Ok(k)
}

/// `K(r') = K(sqrt(1 - r^2))` for `r ∈ (0,1]`.
pub fn ellint_kprime(r: f64) -> Result<f64> {
    if r == 0.0 {
        return Err(Error::Divergent { func: "ellint_Kprime", at: 0.0 });
    }
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::domain("ellint_Kprime", format!("r = {r} is not in (0,1]")));
    }
    Ok(FRAC_PI_2 / agm(1.0, r)?)
}

/// `K(r)` from a radius carrying its complement; exact near `r = 1`.
pub(crate) fn ellint_k_unit(r: UnitRadius) -> Result<f64> {
    Ok(FRAC_PI_2 / agm(1.0, r.rc())?)
}

fn kuhnau_bracket_holds(r: f64, k: f64) -> bool {
    let l = (4.0 / complement(r)).ln();
    let slack = 1e-12 * k;
    9.0 / (8.0 + r * r) * l <= k + slack && k <= 4.0 / (3.0 + r * r) * l + slack
}
