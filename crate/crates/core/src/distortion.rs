//! Distortion functions of plane quasiconformal maps.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modulus::{mu, mu_a, mu_a_inv, mu_inv, Signature};
use crate::radius::UnitRadius;

/// A dilatation constant `K`.
///
/// Distortion functions also make sense for `0 < K < 1` (`φ_{1/K} = φ_K⁻¹`),
/// so [`Dilatation::general`] admits those; every other constructor and the
/// quasisymmetry functions require `K ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Dilatation(f64);

impl Dilatation {
    /// `K ≥ 1`.
    pub fn new(k: f64) -> Result<Self> {
        if !(k >= 1.0) || !k.is_finite() {
            return Err(Error::domain("Dilatation", format!("K = {k} must be at least 1")));
        }
        Ok(Dilatation(k))
    }

    /// Any finite `K > 0`.
    pub fn general(k: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::domain("Dilatation", format!("K = {k} must be positive")));
        }
        Ok(Dilatation(k))
    }

    pub fn identity() -> Self {
        Dilatation(1.0)
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `1/K`.
    pub fn reciprocal(self) -> Self {
        Dilatation(1.0 / self.0)
    }

    fn require_proper(self, func: &'static str) -> Result<f64> {
        if self.0 < 1.0 {
            return Err(Error::domain(func, format!("K = {} must be at least 1", self.0)));
        }
        Ok(self.0)
    }
}

/// `φ_K(r) = μ⁻¹(μ(r)/K)`.
///
/// When the result lies closer to 0 or 1 than the smallest positive double
/// can resolve, the radius (or its complement) saturates at `f64::MIN_POSITIVE`.
pub fn phi_k(k: Dilatation, r: UnitRadius) -> Result<UnitRadius> {
    if k.0 == 1.0 {
        return Ok(r);
    }
    let y = mu(r)? / k.0;
    saturate(mu_inv(y), y > std::f64::consts::FRAC_PI_2)
}

/// `φ^a_K(r) = μ_a⁻¹(μ_a(r)/K)`.
pub fn phi_ak(a: Signature, k: Dilatation, r: UnitRadius) -> Result<UnitRadius> {
    if k.0 == 1.0 {
        return Ok(r);
    }
    let y = mu_a(a, r)? / k.0;
    saturate(mu_a_inv(a, y), y > a.symmetric_value())
}

fn saturate(result: Result<UnitRadius>, small: bool) -> Result<UnitRadius> {
    match result {
        Err(Error::Underflow { .. }) if small => Ok(UnitRadius::saturating(0.0, 1.0)),
        Err(Error::Underflow { .. }) => Ok(UnitRadius::saturating(1.0, 0.0)),
        other => other,
    }
}

/// `(u/u')^2 = u^2/(1-u^2)`, signalling overflow once `u'` has saturated.
fn odds_squared(u: UnitRadius, func: &'static str) -> Result<f64> {
    let q = u.r() / u.rc();
    let v = q * q;
    if u.rc() <= f64::MIN_POSITIVE || !v.is_finite() {
        return Err(Error::Overflow { func, detail: "u is indistinguishable from 1".into() });
    }
    Ok(v)
}

/// The quasisymmetry function `η_{K,2}(t) = u^2/(1-u^2)`,
/// `u = φ_K(sqrt(t/(1+t)))`.
pub fn eta_k2(k: Dilatation, t: f64) -> Result<f64> {
    k.require_proper("eta_K2")?;
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::domain("eta_K2", format!("t = {t} must be non-negative")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let r = UnitRadius::saturating((t / (1.0 + t)).sqrt(), (1.0 / (1.0 + t)).sqrt());
    odds_squared(phi_k(k, r)?, "eta_K2")
}

/// `λ(K) = η_{K,2}(1)`, the sharp bound for the linear dilatation.
pub fn lambda_of_k(k: Dilatation) -> Result<f64> {
    k.require_proper("lambda")?;
    odds_squared(phi_k(k, UnitRadius::symmetric())?, "lambda")
}

/// Schottky's function `ψ(r,t) = η_{M,2}(t)`, `M = (1+r)/(1-r)`.
pub fn schottky_psi(r: f64, t: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain("schottky_psi", format!("r = {r} is not in [0,1)")));
    }
    if !(t > 0.0) {
        return Err(Error::domain("schottky_psi", format!("t = {t} must be positive")));
    }
    eta_k2(Dilatation::new((1.0 + r) / (1.0 - r))?, t)
}

/// The logistic point `q(x) = 1/(1+e^{-x})` with its complement.
fn logistic_radius(x: f64) -> UnitRadius {
    let q = 1.0 / (1.0 + (-x).exp());
    let one_minus_q = 1.0 / (1.0 + x.exp());
    UnitRadius::saturating(q, (one_minus_q * (1.0 + q)).sqrt())
}

/// `log(u/(1-u))` with `1 - u = u'^2/(1+u)`.
fn logit(u: UnitRadius) -> f64 {
    u.r().ln() - 2.0 * u.rc().ln() + u.r().ln_1p()
}

/// `g(x) = p(φ_K(q(x)))` with `p(x) = log(x/(1-x))` and `q = p⁻¹`.
pub fn linearized_g(k: Dilatation, x: f64) -> Result<f64> {
    check_finite("linearized_g", x)?;
    Ok(logit(phi_k(k, logistic_radius(x))?))
}

/// The same construction with `φ^a_K` in place of `φ_K`.
pub fn linearized_g_a(a: Signature, k: Dilatation, x: f64) -> Result<f64> {
    check_finite("linearized_g_a", x)?;
    Ok(logit(phi_ak(a, k, logistic_radius(x))?))
}

fn check_finite(func: &'static str, x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::domain(func, format!("x = {x} must be finite")));
    }
    Ok(())
}
