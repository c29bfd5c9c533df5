//! Closed-form constants and bounds from the distortion theory of
//! quasiconformal maps.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distortion::{phi_k, Dilatation};
use crate::error::{Error, Result};
use crate::modulus::tau2_inv;
use crate::radius::UnitRadius;
use crate::specfun::gamma_fn;

/// Identifies one closed-form constant or bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundId {
    /// `d(2,K) = exp(πK)`, Gehring's bound for the linear dilatation.
    GehringD2,
    /// `c(2,K) = 1 + τ₂⁻¹(τ₂(1)/K)`.
    VuorinenC2,
    /// `s(K) = exp(6 (K+1)^2 sqrt(K-1))`.
    SeittenrantaS,
    /// `64^{1-1/K}`, the constant in Mori's theorem.
    MoriConstant,
    /// `min{M^{3/2}, 2M-1}`, dilatation of the Beurling–Ahlfors extension.
    BeurlingAhlforsK,
    /// `sqrt((1+d)/(1-d))`, `d = |1-α|`: the least `K` for a triangle with
    /// least angle `απ`. Equality holds for every `α ∈ (0, 1/3]`.
    KuhnauTriangleK,
    /// `1 + (M-1)/4` for `M ∈ (1,2)`, a lower bound for `K(M)` under the
    /// triangle condition.
    AgardGehringLower,
    /// Explicit quasisymmetry function `η_{K,n}(t)` built from `s(K)` and
    /// the distortion function.
    EtaKnUpper,
    /// Hayman's bound `exp((π + log⁺t)(1+r)/(1-r))` for Schottky's function.
    HaymanSchottky,
    /// `ω_{n-1} = n π^{n/2} / Γ(1 + n/2)`.
    SurfaceArea,
}

/// A named parameter, optional when it has a default.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Param {
    pub name: &'static str,
    pub default: Option<f64>,
}

const fn req(name: &'static str) -> Param {
    Param { name, default: None }
}

const fn dim() -> Param {
    Param { name: "n", default: Some(2.0) }
}

impl BoundId {
    pub const ALL: [BoundId; 10] = [
        BoundId::GehringD2,
        BoundId::VuorinenC2,
        BoundId::SeittenrantaS,
        BoundId::MoriConstant,
        BoundId::BeurlingAhlforsK,
        BoundId::KuhnauTriangleK,
        BoundId::AgardGehringLower,
        BoundId::EtaKnUpper,
        BoundId::HaymanSchottky,
        BoundId::SurfaceArea,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::GehringD2 => "GehringD2",
            BoundId::VuorinenC2 => "VuorinenC2",
            BoundId::SeittenrantaS => "SeittenrantaS",
            BoundId::MoriConstant => "MoriConstant",
            BoundId::BeurlingAhlforsK => "BeurlingAhlforsK",
            BoundId::KuhnauTriangleK => "KuhnauTriangleK",
            BoundId::AgardGehringLower => "AgardGehringLower",
            BoundId::EtaKnUpper => "EtaKnUpper",
            BoundId::HaymanSchottky => "HaymanSchottky",
            BoundId::SurfaceArea => "SurfaceArea",
        }
    }

    /// Parameters in positional order.
    pub fn params(self) -> &'static [Param] {
        const K: [Param; 1] = [req("K")];
        const K_N: [Param; 2] = [req("K"), dim()];
        const M: [Param; 1] = [req("M")];
        const ALPHA: [Param; 1] = [req("alpha")];
        const K_T_N: [Param; 3] = [req("K"), req("t"), dim()];
        const R_T: [Param; 2] = [req("r"), req("t")];
        const N: [Param; 1] = [req("n")];
        match self {
            BoundId::GehringD2 | BoundId::VuorinenC2 => &K_N,
            BoundId::SeittenrantaS | BoundId::MoriConstant => &K,
            BoundId::BeurlingAhlforsK | BoundId::AgardGehringLower => &M,
            BoundId::KuhnauTriangleK => &ALPHA,
            BoundId::EtaKnUpper => &K_T_N,
            BoundId::HaymanSchottky => &R_T,
            BoundId::SurfaceArea => &N,
        }
    }

    /// Number of required parameters.
    pub fn arity(self) -> usize {
        self.params().iter().filter(|p| p.default.is_none()).count()
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain("BoundId", format!("unknown bound `{s}`")))
    }
}

/// Evaluates a bound at positional parameters (see [`BoundId::params`]);
/// trailing parameters with defaults may be omitted.
pub fn bound_value(id: BoundId, params: &[f64]) -> Result<f64> {
    let spec = id.params();
    if params.len() < id.arity() || params.len() > spec.len() {
        return Err(Error::domain(
            "bound_value",
            format!("{id} takes {} to {} parameters, got {}", id.arity(), spec.len(), params.len()),
        ));
    }
    let mut values = [0.0; 3];
    for (i, p) in spec.iter().enumerate() {
        let v = params.get(i).copied().or(p.default).unwrap_or(f64::NAN);
        if !v.is_finite() {
            return Err(Error::domain("bound_value", format!("{id}: {} = {v} is not finite", p.name)));
        }
        values[i] = v;
    }
    match id {
        BoundId::GehringD2 => {
            let k = dilatation(id, values[0])?;
            planar_only(id, values[1])?;
            Ok((PI * k).exp())
        }
        BoundId::VuorinenC2 => {
            let k = dilatation(id, values[0])?;
            planar_only(id, values[1])?;
            Ok(1.0 + tau2_inv(2.0 / k)?)
        }
        BoundId::SeittenrantaS => Ok(seittenranta_s(dilatation(id, values[0])?)),
        BoundId::MoriConstant => Ok(64f64.powf(1.0 - 1.0 / dilatation(id, values[0])?)),
        BoundId::BeurlingAhlforsK => {
            let m = values[0];
            if !(m >= 1.0) {
                return Err(entry_domain(id, format!("M = {m} must be at least 1")));
            }
            Ok(m.powf(1.5).min(2.0 * m - 1.0))
        }
        BoundId::KuhnauTriangleK => {
            let alpha = values[0];
            if !(alpha > 0.0 && alpha <= 1.0 / 3.0) {
                return Err(entry_domain(id, format!("alpha = {alpha} is not in (0, 1/3]")));
            }
            let d = (1.0 - alpha).abs();
            Ok(((1.0 + d) / (1.0 - d)).sqrt())
        }
        BoundId::AgardGehringLower => {
            let m = values[0];
            if !(m > 1.0 && m < 2.0) {
                return Err(entry_domain(id, format!("M = {m} is not in (1, 2)")));
            }
            Ok(1.0 + 0.25 * (m - 1.0))
        }
        BoundId::EtaKnUpper => eta_kn_upper(dilatation(id, values[0])?, values[1], dimension(id, values[2])?),
        BoundId::HaymanSchottky => {
            let (r, t) = (values[0], values[1]);
            if !(0.0..1.0).contains(&r) || !(t > 0.0) {
                return Err(entry_domain(id, format!("need r in [0,1) and t > 0, got r = {r}, t = {t}")));
            }
            Ok(((PI + t.ln().max(0.0)) * (1.0 + r) / (1.0 - r)).exp())
        }
        BoundId::SurfaceArea => surface_area(dimension(id, values[0])?),
    }
}

fn entry_domain(id: BoundId, detail: String) -> Error {
    Error::domain("bound_value", format!("{id}: {detail}"))
}

fn dilatation(id: BoundId, k: f64) -> Result<f64> {
    if !(k >= 1.0) {
        return Err(entry_domain(id, format!("K = {k} must be at least 1")));
    }
    Ok(k)
}

fn dimension(id: BoundId, n: f64) -> Result<u32> {
    if !(n >= 2.0 && n == n.floor() && n <= 1e6) {
        return Err(entry_domain(id, format!("n = {n} must be an integer >= 2")));
    }
    Ok(n as u32)
}

fn planar_only(id: BoundId, n: f64) -> Result<()> {
    if dimension(id, n)? != 2 {
        return Err(Error::Unsupported(format!(
            "{id} for n = {n}: the Teichmüller capacity τ_n(1) has no known closed form for n >= 3"
        )));
    }
    Ok(())
}

fn seittenranta_s(k: f64) -> f64 {
    (6.0 * (k + 1.0) * (k + 1.0) * (k - 1.0).sqrt()).exp()
}

/// `ω_{n-1} = n π^{n/2} / Γ(1 + n/2)`.
pub fn surface_area(n: u32) -> Result<f64> {
    let n = f64::from(n);
    Ok(n * PI.powf(0.5 * n) / gamma_fn(1.0 + 0.5 * n)?)
}

/// Three-branch explicit bound for `η_{K,n}(t)`. For `n ≥ 3` the distortion
/// function is replaced by its power bounds with `λ_n` at its upper
/// estimate `2e^{n-1}`, which keeps the result an upper bound.
fn eta_kn_upper(k: f64, t: f64, n: u32) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(entry_domain(BoundId::EtaKnUpper, format!("t = {t} must be non-negative")));
    }
    let at_one = seittenranta_s(k);
    if t == 0.0 {
        return Ok(0.0);
    }
    if t == 1.0 {
        return Ok(at_one);
    }
    if n == 2 {
        let k = Dilatation::new(k)?;
        if t < 1.0 {
            return Ok(at_one * phi_k(k, UnitRadius::new(t)?)?.r());
        }
        return Ok(at_one / phi_k(k.reciprocal(), UnitRadius::new(1.0 / t)?)?.r());
    }
    let lambda = 2.0 * (f64::from(n) - 1.0).exp();
    let alpha = k.powf(1.0 / (1.0 - f64::from(n)));
    if t < 1.0 {
        Ok(at_one * lambda.powf(1.0 - alpha) * t.powf(alpha))
    } else {
        let beta = 1.0 / alpha;
        Ok(at_one / (lambda.powf(1.0 - beta) * (1.0 / t).powf(beta)))
    }
}
