//! The Grötzsch modulus `μ(r)`, the signature-`a` modulus `μ_a(r)`, their
//! inverses, and the planar Grötzsch and Teichmüller capacities.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, LN_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::means::agm;
use crate::radius::UnitRadius;
use crate::specfun::{gauss_f_split, ramanujan_r_pos};

/// Iteration cap of the safeguarded Newton inversions.
pub const NEWTON_MAX_ITER: usize = 100;

/// Below this radius `r^2` is no longer representable relative to one and
/// `μ_a` is taken from its logarithmic asymptote.
const ASYMPTOTE_RADIUS: f64 = 1e-150;

/// The signature parameter `a ∈ (0, 1/2]` of `μ_a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Signature(f64);

impl Signature {
    pub fn new(a: f64) -> Result<Self> {
        if !(a > 0.0 && a <= 0.5) {
            return Err(Error::domain("Signature", format!("a = {a} is not in (0, 1/2]")));
        }
        Ok(Signature(a))
    }

    /// `a = 1/2`, for which `μ_a = μ`.
    pub fn half() -> Self {
        Signature(0.5)
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `π / (2 sin πa)`, the value of `μ_a` at `1/sqrt(2)`.
    pub fn symmetric_value(self) -> f64 {
        FRAC_PI_2 / (PI * self.0).sin()
    }

    /// `R(a, 1-a)`.
    pub fn ramanujan_constant(self) -> f64 {
        ramanujan_r_pos(self.0, 1.0 - self.0)
    }
}

/// `μ(r) = (π/2) K(r') / K(r)`.
pub fn mu(r: UnitRadius) -> Result<f64> {
    Ok(FRAC_PI_2 * agm(1.0, r.rc())? / agm(1.0, r.r())?)
}

/// `dμ/dr = -AG(1,r')^2 / (r r'^2)`.
pub fn mu_derivative(r: UnitRadius) -> Result<f64> {
    let ag = agm(1.0, r.rc())?;
    Ok(-ag * ag / (r.r() * r.rc2()))
}

/// `μ_a(r) = (π / (2 sin πa)) F(a,1-a;1;r'^2) / F(a,1-a;1;r^2)`.
pub fn mu_a(a: Signature, r: UnitRadius) -> Result<f64> {
    let s = a.symmetric_value();
    if r.r() < ASYMPTOTE_RADIUS {
        return Ok(small_radius_asymptote(a, r.r()));
    }
    if r.rc() < ASYMPTOTE_RADIUS {
        return Ok(s * s / small_radius_asymptote(a, r.rc()));
    }
    let a = a.get();
    let top = gauss_f_split(a, 1.0 - a, 1.0, r.rc2(), r.r2())?;
    let bottom = gauss_f_split(a, 1.0 - a, 1.0, r.r2(), r.rc2())?;
    Ok(s * top / bottom)
}

// μ_a(r) = R(a,1-a)/2 - log r + O(r^2 log r).
fn small_radius_asymptote(a: Signature, r: f64) -> f64 {
    0.5 * a.ramanujan_constant() - r.ln()
}

/// `dμ_a/dr = -1 / (r r'^2 F(a,1-a;1;r^2)^2)`.
pub fn mu_a_derivative(a: Signature, r: UnitRadius) -> Result<f64> {
    let a = a.get();
    let f = gauss_f_split(a, 1.0 - a, 1.0, r.r2(), r.rc2())?;
    Ok(-1.0 / (r.r() * r.rc2() * f * f))
}

/// `μ⁻¹(y)` for `y > 0`.
///
/// Values `y ≥ π/2` are solved for `r ≤ 1/sqrt(2)` directly; smaller values go
/// through `μ(r) μ(r') = π²/4` so that the complement of a radius close to one
/// keeps full relative precision.
pub fn mu_inv(y: f64) -> Result<UnitRadius> {
    invert(y, FRAC_PI_2, "mu_inv", |x| {
        let ag = agm(1.0, x.rc())?;
        Ok((mu(x)?, -ag * ag / (x.r() * x.rc2())))
    })
}

/// `μ_a⁻¹(y)` for `y > 0`, with the derivative taken from `mu_a_derivative`.
pub fn mu_a_inv(a: Signature, y: f64) -> Result<UnitRadius> {
    invert(y, a.symmetric_value(), "mu_a_inv", |x| Ok((mu_a(a, x)?, mu_a_derivative(a, x)?)))
}

fn invert<F>(y: f64, symmetric: f64, func: &'static str, eval: F) -> Result<UnitRadius>
where
    F: Fn(UnitRadius) -> Result<(f64, f64)>,
{
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain(func, format!("y = {y} must be positive and finite")));
    }
    if y == symmetric {
        return Ok(UnitRadius::symmetric());
    }
    if y > symmetric {
        return solve_small(y, func, &eval);
    }
    // μ(r) μ(r') = symmetric² exchanges the two halves of the interval.
    Ok(solve_small(symmetric * symmetric / y, func, &eval)?.swap())
}

/// Safeguarded Newton for `f(x) = y` on `x ∈ (0, 1/sqrt(2)]`, `f` decreasing.
fn solve_small<F>(y: f64, func: &'static str, eval: &F) -> Result<UnitRadius>
where
    F: Fn(UnitRadius) -> Result<(f64, f64)>,
{
    let tiny = UnitRadius::new(f64::MIN_POSITIVE)?;
    if eval(tiny)?.0 < y {
        return Err(Error::Underflow { func });
    }
    let (mut lo, mut hi) = (f64::MIN_POSITIVE, FRAC_1_SQRT_2);
    let mut x = (1.0 / y.cosh()).clamp(lo, hi);
    for _ in 0..NEWTON_MAX_ITER {
        let point = UnitRadius::new(x)?;
        let (value, slope) = eval(point)?;
        let residual = value - y;
        if residual == 0.0 {
            return Ok(point);
        }
        if residual > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let mut next = x - residual / slope;
        if !(next > lo && next < hi) {
            next = if hi / lo > 4.0 { (lo.sqrt() * hi.sqrt()).max(lo) } else { 0.5 * (lo + hi) };
        }
        if (next - x).abs() <= 2.0 * f64::EPSILON * x || hi - lo <= 2.0 * f64::EPSILON * hi {
            return UnitRadius::new(next);
        }
        x = next;
    }
    Err(Error::NonConvergence { func, iterations: NEWTON_MAX_ITER })
}

/// Iterates of the plain (unsafeguarded) Newton scheme for `μ(x) = y`
/// started at `x₀ = 1/cosh y`. Iteration stops early if an iterate leaves
/// `(0,1)` (the last entry is then the offending value) or once a step is at
/// rounding level.
pub fn newton_trace(y: f64, steps: usize) -> Result<Vec<f64>> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("newton_trace", format!("y = {y} must be positive and finite")));
    }
    let mut x = 1.0 / y.cosh();
    let mut out = vec![x];
    for _ in 0..steps {
        let Ok(point) = UnitRadius::new(x) else { break };
        let ag = agm(1.0, point.rc())?;
        let next = x + (mu(point)? - y) * (x - x * x * x) / (ag * ag);
        out.push(next);
        if (next - x).abs() <= 16.0 * f64::EPSILON * x {
            break;
        }
        x = next;
    }
    Ok(out)
}

/// The Grötzsch capacity `γ₂(s) = 2π / μ(1/s)`, `s > 1`.
pub fn grotzsch_gamma2(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain("grotzsch_gamma2", format!("s = {s} must exceed 1")));
    }
    let r = UnitRadius::from_pair(1.0 / s, ((s - 1.0) * (s + 1.0)).sqrt() / s)?;
    Ok(2.0 * PI / mu(r)?)
}

/// The Teichmüller capacity `τ₂(t) = π / μ(1/sqrt(1+t))`, `t > 0`.
pub fn teichmuller_tau2(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain("teichmuller_tau2", format!("t = {t} must be positive")));
    }
    Ok(PI / mu(teichmuller_radius(t))?)
}

/// `1/sqrt(1+t)` with complement `sqrt(t/(1+t))`.
pub(crate) fn teichmuller_radius(t: f64) -> UnitRadius {
    let r = 1.0 / (1.0 + t).sqrt();
    UnitRadius::saturating(r, (t / (1.0 + t)).sqrt())
}

/// `τ₂⁻¹(y) = (r'/r)^2` with `r = μ⁻¹(π/y)`.
pub fn tau2_inv(y: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("tau2_inv", format!("y = {y} must be positive")));
    }
    let r = mu_inv(PI / y)?;
    let q = r.rc() / r.r();
    Ok(q * q)
}

/// `p = Π_{n≥0} (1 + r_n)^{2^{-n}}` with `r_0 = r'` and
/// `r_n = 2 sqrt(r_{n-1}) / (1 + r_{n-1})`.
pub fn agm_product_p(r: UnitRadius) -> f64 {
    let mut rn = r.rc();
    let mut log_p = rn.ln_1p();
    let mut weight = 1.0;
    for _ in 0..60 {
        rn = 2.0 * rn.sqrt() / (1.0 + rn);
        weight *= 0.5;
        if 1.0 - rn < 1e-16 {
            // Every remaining factor is 2; their weights sum to `2 * weight`.
            return (log_p + 2.0 * weight * LN_2).exp();
        }
        log_p += weight * rn.ln_1p();
    }
    log_p.exp()
}
