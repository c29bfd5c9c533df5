//! Residual formulas for every registered case.

use std::f64::consts::{LN_2, PI};

use super::CaseId;
use crate::distortion::{eta_k2, lambda_of_k, phi_ak, phi_k, Dilatation};
use crate::error::Result;
use crate::means::{ellint_k_unit, mean, mean_mod, MeanKind, PowerModification};
use crate::modulus::{agm_product_p, mu, mu_a, teichmuller_radius, Signature};
use crate::radius::UnitRadius;
use crate::specfun::{beta_fn, gauss_f_split, ramanujan_r_pos};

/// Step used by the monotonicity checks.
const MONOTONE_STEP: f64 = 0.01;

fn phi(k: f64, r: UnitRadius) -> Result<UnitRadius> {
    phi_k(Dilatation::general(k)?, r)
}

fn phi_third(k: f64, r: UnitRadius) -> Result<UnitRadius> {
    phi_ak(Signature::new(1.0 / 3.0)?, Dilatation::general(k)?, r)
}

/// `φ₂(r) = 2√r/(1+r)` with its exact complement `(1-r)/(1+r)`.
fn landen_radius(r: UnitRadius) -> UnitRadius {
    let x = r.r();
    UnitRadius::saturating(2.0 * x.sqrt() / (1.0 + x), (1.0 - x) / (1.0 + x))
}

fn slack(larger: f64, smaller: f64) -> f64 {
    (larger - smaller) / larger.abs().max(1.0)
}

/// `(xy)^{1/4} + (x'y')^{1/4}`, the common leading terms.
fn quarter_sum(x: UnitRadius, y: UnitRadius) -> f64 {
    (x.r() * y.r()).powf(0.25) + (x.rc() * y.rc()).powf(0.25)
}

/// `x y x' y'`.
fn cross(x: UnitRadius, y: UnitRadius) -> f64 {
    x.r() * y.r() * x.rc() * y.rc()
}

fn degree7_mixed(x: UnitRadius, y: UnitRadius) -> f64 {
    quarter_sum(x, y) - cross(x, y).powf(0.25) - ((1.0 + x.r() * y.r() + x.rc() * y.rc()) / 2.0).sqrt()
}

fn degree23(x: UnitRadius, y: UnitRadius) -> f64 {
    quarter_sum(x, y) + 2f64.powf(2.0 / 3.0) * cross(x, y).powf(1.0 / 12.0) - 1.0
}

fn fixed_point(k: f64) -> Result<(f64, f64)> {
    let u = phi(k, UnitRadius::symmetric())?;
    Ok((u.r(), u.r() * u.rc()))
}

fn radius(v: f64) -> Result<UnitRadius> {
    UnitRadius::new(v)
}

fn signature(a: f64) -> Result<Signature> {
    Signature::new(a)
}

pub(super) fn evaluate(case: CaseId, p: &[f64]) -> Result<f64> {
    use CaseId::*;
    Ok(match case {
        LJ3 => {
            let r = radius(p[0])?;
            let s = phi(1.0 / 3.0, r)?;
            (r.r() * s.r()).sqrt() + (r.rc() * s.rc()).sqrt() - 1.0
        }
        RamanujanE1 => {
            let r = radius(p[0])?;
            let s = phi(0.2, r)?;
            r.r() * s.r() + r.rc() * s.rc() + 2.0 * (16.0 * cross(r, s).powi(2)).powf(1.0 / 6.0) - 1.0
        }
        RamanujanE2 => {
            let r = radius(p[0])?;
            quarter_sum(r, phi(1.0 / 7.0, r)?) - 1.0
        }
        RamanujanE3 => {
            let r = radius(p[0])?;
            let s = phi(1.0 / 3.0, r)?;
            let g = phi(1.0 / 9.0, r)?;
            (r.r() * g.rc()).powf(0.25) + (g.r() * r.rc()).powf(0.25)
                - 2f64.powf(1.0 / 3.0) * (s.r() * s.rc()).powf(1.0 / 12.0)
        }
        RamanujanE4 => {
            let r = radius(p[0])?;
            degree23(r, phi(1.0 / 23.0, r)?)
        }
        RamanujanE5a => {
            let r = radius(p[0])?;
            degree7_mixed(r, phi(1.0 / 7.0, r)?)
        }
        RamanujanE5b => {
            let r = radius(p[0])?;
            degree7_mixed(phi(1.0 / 3.0, r)?, phi(0.2, r)?)
        }
        PhiId1 => {
            let s = radius(p[0])?;
            let (x, y) = (phi(5f64.sqrt(), s)?, phi(1.0 / 5f64.sqrt(), s)?);
            x.r() * y.r() + x.rc() * y.rc() + 2f64.powf(5.0 / 3.0) * cross(x, y).powf(1.0 / 3.0) - 1.0
        }
        PhiId2 => {
            let s = radius(p[0])?;
            quarter_sum(phi(7f64.sqrt(), s)?, phi(1.0 / 7f64.sqrt(), s)?) - 1.0
        }
        PhiId3 => {
            let s = radius(p[0])?;
            let (x, y) = (phi(3.0, s)?, phi(3.0, s.swap())?);
            quarter_sum(x, y) - 2f64.powf(1.0 / 3.0) * (s.r() * s.rc()).powf(1.0 / 12.0)
        }
        PhiId4 => {
            let s = radius(p[0])?;
            degree23(phi(1.0 / 23f64.sqrt(), s)?, phi(23f64.sqrt(), s.swap())?)
        }
        PhiId4Unprimed => {
            let s = radius(p[0])?;
            degree23(phi(1.0 / 23f64.sqrt(), s)?, phi(23f64.sqrt(), s)?)
        }
        PhiId5 => {
            let s = radius(p[0])?;
            degree7_mixed(phi((5.0f64 / 3.0).sqrt(), s)?, phi((3.0f64 / 5.0).sqrt(), s)?)
        }
        Fixed1 => {
            let (_, w) = fixed_point(5f64.sqrt())?;
            2.0 * w + 2f64.powf(5.0 / 3.0) * w.powf(2.0 / 3.0) - 1.0
        }
        Fixed2 => {
            let (_, w) = fixed_point(7f64.sqrt())?;
            2.0 * w.powf(0.25) - 1.0
        }
        Fixed3 => {
            let u = phi(3.0, UnitRadius::symmetric())?;
            u.r().sqrt() + u.rc().sqrt() - 2f64.powf(0.25)
        }
        Fixed4 => {
            let (_, w) = fixed_point(23f64.sqrt())?;
            2.0 * w.powf(0.25) + 2f64.powf(2.0 / 3.0) * w.powf(1.0 / 6.0) - 1.0
        }
        Fixed5 => {
            let (_, w) = fixed_point((5.0f64 / 3.0).sqrt())?;
            2.0 * w.powf(0.25) - w.sqrt() - ((1.0 + 2.0 * w) / 2.0).sqrt()
        }
        BBG2 | BBG5 | BBG11 => {
            let r = radius(p[0])?;
            let degree = match case {
                BBG2 => 2.0,
                BBG5 => 5.0,
                _ => 11.0,
            };
            let s = phi_third(1.0 / degree, r)?;
            let (u, v) = (r.r() * s.r(), r.rc() * s.rc());
            let base = u.powf(2.0 / 3.0) + v.powf(2.0 / 3.0) - 1.0;
            let w = u * v;
            match case {
                BBG2 => base,
                BBG5 => base + 3.0 * w.powf(1.0 / 3.0),
                _ => {
                    base + 6.0 * w.powf(1.0 / 3.0)
                        + 3.0 * 3f64.sqrt() * w.powf(1.0 / 6.0) * (u.powf(1.0 / 3.0) + v.powf(1.0 / 3.0))
                }
            }
        }
        Landen => {
            let r = radius(p[0])?;
            ellint_k_unit(landen_radius(r))? / ((1.0 + r.r()) * ellint_k_unit(r)?) - 1.0
        }
        LandenIneq => {
            let (a, b) = (p[0], p[1]);
            let r = radius(p[2])?;
            let l = landen_radius(r);
            let lhs = gauss_f_split(a, b, a + b, l.r2(), l.rc2())?;
            let rhs = (1.0 + r.r()) * gauss_f_split(a, b, a + b, r.r2(), r.rc2())?;
            slack(rhs, lhs)
        }
        RamIdCase => {
            let (a, x) = (p[0], p[1]);
            let y = 1.0 - x;
            let lhs = gauss_f_split(1.0 + a, 2.0 - a, 2.0, y, x)? * gauss_f_split(a, 1.0 - a, 1.0, x, y)?
                + gauss_f_split(1.0 + a, 2.0 - a, 2.0, x, y)? * gauss_f_split(a, 1.0 - a, 1.0, y, x)?;
            let rhs = (PI * a).sin() / (PI * a * (1.0 - a) * x * y);
            lhs / rhs - 1.0
        }
        PhiGroup1 => {
            let (k, r) = (p[0], radius(p[1])?);
            phi(k, r)?.r2() + phi(1.0 / k, r.swap())?.r2() - 1.0
        }
        PhiGroup2 => {
            let (a, b, r) = (p[0], p[1], radius(p[2])?);
            phi(a, phi(b, r)?)?.r() - phi(a * b, r)?.r()
        }
        PhiGroup3 => {
            let (k, r) = (p[0], radius(p[1])?);
            phi(1.0 / k, phi(k, r)?)?.r() - r.r()
        }
        PhiGroup4 => {
            let r = radius(p[0])?;
            phi(2.0, r)?.r() - 2.0 * r.r().sqrt() / (1.0 + r.r())
        }
        MuSubLower | MuSubUpper => {
            let a = signature(p[0])?;
            let (r, s) = (radius(p[1])?, radius(p[2])?);
            let (u, v) = (r.r() * s.r(), r.rc() * s.rc());
            let d = 1.0 + u + v;
            let m = UnitRadius::saturating((2.0 * u / d).sqrt(), ((1.0 - u + v) / d).sqrt());
            let mid = 2.0 * mu_a(a, m)?;
            if case == MuSubLower {
                slack(mid, mu_a(a, r)? + mu_a(a, s)?)
            } else {
                slack(2.0 * mu_a(a, radius(u.sqrt())?)?, mid)
            }
        }
        MuSuper => {
            let a = signature(p[0])?;
            let (r, t) = (radius(p[1])?, radius(p[2])?);
            let w = radius((r.r() + t.r()) / (1.0 + r.r() * t.r() + r.rc() * t.rc()))?;
            slack(mu_a(a, r)? + mu_a(a, t)?, 2.0 * mu_a(a, w)?)
        }
        MuDupLower | MuDupUpper => {
            let a = signature(p[0])?;
            let r = radius(p[1])?;
            let m = mu_a(a, r)?;
            let doubled = 2.0 * mu_a(a, landen_radius(r))?;
            if case == MuDupLower {
                slack(doubled, m)
            } else {
                let c = 1.0 + (PI * a.get()).sin() / PI * (a.ramanujan_constant() - 4.0 * LN_2);
                slack(c.powi(2).min(2.0) * m, doubled)
            }
        }
        MuProdLower | MuProdUpper => {
            let a = signature(p[0])?;
            let r = radius(p[1])?;
            let v = r.r() * mu_a(a, r)?.exp();
            let prod = agm_product_p(r);
            if case == MuProdLower {
                slack(v, prod)
            } else {
                slack(a.ramanujan_constant().exp() / 16.0 * prod, v)
            }
        }
        MeanChain => {
            let (x, y) = (p[0], p[1]);
            let chain = [
                mean(MeanKind::Geometric, x, y)?,
                mean(MeanKind::Logarithmic, x, y)?,
                mean(MeanKind::ArithmeticGeometric, x, y)?,
                mean_mod(MeanKind::Logarithmic, PowerModification::new(1.5)?, x, y)?,
                mean(MeanKind::Arithmetic, x, y)?,
            ];
            chain.windows(2).map(|w| slack(w[1], w[0])).fold(f64::INFINITY, f64::min)
        }
        KBracketLower | KBracketUpper => {
            let r = radius(p[0])?;
            let k = ellint_k_unit(r)?;
            let l = (4.0 / r.rc()).ln();
            if case == KBracketLower {
                slack(k, 9.0 / (8.0 + r.r2()) * l)
            } else {
                slack(4.0 / (3.0 + r.r2()) * l, k)
            }
        }
        LambdaBracketLower | LambdaBracketUpper => {
            let k = p[0];
            let lambda = lambda_of_k(Dilatation::new(k)?)?;
            if case == LambdaBracketLower {
                slack(lambda, (PI * (k - 1.0)).exp())
            } else {
                slack((PI * (k - 1.0 / k)).exp(), lambda)
            }
        }
        QiuBracket => {
            let (k, t) = (p[0], p[1]);
            let lhs = 16.0 * eta_k2(Dilatation::new(k)?, t)?;
            // μ(1) = 0 in the limit; the saturated radius would give about 3.5e-3.
            let b = if t == 0.0 { 1.0 } else { (2.0 * mu(teichmuller_radius(t))?).exp() };
            let rhs = (16.0 * t + b.powf(k) - b).min((16.0 * t + 8.0).powf(k) - 8.0);
            slack(rhs, lhs)
        }
        MuLogMonotone => {
            let f = |x: f64| -> Result<f64> { Ok(mu(radius(x)?)? + x.ln()) };
            let x = p[0];
            slack(f(x)?, f(step(x))?)
        }
        KLogMonotone => {
            let f = |x: f64| -> Result<f64> {
                let r = radius(x)?;
                Ok(ellint_k_unit(r)? / (4.0 / r.rc()).ln())
            };
            let x = p[0];
            slack(f(x)?, f(step(x))?)
        }
        ZeroBalancedMonotone => {
            let (a, b, x) = (p[0], p[1], p[2]);
            let beta = beta_fn(a, b)?;
            let f = |x: f64| -> Result<f64> { Ok(beta * gauss_f_split(a, b, a + b, x, 1.0 - x)? + (-x).ln_1p() / x) };
            let upper = f(step(x))?;
            // The range is (B - 1, R); check the endpoints bracket the values too.
            debug_assert!(upper < ramanujan_r_pos(a, b) + 1e-9);
            slack(upper, f(x)?)
        }
    })
}

/// The next point of a monotonicity check, kept inside `(0,1)`.
fn step(x: f64) -> f64 {
    if x + MONOTONE_STEP < 1.0 {
        x + MONOTONE_STEP
    } else {
        0.5 * (x + 1.0)
    }
}
