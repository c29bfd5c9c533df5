//! The scalar functions reachable from `eval`, `invert` and `table`.

use clap::ValueEnum;
use serde_json::{Map, Value};

use conformal_core::distortion::{
    eta_k2, lambda_of_k, linearized_g, linearized_g_a, phi_ak, phi_k, schottky_psi, Dilatation,
};
use conformal_core::means::{agm, ellint_k, ellint_kprime};
use conformal_core::modulus::{
    agm_product_p, grotzsch_gamma2, mu, mu_a, mu_a_derivative, mu_a_inv, mu_derivative, mu_inv, tau2_inv,
    teichmuller_tau2, Signature,
};
use conformal_core::specfun::{beta_fn, digamma_fn, gamma_fn, gauss_f, ramanujan_r, HypergeomParams};
use conformal_core::{Error, Result, UnitRadius};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Func {
    /// μ(r), or μ_a(r) with --a
    Mu,
    /// dμ/dr, or dμ_a/dr with --a
    #[value(name = "mu_prime")]
    MuPrime,
    /// K(r)
    #[value(name = "K", alias = "k")]
    K,
    /// K'(r) = K(r')
    #[value(name = "Kprime", alias = "kprime")]
    Kprime,
    /// AG(x, y)
    Agm,
    /// φ_K(r), or φ^a_K(r) with --a
    #[value(name = "phiK")]
    PhiK,
    /// η_{K,2}(t)
    Eta,
    /// λ(K)
    Lambda,
    /// Γ(x)
    Gamma,
    /// ψ(x)
    Digamma,
    /// B(a, b)
    Beta,
    /// R(a, b)
    R,
    /// F(a, b; c; r)
    F,
    /// γ₂(s)
    Gamma2,
    /// τ₂(t)
    Tau2,
    /// The AGM product p(r)
    #[value(name = "agm_product")]
    AgmProduct,
    /// Logit-linearized distortion g(x), with --a for φ^a_K
    G,
    /// Schottky's ψ(r, t)
    Schottky,
}

/// Values of the named parameters given on the command line.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct Params {
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long = "K")]
    pub k: Option<f64>,
    /// Signature for μ_a and φ^a_K (default 1/2), or the first
    /// hypergeometric parameter
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub t: Option<f64>,
    #[arg(long)]
    pub x: Option<f64>,
    #[arg(long)]
    pub y: Option<f64>,
    #[arg(long)]
    pub s: Option<f64>,
}

impl Params {
    pub fn get(&self, name: &str) -> Option<f64> {
        match name {
            "r" => self.r,
            "K" => self.k,
            "a" => self.a,
            "b" => self.b,
            "c" => self.c,
            "t" => self.t,
            "x" => self.x,
            "y" => self.y,
            "s" => self.s,
            _ => None,
        }
    }

    pub fn set(&mut self, name: &str, v: f64) {
        let slot = match name {
            "r" => &mut self.r,
            "K" => &mut self.k,
            "a" => &mut self.a,
            "b" => &mut self.b,
            "c" => &mut self.c,
            "t" => &mut self.t,
            "x" => &mut self.x,
            "y" => &mut self.y,
            "s" => &mut self.s,
            _ => return,
        };
        *slot = Some(v);
    }

    /// The given parameters as a JSON object, in a fixed order.
    pub fn to_json(&self, skip: Option<&str>) -> Value {
        let mut m = Map::new();
        for name in ["r", "K", "a", "b", "c", "t", "x", "y", "s"] {
            if Some(name) == skip {
                continue;
            }
            if let Some(v) = self.get(name) {
                m.insert(name.to_string(), Value::from(v));
            }
        }
        Value::Object(m)
    }
}

impl Func {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }

    /// Required parameters; the last one is the default sweep variable.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Func::Mu | Func::MuPrime | Func::K | Func::Kprime | Func::AgmProduct => &["r"],
            Func::Agm => &["x", "y"],
            Func::PhiK => &["K", "r"],
            Func::Eta => &["K", "t"],
            Func::Lambda => &["K"],
            Func::Gamma | Func::Digamma => &["x"],
            Func::Beta | Func::R => &["a", "b"],
            Func::F => &["a", "b", "c", "r"],
            Func::Gamma2 => &["s"],
            Func::Tau2 => &["t"],
            Func::G => &["K", "x"],
            Func::Schottky => &["r", "t"],
        }
    }

    fn uses_signature(self) -> bool {
        matches!(self, Func::Mu | Func::MuPrime | Func::PhiK | Func::G)
    }
}

fn need(p: &Params, name: &str, f: Func) -> Result<f64> {
    p.get(name).ok_or_else(|| Error::Unsupported(format!("{} needs --{name}", f.name())))
}

/// The signature from `--a`, or `None` for the classical case `a = 1/2`.
fn signature(p: &Params) -> Result<Option<Signature>> {
    match p.a {
        None => Ok(None),
        Some(0.5) => Ok(None),
        Some(a) => Signature::new(a).map(Some),
    }
}

pub fn evaluate(f: Func, p: &Params) -> Result<f64> {
    let v = |name: &str| need(p, name, f);
    let sig = if f.uses_signature() { signature(p)? } else { None };
    match f {
        Func::Mu => {
            let r = UnitRadius::new(v("r")?)?;
            sig.map_or_else(|| mu(r), |a| mu_a(a, r))
        }
        Func::MuPrime => {
            let r = UnitRadius::new(v("r")?)?;
            sig.map_or_else(|| mu_derivative(r), |a| mu_a_derivative(a, r))
        }
        Func::K => ellint_k(v("r")?),
        Func::Kprime => ellint_kprime(v("r")?),
        Func::Agm => agm(v("x")?, v("y")?),
        Func::PhiK => {
            let (k, r) = (Dilatation::general(v("K")?)?, UnitRadius::new(v("r")?)?);
            Ok(sig.map_or_else(|| phi_k(k, r), |a| phi_ak(a, k, r))?.r())
        }
        Func::Eta => eta_k2(Dilatation::new(v("K")?)?, v("t")?),
        Func::Lambda => lambda_of_k(Dilatation::new(v("K")?)?),
        Func::Gamma => gamma_fn(v("x")?),
        Func::Digamma => digamma_fn(v("x")?),
        Func::Beta => beta_fn(v("a")?, v("b")?),
        Func::R => ramanujan_r(v("a")?, v("b")?),
        Func::F => gauss_f(HypergeomParams::new(v("a")?, v("b")?, v("c")?)?, v("r")?),
        Func::Gamma2 => grotzsch_gamma2(v("s")?),
        Func::Tau2 => teichmuller_tau2(v("t")?),
        Func::AgmProduct => Ok(agm_product_p(UnitRadius::new(v("r")?)?)),
        Func::G => {
            let (k, x) = (Dilatation::new(v("K")?)?, v("x")?);
            sig.map_or_else(|| linearized_g(k, x), |a| linearized_g_a(a, k, x))
        }
        Func::Schottky => schottky_psi(v("r")?, v("t")?),
    }
}

/// Functions that `invert` supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Invertible {
    /// r with μ(r) = y, or μ_a(r) = y with --a
    Mu,
    /// t with τ₂(t) = y
    Tau2,
}

/// The inverse value, with the complement `r'` for the modulus.
pub fn invert(f: Invertible, y: f64, a: Option<f64>) -> Result<(f64, Option<f64>)> {
    match f {
        Invertible::Mu => {
            let sig = signature(&Params { a, ..Params::default() })?;
            let r = sig.map_or_else(|| mu_inv(y), |s| mu_a_inv(s, y))?;
            Ok((r.r(), Some(r.rc())))
        }
        Invertible::Tau2 => Ok((tau2_inv(y)?, None)),
    }
}
