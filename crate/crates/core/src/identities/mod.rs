//! A registry of modular equations, functional identities and inequalities
//! that can be evaluated as residuals over parameter grids.
//!
//! Equality cases return the signed residual `lhs - rhs`. Inequality and
//! monotonicity cases return a slack that is non-negative when the statement
//! holds, scaled by `max(1, |larger side|)`. In a [`ResidualReport`] the
//! field `max_residual` is the largest `|residual|` for equalities and the
//! largest negated slack for the others, so a case passes exactly when
//! `max_residual <= tolerance`.

mod cases;
pub mod experiments;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CaseKind {
    Equality,
    Inequality,
    MonotoneProperty,
}

/// Domain of one case parameter; also selects its default grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParamKind {
    /// `r ∈ (0,1)`.
    Radius,
    /// `a ∈ (0, 1/2]`.
    Signature,
    /// `a ∈ (0,1)`, a hypergeometric parameter.
    UnitParameter,
    /// `K ≥ 1`.
    Dilatation,
    /// `K ≥ 1`, with `K = 1` in the default grid.
    DilatationFromOne,
    /// `K > 0`.
    PositiveDilatation,
    /// `t ≥ 0`.
    NonNegative,
    /// `x > 0`.
    Positive,
}

impl ParamKind {
    fn contains(self, v: f64) -> bool {
        if !v.is_finite() {
            return false;
        }
        match self {
            ParamKind::Radius | ParamKind::UnitParameter => v > 0.0 && v < 1.0,
            ParamKind::Signature => v > 0.0 && v <= 0.5,
            ParamKind::Dilatation | ParamKind::DilatationFromOne => v >= 1.0,
            ParamKind::PositiveDilatation | ParamKind::Positive => v > 0.0,
            ParamKind::NonNegative => v >= 0.0,
        }
    }

    /// The default grid for parameters of this kind.
    pub fn default_grid(self) -> Vec<f64> {
        match self {
            ParamKind::Radius => (1..=19).map(|i| f64::from(i) * 0.05).collect(),
            ParamKind::Signature | ParamKind::UnitParameter => vec![1.0 / 6.0, 0.25, 1.0 / 3.0, 0.5],
            ParamKind::Dilatation | ParamKind::PositiveDilatation => vec![1.01, 1.1, 1.5, 2.0, 3.0, 5.0],
            ParamKind::DilatationFromOne => vec![1.0, 1.01, 1.1, 1.5, 2.0, 3.0, 5.0],
            ParamKind::NonNegative => vec![0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0],
            ParamKind::Positive => vec![0.1, 0.5, 1.0, 2.0, 10.0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseParam {
    pub name: &'static str,
    pub kind: ParamKind,
}

const EQ_TOL: f64 = 1e-9;
const EQ_TOL_NESTED: f64 = 1e-8;
const INEQ_TOL: f64 = 1e-11;
/// Tolerance for the slack at the stated points of equality of an inequality.
pub const EQUALITY_LOCUS_TOL: f64 = 1e-9;

macro_rules! registry {
    ($( $(#[$doc:meta])* $id:ident : $kind:ident [$($p:literal : $pk:ident),*] $tol:expr; )*) => {
        /// Every registered identity, inequality and monotonicity statement.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        pub enum CaseId {
            $( $(#[$doc])* $id, )*
        }

        impl CaseId {
            pub const ALL: &'static [CaseId] = &[$(CaseId::$id),*];

            pub fn name(self) -> &'static str {
                match self { $(CaseId::$id => stringify!($id),)* }
            }

            pub fn kind(self) -> CaseKind {
                match self { $(CaseId::$id => CaseKind::$kind,)* }
            }

            pub fn params(self) -> &'static [CaseParam] {
                match self {
                    $(CaseId::$id => &[$(CaseParam { name: $p, kind: ParamKind::$pk }),*],)*
                }
            }

            pub fn default_tolerance(self) -> f64 {
                match self { $(CaseId::$id => $tol,)* }
            }
        }
    };
}

registry! {
    /// Legendre–Jacobi modular equation of order 3.
    LJ3: Equality ["r": Radius] EQ_TOL;
    /// Ramanujan's equation of degree 5.
    RamanujanE1: Equality ["r": Radius] EQ_TOL;
    /// Ramanujan's equation of degree 7.
    RamanujanE2: Equality ["r": Radius] EQ_TOL;
    /// Ramanujan's mixed equation of degrees 1, 3, 9.
    RamanujanE3: Equality ["r": Radius] EQ_TOL_NESTED;
    /// Ramanujan's equation of degree 23.
    RamanujanE4: Equality ["r": Radius] EQ_TOL;
    /// Degree-7 form with `α = r²`, `β = φ_{1/7}(r)²`.
    RamanujanE5a: Equality ["r": Radius] EQ_TOL;
    /// The same equation with `α = φ_{1/3}(r)²`, `β = φ_{1/5}(r)²`.
    RamanujanE5b: Equality ["r": Radius] EQ_TOL;
    PhiId1: Equality ["s": Radius] EQ_TOL;
    PhiId2: Equality ["s": Radius] EQ_TOL;
    PhiId3: Equality ["s": Radius] EQ_TOL;
    /// Degree-23 identity with `y = φ_{√23}(s')`.
    PhiId4: Equality ["s": Radius] EQ_TOL;
    PhiId5: Equality ["s": Radius] EQ_TOL;
    /// Degree-23 identity with `y = φ_{√23}(s)`.
    PhiId4Unprimed: Equality ["s": Radius] EQ_TOL;
    Fixed1: Equality [] EQ_TOL;
    Fixed2: Equality [] EQ_TOL;
    Fixed3: Equality [] EQ_TOL;
    Fixed4: Equality [] EQ_TOL;
    Fixed5: Equality [] EQ_TOL;
    /// Signature 3, degree 2.
    BBG2: Equality ["r": Radius] EQ_TOL;
    /// Signature 3, degree 5.
    BBG5: Equality ["r": Radius] EQ_TOL;
    /// Signature 3, degree 11.
    BBG11: Equality ["r": Radius] EQ_TOL_NESTED;
    /// `K(2√r/(1+r)) = (1+r) K(r)`, relative residual.
    Landen: Equality ["r": Radius] EQ_TOL;
    /// `F(a,b;a+b;(2√r/(1+r))²) ≤ (1+r) F(a,b;a+b;r²)` for `a + b ≤ 1`.
    LandenIneq: Inequality ["a": UnitParameter, "b": UnitParameter, "r": Radius] INEQ_TOL;
    /// Cross-product identity for `F(a,1-a;1;·)` and `F(1+a,2-a;2;·)`, relative residual.
    RamIdCase: Equality ["a": UnitParameter, "r": Radius] EQ_TOL;
    /// `φ_K(r)² + φ_{1/K}(r')² = 1`.
    PhiGroup1: Equality ["K": PositiveDilatation, "r": Radius] EQ_TOL;
    /// `φ_A(φ_B(r)) = φ_{AB}(r)`.
    PhiGroup2: Equality ["A": PositiveDilatation, "B": PositiveDilatation, "r": Radius] EQ_TOL;
    /// `φ_{1/K}(φ_K(r)) = r`.
    PhiGroup3: Equality ["K": PositiveDilatation, "r": Radius] EQ_TOL;
    /// `φ₂(r) = 2√r/(1+r)`.
    PhiGroup4: Equality ["r": Radius] EQ_TOL;
    /// `μ_a(r) + μ_a(s) ≤ 2μ_a(sqrt(2rs/(1+rs+r's')))`.
    MuSubLower: Inequality ["a": Signature, "r": Radius, "s": Radius] INEQ_TOL;
    /// `2μ_a(sqrt(2rs/(1+rs+r's'))) ≤ 2μ_a(sqrt(rs))`.
    MuSubUpper: Inequality ["a": Signature, "r": Radius, "s": Radius] INEQ_TOL;
    /// `2μ_a((r+t)/(1+rt+r't')) ≤ μ_a(r) + μ_a(t)`.
    MuSuper: Inequality ["a": Signature, "r": Radius, "t": Radius] INEQ_TOL;
    /// `μ_a(r) ≤ 2μ_a(2√r/(1+r))`.
    MuDupLower: Inequality ["a": Signature, "r": Radius] INEQ_TOL;
    /// `2μ_a(2√r/(1+r)) ≤ C₁ μ_a(r)`.
    MuDupUpper: Inequality ["a": Signature, "r": Radius] INEQ_TOL;
    /// `p ≤ exp(μ_a(r) + log r)`.
    MuProdLower: Inequality ["a": Signature, "r": Radius] INEQ_TOL;
    /// `exp(μ_a(r) + log r) ≤ (e^R/16) p`.
    MuProdUpper: Inequality ["a": Signature, "r": Radius] INEQ_TOL;
    /// `G ≤ L ≤ AG ≤ L_{3/2} ≤ A`; the slack is the smallest link.
    MeanChain: Inequality ["x": Positive, "y": Positive] INEQ_TOL;
    /// `K(r) > 9/(8+r²) log(4/r')`.
    KBracketLower: Inequality ["r": Radius] INEQ_TOL;
    /// `K(r) < 4/(3+r²) log(4/r')`.
    KBracketUpper: Inequality ["r": Radius] INEQ_TOL;
    /// `exp(π(K-1)) ≤ λ(K)`.
    LambdaBracketLower: Inequality ["K": Dilatation] INEQ_TOL;
    /// `λ(K) ≤ exp(π(K-1/K))`.
    LambdaBracketUpper: Inequality ["K": Dilatation] INEQ_TOL;
    /// `16 η_{K,2}(t) ≤ min{16t + B^K - B, (16t+8)^K - 8}`.
    QiuBracket: Inequality ["K": DilatationFromOne, "t": NonNegative] INEQ_TOL;
    /// `μ(r) + log r` is decreasing.
    MuLogMonotone: MonotoneProperty ["r": Radius] INEQ_TOL;
    /// `K(r)/log(4/r')` is decreasing.
    KLogMonotone: MonotoneProperty ["r": Radius] INEQ_TOL;
    /// `B(a,b) F(a,b;a+b;r) + log(1-r)/r` is increasing.
    ZeroBalancedMonotone: MonotoneProperty ["a": UnitParameter, "b": UnitParameter, "r": Radius] INEQ_TOL;
}

impl CaseId {
    /// A remark attached to reports of this case.
    pub fn note(self) -> Option<&'static str> {
        match self {
            CaseId::PhiId4 => Some(
                "with y = φ_√23(s') the group law forces y' = x and the identity cannot hold; \
                 suspected transcription issue, compare PhiId4Unprimed",
            ),
            CaseId::PhiId4Unprimed => Some("variant of PhiId4 with y = φ_√23(s)"),
            _ => None,
        }
    }

    /// The equality cases listed among the modular-equation suite, i.e. all
    /// equalities except the hypergeometric Landen case and the variant.
    pub fn modular_equalities() -> Vec<CaseId> {
        CaseId::ALL
            .iter()
            .copied()
            .filter(|c| c.kind() == CaseKind::Equality && !matches!(c, CaseId::Landen | CaseId::PhiId4Unprimed))
            .collect()
    }

    /// True at grid points where the statement is known to hold with equality.
    fn on_equality_locus(self, p: &[f64]) -> bool {
        match self {
            CaseId::MuSubLower | CaseId::MuSubUpper | CaseId::MuSuper => p[1] == p[2],
            CaseId::MuDupLower | CaseId::MuDupUpper | CaseId::MuProdLower | CaseId::MuProdUpper => p[0] == 0.5,
            CaseId::QiuBracket => p[0] == 1.0 || p[1] == 0.0,
            CaseId::MeanChain => p[0] == p[1],
            CaseId::LandenIneq => p[0] == 0.5 && p[1] == 0.5,
            _ => false,
        }
    }

    /// Points that satisfy cross-parameter constraints.
    fn admissible(self, p: &[f64]) -> bool {
        match self {
            CaseId::LandenIneq => p[0] + p[1] <= 1.0 + 1e-15,
            _ => true,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain("CaseId", format!("unknown case `{s}`")))
    }
}

/// Evaluates one case at a point given in the order of [`CaseId::params`].
pub fn residual(case: CaseId, point: &[f64]) -> Result<f64> {
    let params = case.params();
    if point.len() != params.len() {
        return Err(Error::domain(
            "residual",
            format!("{case} takes {} parameters, got {}", params.len(), point.len()),
        ));
    }
    for (p, &v) in params.iter().zip(point) {
        if !p.kind.contains(v) {
            return Err(Error::domain("residual", format!("{case}: {} = {v} is outside its domain", p.name)));
        }
    }
    if !case.admissible(point) {
        return Err(Error::domain("residual", format!("{case}: point {point:?} violates a parameter constraint")));
    }
    cases::evaluate(case, point).map_err(|e| Error::Case { case: case.name().to_string(), source: Box::new(e) })
}

/// Grid values that replace the defaults, by parameter name or for every
/// radius-type parameter.
#[derive(Debug, Clone, Default)]
pub struct GridOverrides {
    pub by_name: BTreeMap<String, Vec<f64>>,
    pub radius: Option<Vec<f64>>,
    pub tolerance: Option<f64>,
}

impl GridOverrides {
    fn axis(&self, p: &CaseParam) -> Vec<f64> {
        if let Some(v) = self.by_name.get(p.name) {
            return v.clone();
        }
        if p.kind == ParamKind::Radius {
            if let Some(v) = &self.radius {
                return v.clone();
            }
        }
        p.kind.default_grid()
    }
}

/// Summary of one case over its grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub case: CaseId,
    pub kind: CaseKind,
    pub grid: String,
    pub points: usize,
    pub max_residual: f64,
    pub worst_point: Vec<f64>,
    pub tolerance: f64,
    /// Largest `|slack|` at the stated points of equality, when the grid has any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_residual: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

fn describe(values: &[f64]) -> String {
    match values {
        [] => "[]".into(),
        [v] => format!("[{v}]"),
        _ => format!("[{}..{}; {}]", values[0], values[values.len() - 1], values.len()),
    }
}

/// Runs each case over the cartesian product of its parameter grids.
///
/// Grid values outside a parameter's domain are rejected before anything is
/// evaluated. Evaluation failures at individual points are recorded in the
/// report, which then fails; the remaining cases still run.
pub fn run_suite(cases: &[CaseId], grid: &GridOverrides) -> Result<Vec<ResidualReport>> {
    for &case in cases {
        for p in case.params() {
            let axis = grid.axis(p);
            if axis.is_empty() {
                return Err(Error::domain("run_suite", format!("{case}: empty grid for {}", p.name)));
            }
            if let Some(v) = axis.iter().find(|&&v| !p.kind.contains(v)) {
                return Err(Error::domain("run_suite", format!("{case}: {} = {v} is outside its domain", p.name)));
            }
        }
    }
    Ok(cases.iter().map(|&c| run_case(c, grid)).collect())
}

fn run_case(case: CaseId, grid: &GridOverrides) -> ResidualReport {
    let axes: Vec<Vec<f64>> = case.params().iter().map(|p| grid.axis(p)).collect();
    let description = case
        .params()
        .iter()
        .zip(&axes)
        .map(|(p, a)| format!("{}={}", p.name, describe(a)))
        .collect::<Vec<_>>()
        .join(" ");
    let tolerance = grid.tolerance.unwrap_or_else(|| case.default_tolerance());
    let mut report = ResidualReport {
        case,
        kind: case.kind(),
        grid: description,
        points: 0,
        max_residual: f64::NEG_INFINITY,
        worst_point: Vec::new(),
        tolerance,
        equality_residual: None,
        pass: false,
        errors: Vec::new(),
        note: case.note(),
    };
    for point in cartesian(&axes) {
        if !case.admissible(&point) {
            continue;
        }
        report.points += 1;
        let value = match residual(case, &point) {
            Ok(v) if v.is_finite() => v,
            Ok(v) => {
                report.errors.push(format!("{point:?}: non-finite value {v}"));
                continue;
            }
            Err(e) => {
                report.errors.push(format!("{point:?}: {e}"));
                continue;
            }
        };
        let score = match case.kind() {
            CaseKind::Equality => value.abs(),
            CaseKind::Inequality | CaseKind::MonotoneProperty => -value,
        };
        if score > report.max_residual {
            report.max_residual = score;
            report.worst_point = point.clone();
        }
        if case.on_equality_locus(&point) {
            let e = report.equality_residual.get_or_insert(0.0);
            *e = e.max(value.abs());
        }
    }
    let locus_ok = report.equality_residual.is_none_or(|e| e <= EQUALITY_LOCUS_TOL);
    report.pass = report.errors.is_empty() && report.max_residual <= tolerance && locus_ok && report.points > 0;
    report
}

fn cartesian(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    axes.iter().fold(vec![Vec::new()], |acc, axis| {
        acc.iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}
