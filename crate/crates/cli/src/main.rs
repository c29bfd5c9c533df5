//! `conformal`: evaluate, invert and tabulate the special functions, run the
//! identity suite and experiments, and generate or check planar curves.
//!
//! Exit codes: 0 on success (and when every residual case passes), 1 on a
//! computational failure or a failing case, 2 on usage and domain errors.

mod functions;
mod number;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use conformal_core::bounds::{bound_value, BoundId};
use conformal_core::geometry::{
    ahlfors_constant, boundary_metric_estimate, box_dimension, default_scales, koch_curve, linear_approx_delta,
    read_polyline_csv, regular_polygon, thickness_constant, triangle_condition_constant, write_polyline_csv,
    BoundaryMetric, Point2, Polyline, TriangleReading,
};
use conformal_core::identities::experiments::{
    artanh_ratio, linearize_phi_a, newton_monotone, q_maclaurin, ExperimentId, ExperimentReport,
};
use conformal_core::identities::{run_suite, CaseId, CaseKind, GridOverrides};
use conformal_core::Error;

use functions::{evaluate, invert, Func, Invertible, Params};
use number::fmt17;

#[derive(Debug, Parser)]
#[command(name = "conformal", version, about = "Special functions of planar quasiconformal theory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point
    Eval(EvalArgs),
    /// Invert the modulus or the Teichmüller capacity
    Invert(InvertArgs),
    /// Tabulate a function over a grid of one variable
    Table(TableArgs),
    /// Run identity and inequality cases and print a JSON report
    Residuals(ResidualArgs),
    /// Run a numerical experiment and print its observations as JSON
    Experiment(ExperimentArgs),
    /// Evaluate a closed-form bound
    Bounds(BoundsArgs),
    /// Generate or check planar curves
    #[command(subcommand)]
    Geom(GeomCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    func: Func,
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct InvertArgs {
    #[arg(long = "fn", value_enum)]
    func: Invertible,
    #[arg(long)]
    y: f64,
    /// Signature for μ_a (default 1/2)
    #[arg(long)]
    a: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long = "fn", value_enum)]
    func: Func,
    #[command(flatten)]
    params: Params,
    /// Sweep variable; defaults to the function's last parameter
    #[arg(long)]
    var: Option<String>,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long)]
    step: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Equalities,
    Modular,
    Inequalities,
}

#[derive(Debug, Args)]
struct ResidualArgs {
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    /// Case name; may be repeated
    #[arg(long = "case")]
    cases: Vec<String>,
    /// `from:to:step` for every radius parameter, `name=from:to:step`, or
    /// `name=v1,v2,...`; may be repeated
    #[arg(long)]
    grid: Vec<String>,
    /// Tolerance replacing every case's default
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    /// Q_maclaurin, NewtonMonotone, ArtanhRatio or LinearizePhiA
    name: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long = "K")]
    k: Option<f64>,
    #[arg(long)]
    y: Option<f64>,
    #[arg(long, default_value_t = 20)]
    terms: usize,
    #[arg(long, default_value_t = 40)]
    steps: usize,
    #[arg(long)]
    from: Option<f64>,
    #[arg(long)]
    to: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// Bound name, e.g. GehringD2
    id: Option<String>,
    /// List the bounds and their parameters
    #[arg(long)]
    list: bool,
    #[arg(long = "K")]
    k: Option<f64>,
    #[arg(long = "M")]
    m: Option<f64>,
    #[arg(long)]
    n: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum GeomCommand {
    /// Write a curve as CSV with header `x,y`
    Generate(GenerateArgs),
    /// Compute a constant of a curve read from CSV
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Koch-type snowflake
    #[arg(long, conflicts_with = "polygon")]
    koch: bool,
    #[arg(long, default_value_t = 4)]
    level: u32,
    /// Bump angle in degrees
    #[arg(long, default_value_t = 60.0)]
    angle: f64,
    /// Regular polygon with this many vertices
    #[arg(long)]
    polygon: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Output file; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Ahlfors,
    Triangle,
    Boxdim,
    Delta,
    Thickness,
    AbsoluteRatio,
    Apollonian,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Treat the vertex list as an open polyline
    #[arg(long)]
    open: bool,
    #[arg(long, value_enum)]
    property: Property,
    /// Number of box-counting scales
    #[arg(long, default_value_t = 10)]
    scales: usize,
    /// Only consecutive triples for the triangle condition
    #[arg(long)]
    adjacent: bool,
    /// Vertex index of the centre for delta and thickness
    #[arg(long, default_value_t = 0)]
    vertex: usize,
    /// Ball radius for delta and thickness
    #[arg(long)]
    radius: Option<f64>,
    /// First interior point `x,y` for the boundary metrics
    #[arg(long, value_parser = parse_point)]
    p1: Option<Point2>,
    /// Second interior point `x,y` for the boundary metrics
    #[arg(long, value_parser = parse_point)]
    p2: Option<Point2>,
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let p = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("`{v}`: {e}"));
    Ok(Point2::new(p(x)?, p(y)?))
}

/// A failure with its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
    /// Output already written; the run did not pass.
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Compute(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Failed), _) => ExitCode::from(1),
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command, out: &mut impl Write) -> Outcome {
    match cmd {
        Command::Eval(a) => eval(a, out),
        Command::Invert(a) => invert_cmd(a, out),
        Command::Table(a) => table(a, out),
        Command::Residuals(a) => residuals(a, out),
        Command::Experiment(a) => experiment(a, out),
        Command::Bounds(a) => bounds(a, out),
        Command::Geom(GeomCommand::Generate(a)) => generate(a, out),
        Command::Geom(GeomCommand::Check(a)) => check(a, out),
    }
}

fn write_json(out: &mut impl Write, v: &Value) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Failure::Compute(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn eval(a: EvalArgs, out: &mut impl Write) -> Outcome {
    let v = evaluate(a.func, &a.params)?;
    match a.format {
        Format::Json => {
            write_json(out, &json!({ "function": a.func.name(), "params": a.params.to_json(None), "value": v }))
        }
        Format::Text | Format::Csv => Ok(writeln!(out, "{}", fmt17(v))?),
    }
}

fn invert_cmd(a: InvertArgs, out: &mut impl Write) -> Outcome {
    let (x, complement) = invert(a.func, a.y, a.a)?;
    match a.format {
        Format::Json => {
            let mut v = json!({ "y": a.y, "value": x });
            if let Some(c) = complement {
                v["complement"] = json!(c);
            }
            write_json(out, &v)
        }
        Format::Text | Format::Csv => Ok(writeln!(out, "{}", fmt17(x))?),
    }
}

/// `from, from + step, ...` up to `to`, tolerating rounding in the last step.
fn sweep(from: f64, to: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) || !(from < to) || !(step > 0.0) {
        return Err(Failure::Usage(format!("need from < to and step > 0, got {from}:{to}:{step}")));
    }
    let n = ((to - from) / step * (1.0 + 1e-12)).floor();
    if n > 1e6 {
        return Err(Failure::Usage(format!("{n} grid points exceed the limit of 1e6")));
    }
    Ok((0..=n as usize).map(|i| from + i as f64 * step).collect())
}

fn table(a: TableArgs, out: &mut impl Write) -> Outcome {
    let vars = a.func.variables();
    let var = a.var.clone().unwrap_or_else(|| vars[vars.len() - 1].to_string());
    if !vars.contains(&var.as_str()) && !(var == "a" && a.params.a.is_some()) {
        return Err(Failure::Usage(format!("{} has no parameter `{var}`", a.func.name())));
    }
    let grid = sweep(a.from, a.to, a.step)?;
    let mut params = a.params.clone();
    // Endpoints outside the domain are a usage error; interior failures become row errors.
    for &end in &[grid[0], grid[grid.len() - 1]] {
        params.set(&var, end);
        if let Err(e) = evaluate(a.func, &params) {
            if e.is_domain() {
                return Err(e.into());
            }
        }
    }
    let rows: Vec<Result<f64, String>> = grid
        .iter()
        .map(|&g| {
            params.set(&var, g);
            evaluate(a.func, &params).map_err(|e| e.to_string())
        })
        .collect();
    let name = a.func.name();
    match a.format {
        Format::Json => {
            let values: Vec<Value> = rows.iter().map(|r| r.as_ref().map_or(Value::Null, |&v| json!(v))).collect();
            let errors: Vec<Value> = rows.iter().map(|r| r.as_ref().err().map_or(Value::Null, |e| json!(e))).collect();
            write_json(
                out,
                &json!({
                    "function": name,
                    "params": a.params.to_json(Some(&var)),
                    "variable": var,
                    "grid": grid,
                    "values": values,
                    "errors": errors,
                }),
            )
        }
        Format::Csv | Format::Text => {
            writeln!(out, "{var},{name},error")?;
            for (g, r) in grid.iter().zip(&rows) {
                match r {
                    Ok(v) => writeln!(out, "{},{},", fmt17(*g), fmt17(*v))?,
                    Err(e) => writeln!(out, "{},,\"{}\"", fmt17(*g), e.replace('"', "'"))?,
                }
            }
            Ok(())
        }
    }
}

fn parse_values(spec: &str) -> Result<Vec<f64>, Failure> {
    let num = |s: &str| s.trim().parse::<f64>().map_err(|e| Failure::Usage(format!("grid value `{s}`: {e}")));
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [from, to, step] => sweep(num(from)?, num(to)?, num(step)?),
        [list] => list.split(',').map(num).collect(),
        _ => Err(Failure::Usage(format!("grid `{spec}` is neither from:to:step nor a list"))),
    }
}

fn residuals(a: ResidualArgs, out: &mut impl Write) -> Outcome {
    let mut cases: Vec<CaseId> = match a.suite {
        None => Vec::new(),
        Some(Suite::All) => CaseId::ALL.to_vec(),
        Some(Suite::Modular) => CaseId::modular_equalities(),
        Some(Suite::Equalities) => CaseId::ALL.iter().copied().filter(|c| c.kind() == CaseKind::Equality).collect(),
        Some(Suite::Inequalities) => CaseId::ALL.iter().copied().filter(|c| c.kind() != CaseKind::Equality).collect(),
    };
    for name in &a.cases {
        let c: CaseId = name.parse()?;
        if !cases.contains(&c) {
            cases.push(c);
        }
    }
    if cases.is_empty() {
        return Err(Failure::Usage("select cases with --suite or --case".into()));
    }
    let mut grid = GridOverrides { tolerance: a.tol, ..GridOverrides::default() };
    if let Some(t) = a.tol {
        if !(t > 0.0) {
            return Err(Failure::Usage(format!("tolerance {t} must be positive")));
        }
    }
    for g in &a.grid {
        match g.split_once('=') {
            Some((name, spec)) => {
                grid.by_name.insert(name.trim().to_string(), parse_values(spec)?);
            }
            None => grid.radius = Some(parse_values(g)?),
        }
    }
    let reports = run_suite(&cases, &grid)?;
    let all_pass = reports.iter().all(|r| r.pass);
    write_json(out, &serde_json::to_value(&reports).map_err(|e| Failure::Compute(e.to_string()))?)?;
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Failed)
    }
}

fn experiment(a: ExperimentArgs, out: &mut impl Write) -> Outcome {
    let id: ExperimentId = a.name.parse()?;
    let grid =
        |from: f64, to: f64, step: f64| sweep(a.from.unwrap_or(from), a.to.unwrap_or(to), a.step.unwrap_or(step));
    let report: ExperimentReport = match id {
        ExperimentId::QMaclaurin => q_maclaurin(a.a.unwrap_or(0.5), a.b.unwrap_or(0.5), a.terms)?,
        ExperimentId::NewtonMonotone => {
            let y = a.y.ok_or_else(|| Failure::Usage("NewtonMonotone needs --y".into()))?;
            newton_monotone(y, a.steps)?
        }
        ExperimentId::ArtanhRatio => artanh_ratio(a.k.unwrap_or(2.0), &grid(0.05, 0.95, 0.05)?)?,
        ExperimentId::LinearizePhiA => {
            linearize_phi_a(a.a.unwrap_or(0.5), a.k.unwrap_or(2.0), &grid(-10.0, 10.0, 0.5)?)?
        }
    };
    write_json(out, &serde_json::to_value(&report).map_err(|e| Failure::Compute(e.to_string()))?)
}

fn bounds(a: BoundsArgs, out: &mut impl Write) -> Outcome {
    if a.list {
        for id in BoundId::ALL {
            let params: Vec<String> = id
                .params()
                .iter()
                .map(|p| match p.default {
                    Some(d) => format!("{}={d}", p.name),
                    None => p.name.to_string(),
                })
                .collect();
            writeln!(out, "{id} {}", params.join(" "))?;
        }
        return Ok(());
    }
    let name = a.id.as_deref().ok_or_else(|| Failure::Usage("give a bound name or --list".into()))?;
    let id: BoundId = name.parse()?;
    let lookup = |n: &str| match n {
        "K" => a.k,
        "M" => a.m,
        "n" => a.n,
        "alpha" => a.alpha,
        "r" => a.r,
        "t" => a.t,
        _ => None,
    };
    let values = id
        .params()
        .iter()
        .map(|p| lookup(p.name).or(p.default).ok_or_else(|| Failure::Usage(format!("{id} needs --{}", p.name))))
        .collect::<Result<Vec<f64>, Failure>>()?;
    let v = bound_value(id, &values)?;
    match a.format {
        Format::Json => {
            let params: serde_json::Map<String, Value> =
                id.params().iter().zip(&values).map(|(p, v)| (p.name.to_string(), json!(v))).collect();
            write_json(out, &json!({ "bound": id.name(), "params": params, "value": v }))
        }
        Format::Text | Format::Csv => Ok(writeln!(out, "{}", fmt17(v))?),
    }
}

fn generate(a: GenerateArgs, out: &mut impl Write) -> Outcome {
    let curve = match (a.koch, a.polygon) {
        (true, _) => koch_curve(a.level, a.angle)?,
        (false, Some(n)) => regular_polygon(n, a.radius)?,
        (false, None) => return Err(Failure::Usage("choose --koch or --polygon N".into())),
    };
    match a.out {
        Some(path) => {
            let file = File::create(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            write_polyline_csv(BufWriter::new(file), &curve)?;
        }
        None => write_polyline_csv(&mut *out, &curve)?,
    }
    Ok(())
}

fn check(a: CheckArgs, out: &mut impl Write) -> Outcome {
    let file = File::open(&a.input).map_err(|e| Failure::Usage(format!("{}: {e}", a.input.display())))?;
    let curve = read_polyline_csv(file, !a.open).map_err(|e| Failure::Usage(format!("{}: {e}", a.input.display())))?;
    let mut report = json!({
        "property": a.property.to_possible_value().map(|v| v.get_name().to_string()),
        "vertices": curve.points().len(),
        "closed": curve.is_closed(),
    });
    let value = match a.property {
        Property::Ahlfors => ahlfors_constant(&curve)?,
        Property::Triangle => {
            let reading = if a.adjacent { TriangleReading::Adjacent } else { TriangleReading::Ordered };
            report["reading"] = json!(reading);
            triangle_condition_constant(&curve, reading)?
        }
        Property::Boxdim => {
            let scales = default_scales(&curve, a.scales)?;
            report["scales"] = json!(scales);
            box_dimension(&curve, &scales)?
        }
        Property::Delta | Property::Thickness => {
            let x = centre(&curve, a.vertex)?;
            let r = a.radius.ok_or_else(|| Failure::Usage("--radius is required".into()))?;
            report["centre"] = json!(x);
            report["radius"] = json!(r);
            if a.property == Property::Delta {
                let fit = linear_approx_delta(curve.points(), x, r)?;
                report["direction"] = json!(fit.direction);
                fit.delta
            } else {
                thickness_constant(curve.points(), x, r)?
            }
        }
        Property::AbsoluteRatio | Property::Apollonian => {
            let (p1, p2) = a.p1.zip(a.p2).ok_or_else(|| Failure::Usage("--p1 and --p2 are required".into()))?;
            let mode = if a.property == Property::Apollonian {
                BoundaryMetric::Apollonian
            } else {
                BoundaryMetric::AbsoluteRatio
            };
            boundary_metric_estimate(&curve, p1, p2, mode)?
        }
    };
    report["value"] = json!(value);
    write_json(out, &report)
}

fn centre(curve: &Polyline, vertex: usize) -> Result<Point2, Failure> {
    curve
        .points()
        .get(vertex)
        .copied()
        .ok_or_else(|| Failure::Usage(format!("vertex {vertex} out of range for {} vertices", curve.points().len())))
}
