//! Planar quasicircle generation and discrete estimators.
//!
//! Every supremum or infimum over a continuum is replaced by a brute-force
//! search over polyline vertices. Sup-type estimates are therefore lower
//! bounds that improve as the sampling is refined.

mod curves;
mod estimators;
mod metrics;

use std::io::{Read, Write};
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use curves::{koch_curve, regular_polygon, KOCH_MAX_LEVEL};
pub use estimators::{
    ahlfors_constant, box_dimension, default_scales, linear_approx_delta, relative_size, thickness_constant,
    triangle_condition_constant, HyperplaneFit, TriangleReading, AHLFORS_MAX_VERTICES, TRIANGLE_MAX_VERTICES,
};
pub use metrics::{abs_ratio, boundary_metric_estimate, chordal, rho_disk, BoundaryMetric, ExtPoint};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm2(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Rotation by a quarter turn counterclockwise.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

/// An ordered vertex list; a closed polyline also has the edge last → first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    points: Vec<Point2>,
    closed: bool,
}

impl Polyline {
    pub fn new(points: Vec<Point2>, closed: bool) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Degenerate(format!("a polyline needs at least 2 points, got {}", points.len())));
        }
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::domain("Polyline", format!("vertex {i} is not finite")));
        }
        if let Some(i) = points.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::Degenerate(format!("vertices {i} and {} coincide", i + 1)));
        }
        if closed && points[0] == points[points.len() - 1] {
            return Err(Error::Degenerate("closing edge has zero length; drop the repeated endpoint".into()));
        }
        Ok(Polyline { points, closed })
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.points.len()
        } else {
            self.points.len() - 1
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.points.len();
        (0..self.edge_count()).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.dist(b)).sum()
    }

    /// Applies a map to every vertex.
    pub fn map(&self, f: impl Fn(Point2) -> Point2) -> Result<Polyline> {
        Polyline::new(self.points.iter().map(|&p| f(p)).collect(), self.closed)
    }
}

/// Largest distance between two points of the set.
pub fn diameter(points: &[Point2]) -> f64 {
    let mut d = 0.0f64;
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            d = d.max(p.dist(q));
        }
    }
    d
}

/// Reads a vertex list from CSV with header `x,y`.
pub fn read_polyline_csv(reader: impl Read, closed: bool) -> Result<Polyline> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| parse_error(&e, 1))?.clone();
    if headers.len() != 2 || &headers[0] != "x" || &headers[1] != "y" {
        return Err(Error::Parse { line: 1, detail: format!("expected header `x,y`, found `{}`", headers.as_slice()) });
    }
    let mut points = Vec::new();
    for row in rdr.deserialize::<Point2>() {
        let p = row.map_err(|e| parse_error(&e, 0))?;
        points.push(p);
    }
    Polyline::new(points, closed)
}

fn parse_error(e: &csv::Error, fallback: u64) -> Error {
    let line = e.position().map_or(fallback, |p| p.line());
    let detail = match e.kind() {
        csv::ErrorKind::Deserialize { err, .. } => err.to_string(),
        _ => e.to_string(),
    };
    Error::Parse { line, detail }
}

/// Writes the vertices as CSV with header `x,y` and 17 significant digits.
pub fn write_polyline_csv(mut writer: impl Write, curve: &Polyline) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    writeln!(writer, "x,y").map_err(io)?;
    for p in curve.points() {
        writeln!(writer, "{:.16e},{:.16e}", p.x, p.y).map_err(io)?;
    }
    writer.flush().map_err(io)
}
