use std::f64::consts::PI;

use super::{Point2, Polyline};
use crate::error::{Error, Result};

/// Largest supported Koch level (`3·4^12` vertices).
pub const KOCH_MAX_LEVEL: u32 = 12;

/// Koch-type snowflake on the unit equilateral triangle.
///
/// Each edge is replaced by four edges of equal length whose middle pair
/// forms a bump of base angle `angle_deg` on the outer side; 60° gives the
/// classical snowflake. The triangle is positively oriented, so the outer
/// side of an edge is to its right.
pub fn koch_curve(level: u32, angle_deg: f64) -> Result<Polyline> {
    if level > KOCH_MAX_LEVEL {
        return Err(Error::domain("koch_curve", format!("level {level} exceeds {KOCH_MAX_LEVEL}")));
    }
    if !(angle_deg > 0.0 && angle_deg < 90.0) {
        return Err(Error::domain("koch_curve", format!("angle {angle_deg} is not in (0, 90)")));
    }
    let theta = angle_deg.to_radians();
    // 2ℓ + 2ℓ cos θ = L
    let part = 1.0 / (2.0 * (1.0 + theta.cos()));
    let rise = part * theta.sin();
    let mut pts = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.5, 3f64.sqrt() / 2.0)];
    for _ in 0..level {
        let n = pts.len();
        let mut next = Vec::with_capacity(4 * n);
        for i in 0..n {
            let (p, q) = (pts[i], pts[(i + 1) % n]);
            let d = q - p;
            let outward = Point2::new(d.y, -d.x);
            next.push(p);
            next.push(p + d * part);
            next.push(p + d * 0.5 + outward * rise);
            next.push(q - d * part);
        }
        pts = next;
    }
    Polyline::new(pts, true)
}

/// The regular `n`-gon inscribed in the circle of the given radius about the
/// origin, starting at `(radius, 0)`.
pub fn regular_polygon(n: usize, radius: f64) -> Result<Polyline> {
    if n < 3 {
        return Err(Error::domain("regular_polygon", format!("n = {n} must be at least 3")));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::domain("regular_polygon", format!("radius {radius} must be positive")));
    }
    let pts = (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64;
            Point2::new(radius * t.cos(), radius * t.sin())
        })
        .collect();
    Polyline::new(pts, true)
}
