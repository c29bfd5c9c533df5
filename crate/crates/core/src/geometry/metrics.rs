use num_complex::Complex64;
use serde::Serialize;

use super::{Point2, Polyline};
use crate::error::{Error, Result};

/// A point of the extended plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtPoint {
    Finite(Point2),
    Infinity,
}

impl From<Point2> for ExtPoint {
    fn from(p: Point2) -> Self {
        ExtPoint::Finite(p)
    }
}

/// The chordal distance `q(a,b) = |a-b| / (sqrt(1+|a|²) sqrt(1+|b|²))`,
/// with `q(a,∞) = 1/sqrt(1+|a|²)`.
pub fn chordal(a: ExtPoint, b: ExtPoint) -> f64 {
    match (a, b) {
        (ExtPoint::Finite(a), ExtPoint::Finite(b)) => a.dist(b) / ((1.0 + a.norm2()).sqrt() * (1.0 + b.norm2()).sqrt()),
        (ExtPoint::Finite(p), ExtPoint::Infinity) | (ExtPoint::Infinity, ExtPoint::Finite(p)) => {
            1.0 / (1.0 + p.norm2()).sqrt()
        }
        (ExtPoint::Infinity, ExtPoint::Infinity) => 0.0,
    }
}

/// The absolute ratio `|a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d))`.
///
/// For finite points this is `|a-c||b-d| / (|a-b||c-d|)`; a point at
/// infinity drops the two Euclidean factors that contain it.
pub fn abs_ratio(a: ExtPoint, b: ExtPoint, c: ExtPoint, d: ExtPoint) -> Result<f64> {
    let (num, den) = match (a, b, c, d) {
        (ExtPoint::Finite(a), ExtPoint::Finite(b), ExtPoint::Finite(c), ExtPoint::Finite(d)) => {
            (a.dist(c) * b.dist(d), a.dist(b) * c.dist(d))
        }
        _ => (chordal(a, c) * chordal(b, d), chordal(a, b) * chordal(c, d)),
    };
    if den == 0.0 {
        return Err(Error::Degenerate("absolute ratio with a vanishing denominator".into()));
    }
    Ok(num / den)
}

fn c(p: Point2) -> Complex64 {
    Complex64::new(p.x, p.y)
}

fn pt(z: Complex64) -> Point2 {
    Point2::new(z.re, z.im)
}

/// The hyperbolic distance `ρ(a,b) = log|a₊,a,b,b₊|` of the unit disk, where
/// `a₊`, `b₊` are the ends of the geodesic through `a` and `b`.
///
/// The ends are found by moving `a` to the origin with
/// `T(z) = (z-a)/(1-āz)`, where the geodesic is a diameter, and mapping the
/// diameter's ends back with `T⁻¹`.
pub fn rho_disk(a: Point2, b: Point2) -> Result<f64> {
    for p in [a, b] {
        if !(p.norm() < 1.0) {
            return Err(Error::domain("rho_disk", format!("({}, {}) is not inside the unit disk", p.x, p.y)));
        }
    }
    if a == b {
        return Ok(0.0);
    }
    let (za, zb) = (c(a), c(b));
    let w = (zb - za) / (Complex64::new(1.0, 0.0) - za.conj() * zb);
    let u = w / w.norm();
    let back = |v: Complex64| (v + za) / (Complex64::new(1.0, 0.0) + za.conj() * v);
    let (a_end, b_end) = (pt(back(-u)), pt(back(u)));
    Ok(abs_ratio(a_end.into(), a.into(), b.into(), b_end.into())?.ln())
}

/// Which boundary metric [`boundary_metric_estimate`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundaryMetric {
    /// `δ_G(a,b) = log(1 + sup |a,c,b,d|)`.
    AbsoluteRatio,
    /// `α_G(a,b) = sup log|c,a,b,d|`.
    Apollonian,
}

fn winding_number(curve: &Polyline, p: Point2) -> i32 {
    let mut w = 0;
    for (a, b) in curve.edges() {
        let side = (b - a).cross(p - a);
        if a.y <= p.y {
            if b.y > p.y && side > 0.0 {
                w += 1;
            }
        } else if b.y <= p.y && side < 0.0 {
            w -= 1;
        }
    }
    w
}

fn dist_to_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let d = b - a;
    let t = ((p - a).dot(d) / d.norm2()).clamp(0.0, 1.0);
    p.dist(a + d * t)
}

/// Lower estimate of `δ_G(a,b)` or `α_G(a,b)` for the region bounded by a
/// closed polyline, with the supremum taken over boundary vertices.
pub fn boundary_metric_estimate(boundary: &Polyline, a: Point2, b: Point2, mode: BoundaryMetric) -> Result<f64> {
    if !boundary.is_closed() || boundary.points().len() < 3 {
        return Err(Error::Degenerate("the boundary must be a closed polyline with at least 3 vertices".into()));
    }
    for p in [a, b] {
        let on_edge = boundary.edges().any(|(u, v)| dist_to_segment(p, u, v) == 0.0);
        if on_edge || winding_number(boundary, p) == 0 {
            return Err(Error::domain(
                "boundary_metric_estimate",
                format!("({}, {}) is not inside the boundary", p.x, p.y),
            ));
        }
    }
    let v = boundary.points();
    match mode {
        BoundaryMetric::AbsoluteRatio => {
            let ab = a.dist(b);
            let mut sup = 0.0f64;
            for &p in v {
                let ap = a.dist(p);
                for &q in v {
                    sup = sup.max(ab * p.dist(q) / (ap * b.dist(q)));
                }
            }
            Ok(sup.ln_1p())
        }
        BoundaryMetric::Apollonian => {
            // |c,a,b,d| = (|c-b|/|c-a|)(|a-d|/|b-d|) splits into two suprema.
            let left = v.iter().map(|&p| p.dist(b) / p.dist(a)).fold(0.0, f64::max);
            let right = v.iter().map(|&p| p.dist(a) / p.dist(b)).fold(0.0, f64::max);
            Ok((left * right).ln())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{koch_curve, regular_polygon};
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    fn e(x: f64, y: f64) -> ExtPoint {
        ExtPoint::Finite(p(x, y))
    }

    /// `2 artanh(|a-b| / |1 - a b̄|)`.
    fn rho_closed_form(a: Point2, b: Point2) -> f64 {
        let (za, zb) = (c(a), c(b));
        let t = (za - zb).norm() / (Complex64::new(1.0, 0.0) - za * zb.conj()).norm();
        2.0 * t.atanh()
    }

    #[test]
    fn abs_ratio_examples() {
        for lam in [0.1, 0.5, 0.9] {
            let v = abs_ratio(e(-1.0, 0.0), e(0.0, 0.0), e(lam, 0.0), e(1.0, 0.0)).unwrap();
            assert!((v - (1.0 + lam) / (1.0 - lam)).abs() < 1e-14);
        }
        assert!((chordal(e(0.0, 0.0), e(1.0, 0.0)) - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(chordal(e(0.0, 0.0), ExtPoint::Infinity), 1.0);
        assert!(abs_ratio(e(0.0, 0.0), e(0.0, 0.0), e(1.0, 0.0), e(2.0, 0.0)).is_err());
    }

    #[test]
    fn infinity_is_the_limit() {
        let (a, b, cc) = (e(0.3, 0.1), e(-1.0, 2.0), e(0.5, -0.7));
        let far = abs_ratio(a, b, cc, e(1e9, 1e9)).unwrap();
        let inf = abs_ratio(a, b, cc, ExtPoint::Infinity).unwrap();
        assert!((far - inf).abs() < 1e-8 * inf);
    }

    #[test]
    fn rho_examples() {
        for lam in [0.1, 0.5, 0.99] {
            let r = rho_disk(Point2::ORIGIN, p(lam, 0.0)).unwrap();
            assert!((r - ((1.0 + lam) / (1.0 - lam)).ln()).abs() < 1e-13);
        }
        assert_eq!(rho_disk(p(0.2, 0.3), p(0.2, 0.3)).unwrap(), 0.0);
        assert!(rho_disk(p(1.0, 0.0), Point2::ORIGIN).is_err());
    }

    #[test]
    fn circle_boundary_recovers_rho() {
        let circle = regular_polygon(1000, 1.0).unwrap();
        let b = p(0.5, 0.0);
        let d = boundary_metric_estimate(&circle, Point2::ORIGIN, b, BoundaryMetric::AbsoluteRatio).unwrap();
        assert!((d - 3f64.ln()).abs() < 1e-2, "{d}");
        assert!(d <= 3f64.ln() + 1e-12);
        for mode in [BoundaryMetric::AbsoluteRatio, BoundaryMetric::Apollonian] {
            assert_eq!(boundary_metric_estimate(&circle, b, b, mode).unwrap(), 0.0);
        }
        assert!(boundary_metric_estimate(&circle, p(2.0, 0.0), b, BoundaryMetric::Apollonian).is_err());
        assert!(boundary_metric_estimate(&circle, p(1.0, 0.0), b, BoundaryMetric::Apollonian).is_err());
    }

    #[test]
    fn apollonian_on_snowflake_is_symmetric() {
        let k = koch_curve(3, 60.0).unwrap();
        let (a, b) = (p(0.5, 0.3), p(0.4, 0.1));
        let ab = boundary_metric_estimate(&k, a, b, BoundaryMetric::Apollonian).unwrap();
        let ba = boundary_metric_estimate(&k, b, a, BoundaryMetric::Apollonian).unwrap();
        assert!(ab > 0.0);
        assert!((ab - ba).abs() < 1e-14);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn abs_ratio_mobius_invariant(v in proptest::collection::vec(-3.0f64..3.0, 8), s in 0.1f64..5.0, t in 0.0f64..6.3) {
            let pts: Vec<Point2> = v.chunks(2).map(|w| p(w[0], w[1])).collect();
            prop_assume!(pts.iter().all(|q| q.norm() > 1e-2));
            for i in 0..4 {
                for j in i + 1..4 {
                    prop_assume!(pts[i].dist(pts[j]) > 1e-2);
                }
            }
            let r = |q: &[Point2]| abs_ratio(q[0].into(), q[1].into(), q[2].into(), q[3].into()).unwrap();
            let base = r(&pts);
            let inv: Vec<Point2> = pts.iter().map(|&q| q * (1.0 / q.norm2())).collect();
            let (cs, sn) = (t.cos(), t.sin());
            let sim: Vec<Point2> = pts.iter().map(|&q| p(s * (cs * q.x - sn * q.y) + 1.0, s * (sn * q.x + cs * q.y))).collect();
            prop_assert!((r(&inv) - base).abs() <= 1e-10 * base.max(1.0));
            prop_assert!((r(&sim) - base).abs() <= 1e-10 * base.max(1.0));
        }

        #[test]
        fn rho_matches_closed_form_and_rotations(ax in -0.7f64..0.7, ay in -0.7f64..0.7, bx in -0.7f64..0.7, by in -0.7f64..0.7, t in 0.0f64..6.3) {
            let (a, b) = (p(ax, ay), p(bx, by));
            let r = rho_disk(a, b).unwrap();
            prop_assert!(r >= 0.0);
            prop_assert!((r - rho_closed_form(a, b)).abs() < 1e-12 * r.max(1.0));
            prop_assert!((r - rho_disk(b, a).unwrap()).abs() < 1e-12 * r.max(1.0));
            let (cs, sn) = (t.cos(), t.sin());
            let rot = |q: Point2| p(cs * q.x - sn * q.y, sn * q.x + cs * q.y);
            prop_assert!((rho_disk(rot(a), rot(b)).unwrap() - r).abs() < 1e-12 * r.max(1.0));
        }
    }
}
