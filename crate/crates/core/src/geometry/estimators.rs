use std::collections::HashSet;
use std::f64::consts::PI;

use serde::Serialize;

use super::{diameter, Point2, Polyline};
use crate::error::{Error, Result};

/// Size guard for the `O(n²)` arc-diameter table (8n² bytes).
pub const AHLFORS_MAX_VERTICES: usize = 4096;
/// Size guard for the `O(n³)` triple searches.
pub const TRIANGLE_MAX_VERTICES: usize = 1500;

const SWEEP_ANGLES: usize = 720;
const GOLDEN_ITERATIONS: usize = 80;

/// `min{d(E), d(F)} / d(E,F)`.
pub fn relative_size(e: &[Point2], f: &[Point2]) -> Result<f64> {
    if e.is_empty() || f.is_empty() {
        return Err(Error::Degenerate("relative_size needs two non-empty sets".into()));
    }
    let gap = e.iter().flat_map(|&p| f.iter().map(move |&q| p.dist(q))).fold(f64::INFINITY, f64::min);
    if gap == 0.0 {
        return Err(Error::Degenerate("the sets meet: d(E,F) = 0".into()));
    }
    Ok(diameter(e).min(diameter(f)) / gap)
}

/// `max_{a,b} min{d(C₁), d(C₂)} / |a-b|` over vertex pairs, where `C₁` and
/// `C₂` are the two arcs between `a` and `b`, endpoints included.
///
/// Arc diameters come from the recurrence
/// `d[i..j] = max(d[i+1..j], d[i..j-1], |v_i - v_j|)`.
pub fn ahlfors_constant(curve: &Polyline) -> Result<f64> {
    let v = curve.points();
    let n = v.len();
    if !curve.is_closed() || n < 4 {
        return Err(Error::Degenerate("ahlfors_constant needs a closed polyline with at least 4 vertices".into()));
    }
    if n > AHLFORS_MAX_VERTICES {
        return Err(Error::Unsupported(format!("{n} vertices exceed the limit of {AHLFORS_MAX_VERTICES}")));
    }
    // diam[len * n + start]: diameter of the arc of `len + 1` vertices from `start`.
    let mut diam = vec![0.0f64; n * n];
    for len in 1..n {
        for s in 0..n {
            let e = (s + len) % n;
            let d = diam[(len - 1) * n + s].max(diam[(len - 1) * n + (s + 1) % n]).max(v[s].dist(v[e]));
            diam[len * n + s] = d;
        }
    }
    let mut m = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let chord = v[i].dist(v[j]);
            let first = diam[(j - i) * n + i];
            let second = diam[(n - (j - i)) * n + j];
            m = m.max(first.min(second) / chord);
        }
    }
    Ok(m)
}

/// Which vertex triples enter the triangle-condition constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TriangleReading {
    /// Every triple `i < j < k`.
    Ordered,
    /// Only consecutive triples `i, i+1, i+2`.
    Adjacent,
}

/// `max (|a-b| + |b-c|) / |a-c|` over vertex triples of an open polyline.
pub fn triangle_condition_constant(curve: &Polyline, reading: TriangleReading) -> Result<f64> {
    let v = curve.points();
    let n = v.len();
    if curve.is_closed() || n < 3 {
        return Err(Error::Degenerate("triangle condition needs an open polyline with at least 3 vertices".into()));
    }
    let ratio = |i: usize, j: usize, k: usize| -> Result<f64> {
        let base = v[i].dist(v[k]);
        if base == 0.0 {
            return Err(Error::Degenerate(format!("vertices {i} and {k} coincide")));
        }
        Ok((v[i].dist(v[j]) + v[j].dist(v[k])) / base)
    };
    let mut m = 1.0f64;
    match reading {
        TriangleReading::Adjacent => {
            for i in 0..n - 2 {
                m = m.max(ratio(i, i + 1, i + 2)?);
            }
        }
        TriangleReading::Ordered => {
            if n > TRIANGLE_MAX_VERTICES {
                return Err(Error::Unsupported(format!("{n} vertices exceed the limit of {TRIANGLE_MAX_VERTICES}")));
            }
            for i in 0..n {
                for k in i + 2..n {
                    for j in i + 1..k {
                        m = m.max(ratio(i, j, k)?);
                    }
                }
            }
        }
    }
    Ok(m)
}

/// A line through `base` with unit `direction`, and the normalized width
/// `delta` of the slab about it that holds the local point set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HyperplaneFit {
    pub base: Point2,
    pub direction: Point2,
    pub delta: f64,
}

fn local_points(e: &[Point2], x: Point2, r: f64, at_least: usize, member: bool) -> Result<Vec<Point2>> {
    if !(r > 0.0) || !r.is_finite() || !x.is_finite() {
        return Err(Error::domain("local_points", format!("r = {r} must be positive")));
    }
    if member && !e.contains(&x) {
        return Err(Error::domain("local_points", "the centre must be a point of the set"));
    }
    // Points on the sphere count even when rounding puts them a hair outside.
    let local: Vec<Point2> = e.iter().copied().filter(|p| p.dist(x) <= r * (1.0 + 1e-12)).collect();
    if local.len() < at_least {
        return Err(Error::Degenerate(format!("{} points in the ball, need {at_least}", local.len())));
    }
    Ok(local)
}

/// Smallest `δ` such that `E ∩ B(x,r)` lies within distance `δr` of a line
/// through `x`.
///
/// The width as a function of the direction angle is a maximum of
/// `|sin|`-type terms. It is sampled at 720 angles and the best sample is
/// refined by golden-section search within one sampling step.
pub fn linear_approx_delta(e: &[Point2], x: Point2, r: f64) -> Result<HyperplaneFit> {
    let local = local_points(e, x, r, 2, true)?;
    let width = |t: f64| {
        let dir = Point2::new(t.cos(), t.sin());
        local.iter().map(|&p| dir.cross(p - x).abs()).fold(0.0, f64::max) / r
    };
    let step = PI / SWEEP_ANGLES as f64;
    let (mut best_t, mut best) = (0.0, f64::INFINITY);
    for k in 0..SWEEP_ANGLES {
        let t = k as f64 * step;
        let w = width(t);
        if w < best {
            (best_t, best) = (t, w);
        }
    }
    let (t, w) = golden_min(&width, best_t - step, best_t + step);
    if w < best {
        (best_t, best) = (t, w);
    }
    Ok(HyperplaneFit { base: x, direction: Point2::new(best_t.cos(), best_t.sin()), delta: best })
}

fn golden_min(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - g * (hi - lo);
    let mut b = lo + g * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    for _ in 0..GOLDEN_ITERATIONS {
        if fa <= fb {
            hi = b;
            (b, fb) = (a, fa);
            a = hi - g * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            (a, fa) = (b, fb);
            b = lo + g * (hi - lo);
            fb = f(b);
        }
    }
    if fa <= fb {
        (a, fa)
    } else {
        (b, fb)
    }
}

/// Largest triangle area with vertices in `E ∩ B(x,r)`, divided by `r²`.
/// The centre need not belong to `E`.
pub fn thickness_constant(e: &[Point2], x: Point2, r: f64) -> Result<f64> {
    let local = local_points(e, x, r, 3, false)?;
    let n = local.len();
    if n > TRIANGLE_MAX_VERTICES {
        return Err(Error::Unsupported(format!("{n} local points exceed the limit of {TRIANGLE_MAX_VERTICES}")));
    }
    let mut area = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let u = local[j] - local[i];
            for &c in &local[j + 1..] {
                area = area.max(u.cross(c - local[i]).abs());
            }
        }
    }
    Ok(0.5 * area / (r * r))
}

/// Geometric scale sequence for box counting: from a sixth of the
/// bounding-box diagonal down to three mean edge lengths, or three decades
/// below the top when the edges are long.
pub fn default_scales(curve: &Polyline, count: usize) -> Result<Vec<f64>> {
    if count < 2 {
        return Err(Error::domain("default_scales", format!("count = {count} must be at least 2")));
    }
    let (lo, hi) = bounding_box(curve);
    let span = (hi - lo).norm();
    let top = span / 6.0;
    let mut bottom = (3.0 * curve.perimeter() / curve.edge_count() as f64).max(span * 1e-3);
    if bottom > top / 10.0 {
        bottom = top / 1000.0;
    }
    let ratio = (bottom / top).powf(1.0 / (count - 1) as f64);
    Ok((0..count).map(|k| top * ratio.powi(k as i32)).collect())
}

fn bounding_box(curve: &Polyline) -> (Point2, Point2) {
    curve.points().iter().fold(
        (Point2::new(f64::INFINITY, f64::INFINITY), Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), p| (Point2::new(lo.x.min(p.x), lo.y.min(p.y)), Point2::new(hi.x.max(p.x), hi.y.max(p.y))),
    )
}

fn box_count(curve: &Polyline, s: f64, origin: Point2) -> usize {
    let mut cells = HashSet::new();
    let cell = |p: Point2| (((p.x - origin.x) / s).floor() as i64, ((p.y - origin.y) / s).floor() as i64);
    for (a, b) in curve.edges() {
        let k = (4.0 * a.dist(b) / s).ceil().max(1.0) as usize;
        for i in 0..=k {
            cells.insert(cell(a + (b - a) * (i as f64 / k as f64)));
        }
    }
    cells.len()
}

/// Least-squares slope of `log N(s)` against `log(1/s)`, where `N(s)` counts
/// grid boxes of side `s` met by the curve.
pub fn box_dimension(curve: &Polyline, scales: &[f64]) -> Result<f64> {
    if scales.len() < 2 {
        return Err(Error::Degenerate("box_dimension needs at least 2 scales".into()));
    }
    if scales.iter().any(|s| !(*s > 0.0) || !s.is_finite()) {
        return Err(Error::domain("box_dimension", "scales must be positive and finite"));
    }
    let (min, max) = scales.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &s| (a.min(s), b.max(s)));
    if max < 10.0 * min * (1.0 - 1e-12) {
        return Err(Error::Degenerate(format!("scales [{min}, {max}] span less than a decade")));
    }
    let (lo, _) = bounding_box(curve);
    let pts: Vec<(f64, f64)> = scales
        .iter()
        .map(|&s| {
            // An off-lattice origin keeps boxes from aligning with the curve's own grid.
            let origin = lo - Point2::new(0.2137, 0.3719) * s;
            ((1.0 / s).ln(), (box_count(curve, s, origin) as f64).ln())
        })
        .collect();
    let n = pts.len() as f64;
    let (mx, my) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x / n, b + y / n));
    let (sxy, sxx) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx).powi(2)));
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{koch_curve, regular_polygon};
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    fn segment(a: Point2, b: Point2, n: usize) -> Vec<Point2> {
        (0..=n).map(|i| a + (b - a) * (i as f64 / n as f64)).collect()
    }

    #[test]
    fn relative_size_examples() {
        let e = segment(p(0.0, 0.0), p(1.0, 0.0), 1);
        let f = segment(p(0.0, 1.0), p(1.0, 1.0), 1);
        assert_eq!(relative_size(&e, &f).unwrap(), 1.0);
        assert_eq!(relative_size(&[p(5.0, 5.0)], &e).unwrap(), 0.0);
        let sq = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        let shifted: Vec<Point2> = sq.iter().map(|&q| q + p(3.0, 0.0)).collect();
        assert!((relative_size(&sq, &shifted).unwrap() - 2f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(relative_size(&e, &e).is_err());
        assert!(relative_size(&[], &e).is_err());
    }

    /// Direct search over pairs and arc subsets, for small curves.
    fn ahlfors_brute(v: &[Point2]) -> f64 {
        let n = v.len();
        let mut m = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                let a1: Vec<Point2> = v[i..=j].to_vec();
                let a2: Vec<Point2> = v[j..].iter().chain(&v[..=i]).copied().collect();
                m = m.max(diameter(&a1).min(diameter(&a2)) / v[i].dist(v[j]));
            }
        }
        m
    }

    #[test]
    fn ahlfors_matches_brute_force() {
        let k = koch_curve(2, 60.0).unwrap();
        assert!((ahlfors_constant(&k).unwrap() - ahlfors_brute(k.points())).abs() < 1e-14);
    }

    #[test]
    fn ahlfors_circle_and_thin_rectangle() {
        let c = regular_polygon(1000, 1.0).unwrap();
        assert!((ahlfors_constant(&c).unwrap() - 1.0).abs() < 1e-3);
        let eps = 0.01;
        let mut pts = segment(p(0.0, 0.0), p(1.0, 0.0), 100);
        pts.pop();
        let mut top = segment(p(1.0, eps), p(0.0, eps), 100);
        top.pop();
        pts.push(p(1.0, 0.0));
        pts.extend(top);
        let rect = Polyline::new(pts, true).unwrap();
        assert!(ahlfors_constant(&rect).unwrap() > 10.0);
        let open = Polyline::new(segment(p(0.0, 0.0), p(1.0, 0.0), 5), false).unwrap();
        assert!(ahlfors_constant(&open).is_err());
    }

    #[test]
    fn triangle_condition_examples() {
        let line = Polyline::new(segment(p(0.0, 0.0), p(3.0, 1.0), 6), false).unwrap();
        let m = triangle_condition_constant(&line, TriangleReading::Ordered).unwrap();
        assert!((m - 1.0).abs() < 1e-15);
        let corner = Polyline::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)], false).unwrap();
        let m = triangle_condition_constant(&corner, TriangleReading::Ordered).unwrap();
        assert!((m - 2f64.sqrt()).abs() < 1e-15);
        let back = Polyline::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(0.0, 0.0)], false).unwrap();
        assert!(triangle_condition_constant(&back, TriangleReading::Adjacent).is_err());
    }

    #[test]
    fn spiral_readings_are_ordered() {
        let pts: Vec<Point2> = (0..200)
            .map(|k| {
                let t = k as f64 * 0.1;
                let rad = (0.1 * t).exp();
                p(rad * t.cos(), rad * t.sin())
            })
            .collect();
        let s = Polyline::new(pts, false).unwrap();
        let all = triangle_condition_constant(&s, TriangleReading::Ordered).unwrap();
        let adj = triangle_condition_constant(&s, TriangleReading::Adjacent).unwrap();
        assert!(adj <= all);
        assert!(adj > 1.0 && all.is_finite());
    }

    fn delta_oracle(e: &[Point2], x: Point2, r: f64) -> f64 {
        let local: Vec<Point2> = e.iter().copied().filter(|q| q.dist(x) <= r).collect();
        (0..3600)
            .map(|k| {
                let t = PI * k as f64 / 3600.0;
                let d = p(t.cos(), t.sin());
                local.iter().map(|&q| d.cross(q - x).abs()).fold(0.0, f64::max) / r
            })
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn linear_approximation_examples() {
        let line = segment(p(-1.0, -2.0), p(1.0, 2.0), 10);
        assert!(linear_approx_delta(&line, line[5], 1.0).unwrap().delta < 1e-12);
        let (h, r) = (0.1, 1.0);
        let bump = [p(-0.5, 0.0), p(0.0, h), p(0.5, 0.0)];
        let fit = linear_approx_delta(&bump, bump[1], r).unwrap();
        assert!((fit.delta - h / r).abs() < 1e-12);
        assert!(fit.direction.y.abs() < 1e-6);
        assert!(linear_approx_delta(&bump, p(9.0, 9.0), r).is_err());
        assert!(linear_approx_delta(&[p(0.0, 0.0), p(5.0, 0.0)], p(0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn linear_approximation_against_sweep_oracle() {
        let k = koch_curve(4, 60.0).unwrap();
        let x = k.points()[64];
        for r in [0.05, 0.1, 0.3] {
            let d = linear_approx_delta(k.points(), x, r).unwrap().delta;
            let oracle = delta_oracle(k.points(), x, r);
            assert!(d <= oracle + 1e-12 && oracle - d < 1e-4, "{r}: {d} vs {oracle}");
        }
    }

    #[test]
    fn flatter_bumps_are_closer_to_lines() {
        // Worst δ over vertices away from the three corners of the base triangle,
        // which keep their 60° angle for every bump angle.
        let corners = [p(0.0, 0.0), p(1.0, 0.0), p(0.5, 3f64.sqrt() / 2.0)];
        let r = 0.05;
        let mut last = f64::INFINITY;
        for angle in [60.0, 40.0, 20.0, 10.0] {
            let k = koch_curve(4, angle).unwrap();
            let v = k.points();
            let d = v
                .iter()
                .step_by(4)
                .filter(|q| corners.iter().all(|c| c.dist(**q) > r))
                .map(|&q| linear_approx_delta(v, q, r).unwrap().delta)
                .fold(0.0, f64::max);
            assert!(d < last, "{angle}: {d} !< {last}");
            last = d;
        }
    }

    #[test]
    fn thickness_examples() {
        let line = segment(p(0.0, 0.0), p(1.0, 1.0), 8);
        assert_eq!(thickness_constant(&line, line[4], 2.0).unwrap(), 0.0);
        let r = 2.0;
        let tri: Vec<Point2> = (0..3)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / 3.0;
                p(r * t.cos(), r * t.sin())
            })
            .collect();
        let c = thickness_constant(&tri, Point2::ORIGIN, r).unwrap();
        assert!((c - 3.0 * 3f64.sqrt() / 4.0).abs() < 1e-14);
        assert!(thickness_constant(&tri[..2], tri[0], 10.0).is_err());
    }

    #[test]
    fn box_dimension_of_rectifiable_curves() {
        let seg = Polyline::new(vec![p(0.0, 0.0), p(1.0, 0.3)], false).unwrap();
        let d = box_dimension(&seg, &default_scales(&seg, 8).unwrap()).unwrap();
        assert!((d - 1.0).abs() < 0.05, "{d}");
        let c = regular_polygon(1000, 1.0).unwrap();
        let d = box_dimension(&c, &default_scales(&c, 8).unwrap()).unwrap();
        assert!((d - 1.0).abs() < 0.05, "{d}");
        assert!(box_dimension(&c, &[0.1, 0.05]).is_err());
        assert!(box_dimension(&c, &[0.1]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn relative_size_scale_invariant(s in 0.01f64..100.0, dx in 2.0f64..5.0) {
            let e = [p(0.0, 0.0), p(1.0, 0.5), p(0.3, 1.0)];
            let f = [p(dx, 0.0), p(dx + 0.7, 0.2)];
            let scaled = |v: &[Point2]| v.iter().map(|&q| q * s).collect::<Vec<_>>();
            let a = relative_size(&e, &f).unwrap();
            prop_assert!((relative_size(&scaled(&e), &scaled(&f)).unwrap() - a).abs() < 1e-12 * a.max(1.0));
            prop_assert_eq!(relative_size(&f, &e).unwrap(), a);
        }

        #[test]
        fn ahlfors_similarity_invariant(t in 0.0f64..6.3, s in 0.1f64..10.0, dx in -5.0f64..5.0) {
            let k = koch_curve(2, 45.0).unwrap();
            let (c, si) = (t.cos(), t.sin());
            let moved = k.map(|q| p(s * (c * q.x - si * q.y) + dx, s * (si * q.x + c * q.y) - dx)).unwrap();
            let (a, b) = (ahlfors_constant(&k).unwrap(), ahlfors_constant(&moved).unwrap());
            prop_assert!((a - b).abs() < 1e-10 * a);
        }
    }
}
