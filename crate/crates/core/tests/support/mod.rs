//! Test-only helpers: a Dubins search that never touches the closed forms,
//! random inputs, and sampled distances.
#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use dps_core::geom::{LineSegment, Point2};
use dps_core::planner::ConvexPolygon;
use dps_core::{Pose, Scenario, SmoothPath};
use rand::Rng;

/// First-arc sweep samples per word.
pub const GRID: usize = 2000;

fn left_normal(theta: f64) -> Point2 {
    Point2::new(-theta.sin(), theta.cos())
}

fn wrap(angle: f64) -> f64 {
    let a = angle.rem_euclid(TAU);
    if a > TAU - 1e-9 {
        0.0
    } else {
        a
    }
}

/// Drives an arc of `sweep` radians turning `dir` (+1 left, -1 right).
fn arc(pos: Point2, theta: f64, dir: f64, sweep: f64, r: f64) -> (Point2, f64) {
    let center = pos + left_normal(theta) * (dir * r);
    let end_theta = theta + dir * sweep;
    (center - left_normal(end_theta) * (dir * r), end_theta)
}

/// Zeros of `f` on `[0, 2π]`: sign changes refined by bisection, plus local
/// minima of `|f|` refined by golden section to catch double roots.
fn roots(f: impl Fn(f64) -> f64, tol: f64) -> Vec<f64> {
    let xs: Vec<f64> = (0..=GRID).map(|k| TAU * k as f64 / GRID as f64).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut out = Vec::new();
    for k in 0..GRID {
        let (a, b) = (xs[k], xs[k + 1]);
        let (fa, fb) = (ys[k], ys[k + 1]);
        if fa.abs() <= tol {
            out.push(a);
        }
        if fa * fb < 0.0 {
            let (mut lo, mut hi, mut flo) = (a, b, fa);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (fm < 0.0) == (flo < 0.0) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
    }
    for k in 1..GRID {
        if ys[k].abs() <= ys[k - 1].abs() && ys[k].abs() <= ys[k + 1].abs() {
            let (mut lo, mut hi) = (xs[k - 1], xs[k + 1]);
            let g = (5f64.sqrt() - 1.0) / 2.0;
            for _ in 0..200 {
                let m1 = hi - g * (hi - lo);
                let m2 = lo + g * (hi - lo);
                if f(m1).abs() < f(m2).abs() {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            let x = 0.5 * (lo + hi);
            if f(x).abs() <= tol {
                out.push(x);
            }
        }
    }
    out
}

/// Shortest Dubins length found by searching the first-arc sweep of every
/// word family and solving the tangency that closes the path, verified by
/// driving each candidate to the goal.
pub fn discretized_shortest(start: Pose, goal: Pose, r: f64) -> f64 {
    let p0 = start.position;
    let t0 = start.heading.radians();
    let pg = goal.position;
    let tg = goal.heading.radians();
    let scale = 1.0 + p0.norm().max(pg.norm()) + r;
    let tol = 1e-10 * scale;
    let reach = 1e-6 * scale;
    let mut best = f64::INFINITY;

    for (d1, d3) in [(1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
        let cg = pg + left_normal(tg) * (d3 * r);
        let tangency = |phi: f64| {
            let (p1, t1) = arc(p0, t0, d1, phi, r);
            let u = Point2::new(t1.cos(), t1.sin());
            u.cross(cg - p1) - d3 * r
        };
        for phi in roots(tangency, tol) {
            let (p1, t1) = arc(p0, t0, d1, phi, r);
            let u = Point2::new(t1.cos(), t1.sin());
            let s = u.dot(cg - p1);
            if s < -tol {
                continue;
            }
            let s = s.max(0.0);
            let phi3 = wrap(d3 * (tg - t1));
            let (end, end_t) = arc(p1 + u * s, t1, d3, phi3, r);
            if end.distance(pg) > reach || wrap(end_t - tg).min(TAU - wrap(end_t - tg)) > 1e-6 {
                continue;
            }
            best = best.min(r * wrap(phi) + s + r * phi3);
        }
    }

    for d1 in [1.0, -1.0] {
        let (d2, d3) = (-d1, d1);
        let cg = pg + left_normal(tg) * (d3 * r);
        let middle_center = |phi: f64| {
            let (p1, t1) = arc(p0, t0, d1, phi, r);
            (p1 + left_normal(t1) * (d2 * r), t1)
        };
        let touching = |phi: f64| middle_center(phi).0.distance(cg) - 2.0 * r;
        for phi in roots(touching, tol) {
            let (cm, t1) = middle_center(phi);
            let (p1, _) = arc(p0, t0, d1, phi, r);
            let joint = (cm + cg) * 0.5;
            let normal = (joint - cm) * (-1.0 / (d2 * r));
            let t_joint = (-normal.x).atan2(normal.y);
            let phi2 = wrap(d2 * (t_joint - t1));
            let phi3 = wrap(d3 * (tg - t_joint));
            let (mid, mid_t) = arc(p1, t1, d2, phi2, r);
            let (end, end_t) = arc(mid, mid_t, d3, phi3, r);
            if end.distance(pg) > reach || wrap(end_t - tg).min(TAU - wrap(end_t - tg)) > 1e-6 {
                continue;
            }
            best = best.min(r * (wrap(phi) + phi2 + phi3));
        }
    }
    best
}

pub fn random_pose<R: Rng>(rng: &mut R, extent: f64) -> Pose {
    Pose::new(
        rng.gen_range(-extent..extent),
        rng.gen_range(-extent..extent),
        rng.gen_range(-PI..PI),
    )
}

/// Three points with both edges in `[0.5, 10]` and a corner that is neither
/// straight nor reversed.
pub fn random_triplet<R: Rng>(rng: &mut R) -> [Point2; 3] {
    loop {
        let a = Point2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let h1 = rng.gen_range(-PI..PI);
        let b = a + Point2::from_polar(rng.gen_range(0.5..10.0), h1);
        let turn: f64 = rng.gen_range(-3.0..3.0);
        if turn.abs() < 1e-3 {
            continue;
        }
        let c = b + Point2::from_polar(rng.gen_range(0.5..10.0), h1 + turn);
        return [a, b, c];
    }
}

fn random_obstacle<R: Rng>(rng: &mut R, bounds: [f64; 4]) -> Option<ConvexPolygon> {
    let c = Point2::new(
        rng.gen_range(bounds[0] + 2.0..bounds[2] - 2.0),
        rng.gen_range(bounds[1] + 2.0..bounds[3] - 2.0),
    );
    let size = rng.gen_range(0.5..3.0);
    let pts: Vec<Point2> = (0..rng.gen_range(3..9))
        .map(|_| c + Point2::from_polar(size * rng.gen_range(0.3..1.0), rng.gen_range(0.0..TAU)))
        .collect();
    let hull = ConvexPolygon::hull(&pts).ok()?;
    // skip slivers, whose offsets blow up
    (hull.min_interior_angle() > 0.2).then_some(hull)
}

/// Random convex obstacles in a 30 m square, robot radius in `[0.1, 0.5]`,
/// turning radius in `[h, 3h]`.
pub fn random_scenario<R: Rng>(rng: &mut R) -> Scenario {
    let bounds = [0.0, 0.0, 30.0, 30.0];
    let h = rng.gen_range(0.1..0.5);
    let r = rng.gen_range(h..3.0 * h);
    let count = rng.gen_range(1..=6);
    let obstacles = (0..count).filter_map(|_| random_obstacle(rng, bounds)).collect();
    let mut point = || Point2::new(rng.gen_range(0.0..30.0), rng.gen_range(0.0..30.0));
    Scenario {
        bounds,
        robot_radius: h,
        turning_radius: r,
        start: point(),
        goal: point(),
        obstacles,
    }
}

pub fn point_polygon_distance(p: Point2, poly: &ConvexPolygon) -> f64 {
    if poly.contains(p) {
        return 0.0;
    }
    poly.edges()
        .map(|(a, b)| LineSegment::new(a, b).distance_to_point(p))
        .fold(f64::INFINITY, f64::min)
}

/// Minimum obstacle distance over `samples` points spread along the path by
/// arc length, and the spacing between samples.
pub fn sampled_clearance(path: &SmoothPath, obstacles: &[ConvexPolygon], samples: usize) -> (f64, f64) {
    let total = path.length();
    let spacing = total / samples as f64;
    let mut best = f64::INFINITY;
    for seg in path.segments() {
        let k = ((seg.length() / total) * samples as f64).ceil().max(1.0) as usize;
        for i in 0..=k {
            let p = seg.point_at(i as f64 / k as f64);
            for o in obstacles {
                best = best.min(point_polygon_distance(p, o));
            }
        }
    }
    (best, spacing)
}
