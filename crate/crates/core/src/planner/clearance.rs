//! Exact distances between path segments and convex polygons.

use crate::geom::{ArcSegment, LineSegment, Point2, Segment};
use crate::planner::ConvexPolygon;
use crate::smoother::SmoothPath;

fn orientation(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return true;
    }
    (o1 == 0.0 && on_segment(a, b, c))
        || (o2 == 0.0 && on_segment(a, b, d))
        || (o3 == 0.0 && on_segment(c, d, a))
        || (o4 == 0.0 && on_segment(c, d, b))
}

pub fn segment_segment_distance(a: LineSegment, b: LineSegment) -> f64 {
    if segments_intersect(a.a, a.b, b.a, b.b) {
        return 0.0;
    }
    a.distance_to_point(b.a)
        .min(a.distance_to_point(b.b))
        .min(b.distance_to_point(a.a))
        .min(b.distance_to_point(a.b))
}

fn arc_crosses_segment(arc: &ArcSegment, seg: LineSegment) -> bool {
    let d = seg.b - seg.a;
    let f = seg.a - arc.center;
    let a = d.dot(d);
    let b = 2.0 * f.dot(d);
    let c = f.dot(f) - arc.radius * arc.radius;
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 || a == 0.0 {
        return false;
    }
    let sq = disc.sqrt();
    [(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
        .into_iter()
        .filter(|t| (0.0..=1.0).contains(t))
        .any(|t| {
            let rel = seg.a + d * t - arc.center;
            arc.contains_angle(rel.y.atan2(rel.x))
        })
}

/// Exact distance between an arc and a segment.
pub fn arc_segment_distance(arc: &ArcSegment, seg: LineSegment) -> f64 {
    if arc_crosses_segment(arc, seg) {
        return 0.0;
    }
    let (a0, _) = arc.endpoint(false);
    let (a1, _) = arc.endpoint(true);
    let mut best = seg
        .distance_to_point(a0)
        .min(seg.distance_to_point(a1))
        .min(arc.distance_to_point(seg.a))
        .min(arc.distance_to_point(seg.b));
    // interior-interior candidate: foot of the center on the segment
    let foot = seg.closest_point(arc.center);
    let rel = foot - arc.center;
    let rho = rel.norm();
    if rho > 0.0 && arc.contains_angle(rel.y.atan2(rel.x)) {
        best = best.min((rho - arc.radius).abs());
    }
    best
}

/// Exact distance from a segment to a filled convex polygon (0 on contact).
pub fn segment_polygon_distance(seg: &Segment, poly: &ConvexPolygon) -> f64 {
    let (start, _) = seg.start();
    if poly.contains(start) {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for (a, b) in poly.edges() {
        let edge = LineSegment::new(a, b);
        let d = match seg {
            Segment::Line(l) => segment_segment_distance(*l, edge),
            Segment::Arc(arc) => arc_segment_distance(arc, edge),
        };
        if d == 0.0 {
            return 0.0;
        }
        best = best.min(d);
    }
    best
}

/// Minimum distance between the path and any obstacle; `+∞` without obstacles.
pub fn clearance(path: &SmoothPath, obstacles: &[ConvexPolygon]) -> f64 {
    path.segments()
        .iter()
        .flat_map(|s| obstacles.iter().map(move |o| segment_polygon_distance(s, o)))
        .fold(f64::INFINITY, f64::min)
}
