use std::f64::consts::PI;

use crate::error::{GeomError, PlanError};
use crate::geom::{interior_angle_of, Point2, LENGTH_EPSILON};

/// A strictly convex polygon with counter-clockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Checks the vertices are counter-clockwise and strictly convex.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, PlanError> {
        if vertices.len() < 3 {
            return Err(PlanError::InvalidScenario(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if let Some(bad) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite(*bad).into());
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if a.distance(b) < LENGTH_EPSILON {
                return Err(GeomError::DegeneratePoints { a, b }.into());
            }
            if (b - a).cross(c - b) <= 0.0 {
                return Err(PlanError::InvalidScenario(format!(
                    "polygon is not strictly convex and counter-clockwise at vertex {}",
                    (i + 1) % n
                )));
            }
        }
        Ok(Self { vertices })
    }

    /// Convex hull of arbitrary points (monotone chain), dropping collinear
    /// and repeated points.
    pub fn hull(points: &[Point2]) -> Result<Self, PlanError> {
        let mut pts: Vec<Point2> = points.to_vec();
        if let Some(bad) = pts.iter().find(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite(*bad).into());
        }
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup_by(|a, b| a.distance(*b) < LENGTH_EPSILON);
        if pts.len() < 3 {
            return Err(PlanError::InvalidScenario(
                "obstacle hull has fewer than 3 distinct points".into(),
            ));
        }
        let turn = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
        let mut lower: Vec<Point2> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point2> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Self::new(lower)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Interior angle at vertex `i`, in `(0, π)`.
    pub fn interior_angle(&self, i: usize) -> f64 {
        let n = self.vertices.len();
        let prev = self.vertices[(i + n - 1) % n];
        let cur = self.vertices[i];
        let next = self.vertices[(i + 1) % n];
        interior_angle_of(cur - prev, next - cur)
    }

    pub fn min_interior_angle(&self) -> f64 {
        (0..self.len())
            .map(|i| self.interior_angle(i))
            .fold(PI, f64::min)
    }

    /// Outward unit normal of edge `i` (from vertex `i` to `i + 1`).
    pub fn edge_normal(&self, i: usize) -> Point2 {
        let n = self.vertices.len();
        let d = (self.vertices[(i + 1) % n] - self.vertices[i]).normalized();
        Point2::new(d.y, -d.x)
    }

    /// Closed containment: boundary points count as inside.
    pub fn contains(&self, p: Point2) -> bool {
        self.edges().all(|(a, b)| (b - a).cross(p - a) >= 0.0)
    }

    /// Strictly inside by more than `margin`.
    pub fn contains_strictly(&self, p: Point2, margin: f64) -> bool {
        (0..self.len()).all(|i| self.edge_normal(i).dot(p - self.vertices[i]) < -margin)
    }

    /// Whether the segment `ab` passes through the open interior (deeper than
    /// `margin`). Segments along an edge or touching a vertex do not.
    pub fn segment_enters_interior(&self, a: Point2, b: Point2, margin: f64) -> bool {
        let dir = b - a;
        let (mut t0, mut t1) = (0.0f64, 1.0f64);
        for i in 0..self.len() {
            let normal = self.edge_normal(i);
            // need g(t) = normal·(a - v) + t normal·dir < -margin
            let g0 = normal.dot(a - self.vertices[i]) + margin;
            let slope = normal.dot(dir);
            if slope == 0.0 {
                if g0 >= 0.0 {
                    return false;
                }
            } else {
                let t = -g0 / slope;
                if slope > 0.0 {
                    t1 = t1.min(t);
                } else {
                    t0 = t0.max(t);
                }
            }
            if t0 >= t1 {
                return false;
            }
        }
        t0 < t1
    }

    pub fn centroid(&self) -> Point2 {
        let sum = self
            .vertices
            .iter()
            .fold(Point2::ORIGIN, |acc, &p| acc + p);
        sum * (1.0 / self.vertices.len() as f64)
    }
}

/// Mitered offset needed at an obstacle vertex of angle `alpha` so that a
/// robot of radius `h` following arcs of radius `r` around it stays clear:
/// `max(h sin(α/2) + r (1 - sin(α/2)), h)`.
pub fn required_offset(h: f64, r: f64, alpha: f64) -> Result<f64, PlanError> {
    if !(h.is_finite() && h > 0.0) {
        return Err(PlanError::InvalidScenario(format!("robot radius must be positive, got {h}")));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(PlanError::InvalidScenario(format!("turning radius must be positive, got {r}")));
    }
    if !(alpha > 0.0 && alpha < PI) {
        return Err(PlanError::InvalidScenario(format!(
            "vertex angle {alpha} is outside (0, π)"
        )));
    }
    let s = (alpha / 2.0).sin();
    Ok((h * s + r * (1.0 - s)).max(h))
}

/// Moves every edge outward by `offset` and joins neighbours at the
/// intersection of their offset lines. Each vertex moves `offset / sin(α/2)`
/// along its exterior bisector.
pub fn mitered_inflate(poly: &ConvexPolygon, offset: f64) -> Result<ConvexPolygon, PlanError> {
    if !(offset.is_finite() && offset >= 0.0) {
        return Err(PlanError::InvalidScenario(format!("offset must be non-negative, got {offset}")));
    }
    let n = poly.len();
    let vertices = (0..n)
        .map(|i| {
            let n_prev = poly.edge_normal((i + n - 1) % n);
            let n_next = poly.edge_normal(i);
            let bisector = n_prev + n_next;
            poly.vertices()[i] + bisector * (offset / (1.0 + n_prev.dot(n_next)))
        })
        .collect();
    ConvexPolygon::new(vertices)
}
