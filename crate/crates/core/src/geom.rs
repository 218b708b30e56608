//! Planar primitives shared by the smoother, the Dubins solver and the planner.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::GeomError;

/// Points closer than this are considered coincident (meters).
pub const LENGTH_EPSILON: f64 = 1e-9;

/// Relative tolerance on `|v1 x v2| / (|v1| |v2|)` below which two directions
/// are treated as collinear.
pub const COLLINEAR_EPSILON: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Self) -> f64 {
        (other - self).norm()
    }

    /// Unit vector in the same direction. Callers guarantee a non-zero vector.
    #[inline]
    pub fn normalized(self) -> Self {
        let n = self.norm();
        Self::new(self.x / n, self.y / n)
    }

    /// Rotated by +π/2.
    #[inline]
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    #[inline]
    pub fn from_polar(radius: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(radius * c, radius * s)
    }

    #[inline]
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Self::new(x, y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Wraps an angle into `(-π, π]`. Values already in range are returned untouched,
/// which makes the operation idempotent bit for bit.
#[inline]
pub fn normalize_angle(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    let wrapped = theta.rem_euclid(TAU);
    if wrapped > PI {
        wrapped - TAU
    } else {
        wrapped
    }
}

/// Wraps an angle into `[0, 2π)`.
#[inline]
pub fn mod_two_pi(theta: f64) -> f64 {
    let wrapped = theta.rem_euclid(TAU);
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// A direction of travel in radians, always within `(-π, π]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct Heading(f64);

impl Heading {
    #[inline]
    pub fn new(theta: f64) -> Self {
        Self(normalize_angle(theta))
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn unit_vector(self) -> Point2 {
        Point2::from_polar(1.0, self.0)
    }

    /// Signed smallest rotation taking `self` to `other`, in `(-π, π]`.
    #[inline]
    pub fn delta_to(self, other: Heading) -> f64 {
        normalize_angle(other.0 - self.0)
    }
}

impl Add<f64> for Heading {
    type Output = Heading;
    #[inline]
    fn add(self, rhs: f64) -> Heading {
        Heading::new(self.0 + rhs)
    }
}

impl Sub<f64> for Heading {
    type Output = Heading;
    #[inline]
    fn sub(self, rhs: f64) -> Heading {
        Heading::new(self.0 - rhs)
    }
}

fn ensure_distinct(p: Point2, q: Point2) -> Result<(), GeomError> {
    if p.distance(q) < LENGTH_EPSILON {
        Err(GeomError::DegeneratePoints { a: p, b: q })
    } else {
        Ok(())
    }
}

/// Direction of travel from `p` to `q`.
pub fn heading_between(p: Point2, q: Point2) -> Result<Heading, GeomError> {
    ensure_distinct(p, q)?;
    Ok(Heading::new((q.y - p.y).atan2(q.x - p.x)))
}

/// Angle at `p` between the segment back to `p_prev` and the segment on to
/// `p_next`. Equals π for collinear pass-through and tends to 0 for a hairpin.
pub fn interior_angle(p_prev: Point2, p: Point2, p_next: Point2) -> Result<f64, GeomError> {
    ensure_distinct(p_prev, p)?;
    ensure_distinct(p, p_next)?;
    ensure_distinct(p_prev, p_next)?;
    Ok(interior_angle_of(p - p_prev, p_next - p))
}

/// Interior angle between an incoming direction `v1` and an outgoing one `v2`.
#[inline]
pub(crate) fn interior_angle_of(v1: Point2, v2: Point2) -> f64 {
    let turn = v1.cross(v2).atan2(v1.dot(v2));
    PI - turn.abs()
}

/// Scale-invariant collinearity of two directions (either orientation).
#[inline]
pub fn is_collinear(v1: Point2, v2: Point2) -> bool {
    v1.cross(v2).abs() <= COLLINEAR_EPSILON * v1.norm() * v2.norm()
}

/// Translation, then rotation, then an optional reflection across the x-axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidTransform {
    pub rotation: f64,
    pub translation: Point2,
    pub reflect_x: bool,
}

impl Default for RigidTransform {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl RigidTransform {
    pub const IDENTITY: RigidTransform = RigidTransform {
        rotation: 0.0,
        translation: Point2::ORIGIN,
        reflect_x: false,
    };

    pub fn new(rotation: f64, translation: Point2, reflect_x: bool) -> Self {
        Self {
            rotation,
            translation,
            reflect_x,
        }
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        let q = (p + self.translation).rotated(self.rotation);
        if self.reflect_x {
            Point2::new(q.x, -q.y)
        } else {
            q
        }
    }

    pub fn apply_inverse(&self, p: Point2) -> Point2 {
        let q = if self.reflect_x {
            Point2::new(p.x, -p.y)
        } else {
            p
        };
        q.rotated(-self.rotation) - self.translation
    }

    pub fn apply_heading(&self, h: Heading) -> Heading {
        let rotated = h.radians() + self.rotation;
        if self.reflect_x {
            Heading::new(-rotated)
        } else {
            Heading::new(rotated)
        }
    }

    /// Signed sweeps flip under reflection.
    pub fn apply_sweep(&self, sweep: f64) -> f64 {
        if self.reflect_x {
            -sweep
        } else {
            sweep
        }
    }

    pub fn apply_arc(&self, arc: &ArcSegment) -> ArcSegment {
        ArcSegment {
            center: self.apply(arc.center),
            radius: arc.radius,
            start_angle: self.apply_heading(arc.start_angle),
            sweep: self.apply_sweep(arc.sweep),
        }
    }

    pub fn apply_line(&self, line: &LineSegment) -> LineSegment {
        LineSegment {
            a: self.apply(line.a),
            b: self.apply(line.b),
        }
    }

    pub fn apply_segment(&self, seg: &Segment) -> Segment {
        match seg {
            Segment::Line(l) => Segment::Line(self.apply_line(l)),
            Segment::Arc(a) => Segment::Arc(self.apply_arc(a)),
        }
    }
}

/// Places `p_i` at the origin, `p_m` on the positive x-axis and `p_f` in the
/// upper half-plane (reflecting if needed). Returns the transform and the
/// transformed triple.
pub fn to_standard_setting(
    p_i: Point2,
    p_m: Point2,
    p_f: Point2,
) -> Result<(RigidTransform, [Point2; 3]), GeomError> {
    ensure_distinct(p_i, p_m)?;
    let rotation = -(p_m.y - p_i.y).atan2(p_m.x - p_i.x);
    let mut transform = RigidTransform::new(rotation, -p_i, false);
    let mut triple = [
        transform.apply(p_i),
        transform.apply(p_m),
        transform.apply(p_f),
    ];
    // the rotation leaves rounding noise in the y coordinates
    triple[0] = Point2::ORIGIN;
    triple[1].y = 0.0;
    if triple[2].y < 0.0 {
        transform.reflect_x = true;
        triple[2].y = -triple[2].y;
    }
    Ok((transform, triple))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineSegment {
    pub a: Point2,
    pub b: Point2,
}

impl LineSegment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Self { a, b }
    }

    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }

    pub fn heading(&self) -> Heading {
        Heading::new((self.b.y - self.a.y).atan2(self.b.x - self.a.x))
    }

    /// Closest point on the segment to `p`.
    pub fn closest_point(&self, p: Point2) -> Point2 {
        let ab = self.b - self.a;
        let len2 = ab.dot(ab);
        if len2 == 0.0 {
            return self.a;
        }
        let t = ((p - self.a).dot(ab) / len2).clamp(0.0, 1.0);
        self.a + ab * t
    }

    pub fn distance_to_point(&self, p: Point2) -> f64 {
        self.closest_point(p).distance(p)
    }
}

/// A circular arc. Positive sweep is counter-clockwise (a left turn).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcSegment {
    pub center: Point2,
    pub radius: f64,
    pub start_angle: Heading,
    pub sweep: f64,
}

impl ArcSegment {
    pub fn new(center: Point2, radius: f64, start_angle: Heading, sweep: f64) -> Self {
        Self {
            center,
            radius,
            start_angle,
            sweep,
        }
    }

    /// Polar angle of the end point, not normalized.
    pub fn end_angle(&self) -> f64 {
        self.start_angle.radians() + self.sweep
    }

    pub fn point_at_angle(&self, angle: f64) -> Point2 {
        self.center + Point2::from_polar(self.radius, angle)
    }

    /// Point at fraction `t ∈ [0, 1]` of the sweep.
    pub fn point_at(&self, t: f64) -> Point2 {
        self.point_at_angle(self.start_angle.radians() + t * self.sweep)
    }

    fn tangent_at_angle(&self, angle: f64) -> Heading {
        if self.sweep >= 0.0 {
            Heading::new(angle + PI / 2.0)
        } else {
            Heading::new(angle - PI / 2.0)
        }
    }

    /// Position and direction of travel at the start or end of the arc.
    pub fn endpoint(&self, at_end: bool) -> (Point2, Heading) {
        let angle = if at_end {
            self.end_angle()
        } else {
            self.start_angle.radians()
        };
        (self.point_at_angle(angle), self.tangent_at_angle(angle))
    }

    pub fn length(&self) -> f64 {
        self.radius * self.sweep.abs()
    }

    /// Whether the polar angle `angle` (about the center) lies on the arc.
    pub fn contains_angle(&self, angle: f64) -> bool {
        let offset = if self.sweep >= 0.0 {
            mod_two_pi(angle - self.start_angle.radians())
        } else {
            mod_two_pi(self.start_angle.radians() - angle)
        };
        offset <= self.sweep.abs() || self.sweep.abs() >= TAU
    }

    pub fn distance_to_point(&self, p: Point2) -> f64 {
        let rel = p - self.center;
        let rho = rel.norm();
        if rho > 0.0 && self.contains_angle(rel.y.atan2(rel.x)) {
            return (rho - self.radius).abs();
        }
        if rho == 0.0 {
            return self.radius;
        }
        let (a, _) = self.endpoint(false);
        let (b, _) = self.endpoint(true);
        a.distance(p).min(b.distance(p))
    }
}

/// Convenience wrapper matching the free-function form used across the crate.
pub fn arc_endpoint(arc: &ArcSegment, at_end: bool) -> (Point2, Heading) {
    arc.endpoint(at_end)
}

pub fn arc_length(arc: &ArcSegment) -> f64 {
    arc.length()
}

/// One piece of a smoothed path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Segment {
    Line(LineSegment),
    Arc(ArcSegment),
}

impl Segment {
    pub fn length(&self) -> f64 {
        match self {
            Segment::Line(l) => l.length(),
            Segment::Arc(a) => a.length(),
        }
    }

    pub fn start(&self) -> (Point2, Heading) {
        match self {
            Segment::Line(l) => (l.a, l.heading()),
            Segment::Arc(a) => a.endpoint(false),
        }
    }

    pub fn end(&self) -> (Point2, Heading) {
        match self {
            Segment::Line(l) => (l.b, l.heading()),
            Segment::Arc(a) => a.endpoint(true),
        }
    }

    /// Signed curvature: 0 for lines, ±1/radius for arcs.
    pub fn curvature(&self) -> f64 {
        match self {
            Segment::Line(_) => 0.0,
            Segment::Arc(a) => a.sweep.signum() / a.radius,
        }
    }

    pub fn distance_to_point(&self, p: Point2) -> f64 {
        match self {
            Segment::Line(l) => l.distance_to_point(p),
            Segment::Arc(a) => a.distance_to_point(p),
        }
    }

    /// Point at fraction `t ∈ [0, 1]` of the segment.
    pub fn point_at(&self, t: f64) -> Point2 {
        match self {
            Segment::Line(l) => l.a + (l.b - l.a) * t,
            Segment::Arc(a) => a.point_at(t),
        }
    }
}
