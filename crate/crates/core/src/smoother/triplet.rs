//! The three-point sub-problem: one corner of the polyline, one tangent circle.

use std::f64::consts::PI;

use crate::error::SmoothError;
use crate::geom::{interior_angle_of, is_collinear, ArcSegment, Heading, Point2, LENGTH_EPSILON};
use crate::smoother::{FeasibilityReport, TurnRadius};

fn check_alpha(alpha: f64) -> Result<(), SmoothError> {
    if alpha > 0.0 && alpha < PI {
        Ok(())
    } else {
        Err(SmoothError::AngleOutOfDomain(alpha))
    }
}

/// Distance from the corner to each tangent point: `r / tan(α/2)`.
pub fn tangent_length(alpha: f64, r: TurnRadius) -> Result<f64, SmoothError> {
    check_alpha(alpha)?;
    Ok(r.get() / (alpha / 2.0).tan())
}

/// Distance from the corner to the circle center: `r / sin(α/2)`.
pub fn center_distance(alpha: f64, r: TurnRadius) -> Result<f64, SmoothError> {
    check_alpha(alpha)?;
    Ok(r.get() / (alpha / 2.0).sin())
}

/// How far the smoothed path passes from the corner it cuts:
/// `r (1/sin(α/2) - 1)`.
pub fn deviation_bound(alpha: f64, r: TurnRadius) -> Result<f64, SmoothError> {
    check_alpha(alpha)?;
    Ok(r.get() * (1.0 / (alpha / 2.0).sin() - 1.0))
}

/// Everything derivable from a corner without committing to a radius or
/// checking feasibility.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CornerGeometry {
    pub vertex: Point2,
    pub dir_in: Point2,
    pub dir_out: Point2,
    pub len_in: f64,
    pub len_out: f64,
    pub alpha: f64,
    /// +1 for a left (counter-clockwise) turn, -1 for a right turn, 0 when collinear.
    pub turn_sign: f64,
    /// `tan(α/2)`, or +∞ for a pass-through.
    pub tan_half_alpha: f64,
}

impl CornerGeometry {
    pub fn new(p_i: Point2, p_m: Point2, p_f: Point2) -> Self {
        let v1 = p_m - p_i;
        let v2 = p_f - p_m;
        let len_in = v1.norm();
        let len_out = v2.norm();
        let cross = v1.cross(v2);
        let dot = v1.dot(v2);
        let collinear = dot > 0.0 && is_collinear(v1, v2);
        let turn_sign = if collinear { 0.0 } else if cross >= 0.0 { 1.0 } else { -1.0 };
        let denom = dot + len_in * len_out;
        // tan(α/2) = (v1·v2 + |v1||v2|) / |v1 × v2|
        let tan_half_alpha = if collinear {
            f64::INFINITY
        } else if cross == 0.0 {
            // exact reversal
            0.0
        } else {
            denom / cross.abs()
        };
        Self {
            vertex: p_m,
            dir_in: Point2::new(v1.x / len_in, v1.y / len_in),
            dir_out: Point2::new(v2.x / len_out, v2.y / len_out),
            len_in,
            len_out,
            alpha: interior_angle_of(v1, v2),
            turn_sign,
            tan_half_alpha,
        }
    }

    pub fn is_pass_through(&self) -> bool {
        self.turn_sign == 0.0
    }

    /// Tangent length for radius `r`, via the cross/dot form
    /// `r |v1 × v2| / (v1·v2 + |v1||v2|)`. Zero for pass-through, +∞ for a hairpin.
    pub fn tangent_length(&self, r: f64) -> f64 {
        if self.is_pass_through() {
            0.0
        } else {
            r / self.tan_half_alpha
        }
    }

    /// Builds the tangent circle with tangent length `l`; its radius is
    /// `l tan(α/2)`.
    pub fn solve_with_length(&self, l: f64) -> TripletSolution {
        let radius = l * self.tan_half_alpha;
        let q1 = self.vertex - self.dir_in * l;
        let q2 = self.vertex + self.dir_out * l;
        let center = q1 + self.dir_in.perp() * (self.turn_sign * radius);
        let half = self.alpha / 2.0;
        let d = radius / half.sin();
        TripletSolution {
            q1,
            q2,
            center,
            radius,
            l,
            d,
            alpha: self.alpha,
            sweep: self.turn_sign * (PI - self.alpha),
            deviation: d - radius,
        }
    }
}

/// Geometry of one smoothed corner.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TripletSolution {
    /// Tangent point on the incoming segment.
    pub q1: Point2,
    /// Tangent point on the outgoing segment.
    pub q2: Point2,
    pub center: Point2,
    /// Equal to the turning radius except for clamped best-effort corners.
    pub radius: f64,
    /// Corner-to-tangent-point distance.
    pub l: f64,
    /// Corner-to-center distance.
    pub d: f64,
    pub alpha: f64,
    /// Signed turn, positive to the left; `|sweep| = π - α`.
    pub sweep: f64,
    /// Distance between the corner and the arc.
    pub deviation: f64,
}

impl TripletSolution {
    pub fn arc(&self) -> ArcSegment {
        let rel = self.q1 - self.center;
        ArcSegment::new(
            self.center,
            self.radius,
            Heading::new(rel.y.atan2(rel.x)),
            self.sweep,
        )
    }
}

fn distinct(points: &[Point2]) -> Result<(), SmoothError> {
    for (i, a) in points.iter().enumerate() {
        if !a.is_finite() {
            return Err(crate::error::GeomError::NonFinite(*a).into());
        }
        for b in &points[i + 1..] {
            if a.distance(*b) < LENGTH_EPSILON {
                return Err(crate::error::GeomError::DegeneratePoints { a: *a, b: *b }.into());
            }
        }
    }
    Ok(())
}

/// Whether both incident segments are long enough to hold their tangent
/// point. Collinear triples pass trivially.
pub fn check_local_existence(
    p_i: Point2,
    p_m: Point2,
    p_f: Point2,
    r: TurnRadius,
) -> Result<bool, SmoothError> {
    distinct(&[p_i, p_m, p_f])?;
    let corner = CornerGeometry::new(p_i, p_m, p_f);
    Ok(local_ok(&corner, r.get()))
}

pub(crate) fn local_ok(corner: &CornerGeometry, r: f64) -> bool {
    let l = corner.tangent_length(r);
    corner.len_in.min(corner.len_out) + LENGTH_EPSILON >= l
}

/// Tangent points, center and sweep for the corner at `p_m`.
///
/// Returns [`SmoothError::Collinear`] when the corner is a straight
/// pass-through and [`SmoothError::Infeasible`] when a segment is too short
/// for the tangent point.
pub fn solve_three_points(
    p_i: Point2,
    p_m: Point2,
    p_f: Point2,
    r: TurnRadius,
) -> Result<TripletSolution, SmoothError> {
    distinct(&[p_i, p_m, p_f])?;
    let corner = CornerGeometry::new(p_i, p_m, p_f);
    if corner.is_pass_through() {
        return Err(SmoothError::Collinear);
    }
    if !local_ok(&corner, r.get()) {
        return Err(SmoothError::Infeasible(FeasibilityReport {
            local_ok: vec![true, false, true],
            global_ok: vec![
                corner.len_in + LENGTH_EPSILON >= corner.tangent_length(r.get()),
                corner.len_out + LENGTH_EPSILON >= corner.tangent_length(r.get()),
            ],
            far_ok: vec![false, false],
        }));
    }
    Ok(corner.solve_with_length(corner.tangent_length(r.get())))
}
