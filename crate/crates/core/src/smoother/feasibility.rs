use std::fmt;

use crate::error::SmoothError;
use crate::geom::LENGTH_EPSILON;
use crate::smoother::triplet::{local_ok, CornerGeometry};
use crate::smoother::{Polyline, TurnRadius};

/// Outcome of the existence checks on a whole polyline.
///
/// `local_ok` has one entry per vertex (endpoints are always `true`),
/// `global_ok` and `far_ok` have one entry per edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub local_ok: Vec<bool>,
    pub global_ok: Vec<bool>,
    pub far_ok: Vec<bool>,
}

fn failing(flags: &[bool]) -> Vec<usize> {
    flags
        .iter()
        .enumerate()
        .filter_map(|(i, ok)| (!ok).then_some(i))
        .collect()
}

impl FeasibilityReport {
    /// Every corner and edge can hold its tangent points.
    pub fn is_feasible(&self) -> bool {
        self.local_ok.iter().all(|&b| b) && self.global_ok.iter().all(|&b| b)
    }

    /// Feasible and every configuration pair is far enough apart that each
    /// smoothed piece is a shortest Dubins path.
    pub fn is_guaranteed(&self) -> bool {
        self.is_feasible() && self.far_ok.iter().all(|&b| b)
    }

    pub fn local_violations(&self) -> Vec<usize> {
        failing(&self.local_ok)
    }

    pub fn global_violations(&self) -> Vec<usize> {
        failing(&self.global_ok)
    }

    pub fn far_violations(&self) -> Vec<usize> {
        failing(&self.far_ok)
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let local = self.local_violations();
        let global = self.global_violations();
        let far = self.far_violations();
        if local.is_empty() && global.is_empty() && far.is_empty() {
            return write!(f, "all checks pass");
        }
        let mut parts = Vec::new();
        if !local.is_empty() {
            parts.push(format!("segments too short at vertices {local:?}"));
        }
        if !global.is_empty() {
            parts.push(format!("tangent points overlap on edges {global:?}"));
        }
        if !far.is_empty() {
            parts.push(format!("configurations closer than 4r on edges {far:?}"));
        }
        write!(f, "{}", parts.join("; "))
    }
}

pub(crate) fn corners(points: &[crate::geom::Point2]) -> Vec<CornerGeometry> {
    points
        .windows(3)
        .map(|w| CornerGeometry::new(w[0], w[1], w[2]))
        .collect()
}

/// Builds the report from precomputed corners (`corners[k]` is vertex `k + 1`).
pub(crate) fn report_from_corners(
    poly: &Polyline,
    corners: &[CornerGeometry],
    r: f64,
) -> FeasibilityReport {
    let pts = poly.points();
    let n = pts.len();
    let tangent = |vertex: usize| -> f64 {
        if vertex == 0 || vertex == n - 1 {
            0.0
        } else {
            corners[vertex - 1].tangent_length(r)
        }
    };

    let mut local_ok = vec![true; n];
    for (k, corner) in corners.iter().enumerate() {
        local_ok[k + 1] = local_ok_corner(corner, r);
    }

    let mut global_ok = Vec::with_capacity(n - 1);
    let mut far_ok = Vec::with_capacity(n - 1);
    for j in 0..n - 1 {
        let k = j + 1;
        let len = pts[j].distance(pts[k]);
        let (lj, lk) = (tangent(j), tangent(k));
        global_ok.push(len + LENGTH_EPSILON >= lj + lk);

        // first tangent point after p_k, or p_k itself when there is no arc there
        let q = if k < n - 1 {
            let c = &corners[k - 1];
            c.vertex + c.dir_out * lk
        } else {
            pts[k]
        };
        far_ok.push(lk.is_finite() && pts[j].distance(q) + LENGTH_EPSILON >= 4.0 * r);
    }

    FeasibilityReport {
        local_ok,
        global_ok,
        far_ok,
    }
}

fn local_ok_corner(corner: &CornerGeometry, r: f64) -> bool {
    local_ok(corner, r)
}

/// Per-vertex and per-edge existence checks for smoothing `poly` with radius `r`.
///
/// An edge `(p_j, p_k)` passes when it is at least as long as the sum of the
/// tangent lengths at its two ends; endpoints contribute nothing.
pub fn check_global_existence(poly: &Polyline, r: TurnRadius) -> FeasibilityReport {
    let c = corners(poly.points());
    report_from_corners(poly, &c, r.get())
}

/// Per-edge flags for the `4r` separation between `p_j` and the first
/// tangent point after `p_k`. Fails if the tangent points do not exist.
pub fn check_far_condition(poly: &Polyline, r: TurnRadius) -> Result<Vec<bool>, SmoothError> {
    let report = check_global_existence(poly, r);
    if !report.is_feasible() {
        return Err(SmoothError::Infeasible(report));
    }
    Ok(report.far_ok)
}
