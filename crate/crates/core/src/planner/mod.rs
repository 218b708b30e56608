//! Obstacle-aware planning: inflate each obstacle by the offset its sharpest
//! vertex needs, search the visibility graph of the inflated obstacles, then
//! smooth the resulting polyline.
//!
//! The result carries the exact clearance between the smoothed path and the
//! original obstacles. When the offset holds, that clearance is at least the
//! robot radius; `certified` records whether it did.

mod clearance;
mod polygon;
mod search;
mod visibility;

pub use clearance::{arc_segment_distance, clearance, segment_polygon_distance, segment_segment_distance};
pub use polygon::{mitered_inflate, required_offset, ConvexPolygon};
pub use search::shortest_path;
pub use visibility::{build_visibility_graph, is_visible, VisibilityGraph, INTERIOR_MARGIN};

use crate::error::PlanError;
use crate::geom::Point2;
use crate::smoother::{smooth_polyline, Polyline, SmoothPath, TurnRadius};

/// Slack allowed when comparing clearance against the robot radius.
pub const CLEARANCE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    /// `[xmin, ymin, xmax, ymax]`
    pub bounds: [f64; 4],
    pub robot_radius: f64,
    pub turning_radius: f64,
    pub start: Point2,
    pub goal: Point2,
    pub obstacles: Vec<ConvexPolygon>,
}

impl Scenario {
    pub fn in_bounds(&self, p: Point2) -> bool {
        p.x >= self.bounds[0] && p.x <= self.bounds[2] && p.y >= self.bounds[1] && p.y <= self.bounds[3]
    }

    fn check(&self) -> Result<(), PlanError> {
        let [x0, y0, x1, y1] = self.bounds;
        if !(x0.is_finite() && y0.is_finite() && x1.is_finite() && y1.is_finite() && x0 < x1 && y0 < y1) {
            return Err(PlanError::InvalidScenario(format!("bad bounds {:?}", self.bounds)));
        }
        for (name, p) in [("start", self.start), ("goal", self.goal)] {
            if !p.is_finite() || !self.in_bounds(p) {
                return Err(PlanError::InvalidScenario(format!("{name} {p} is outside the bounds")));
            }
        }
        if self.start.distance(self.goal) < crate::geom::LENGTH_EPSILON {
            return Err(PlanError::InvalidScenario("start and goal coincide".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct PlanResult {
    /// Shortest visibility-graph polyline, start to goal.
    pub polyline: Vec<Point2>,
    pub path: SmoothPath,
    /// Obstacles after inflation, in input order.
    pub inflated: Vec<ConvexPolygon>,
    /// Inflation distance used for each obstacle.
    pub offsets: Vec<f64>,
    /// Exact minimum distance from `path` to the original obstacles.
    pub clearance: f64,
    /// `clearance >= robot_radius` up to [`CLEARANCE_TOLERANCE`].
    pub certified: bool,
}

/// Largest offset any vertex of `poly` needs.
pub fn obstacle_offset(poly: &ConvexPolygon, h: f64, r: f64) -> Result<f64, PlanError> {
    (0..poly.len()).try_fold(0.0f64, |acc, i| Ok(acc.max(required_offset(h, r, poly.interior_angle(i))?)))
}

pub fn plan(scenario: &Scenario) -> Result<PlanResult, PlanError> {
    scenario.check()?;
    let h = scenario.robot_radius;
    let r = scenario.turning_radius;
    let radius = TurnRadius::new(r).map_err(|_| {
        PlanError::InvalidScenario(format!("turning radius must be positive, got {r}"))
    })?;

    let mut offsets = Vec::with_capacity(scenario.obstacles.len());
    let mut inflated = Vec::with_capacity(scenario.obstacles.len());
    for poly in &scenario.obstacles {
        let offset = obstacle_offset(poly, h, r)?;
        offsets.push(offset);
        inflated.push(mitered_inflate(poly, offset)?);
    }

    for (which, point) in [("start", scenario.start), ("goal", scenario.goal)] {
        if inflated.iter().any(|o| o.contains_strictly(point, INTERIOR_MARGIN)) {
            return Err(PlanError::Unreachable { which, point });
        }
    }

    let graph = build_visibility_graph(scenario.start, scenario.goal, &inflated, scenario.bounds);
    let (nodes, _) = shortest_path(&graph).ok_or(PlanError::NoPath)?;
    let polyline: Vec<Point2> = nodes.iter().map(|&i| graph.nodes[i]).collect();

    let smoothed = Polyline::new(polyline.clone())
        .and_then(|poly| smooth_polyline(&poly, radius))
        .map_err(|source| PlanError::Smoothing { polyline: polyline.clone(), source })?;

    let clearance = clearance(&smoothed, &scenario.obstacles);
    Ok(PlanResult {
        polyline,
        path: smoothed,
        inflated,
        offsets,
        clearance,
        certified: clearance >= h - CLEARANCE_TOLERANCE,
    })
}
