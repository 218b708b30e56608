use thiserror::Error;

use crate::geom::Point2;
use crate::smoother::FeasibilityReport;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate geometry: points {a} and {b} coincide")]
    DegeneratePoints { a: Point2, b: Point2 },
    #[error("non-finite coordinate in {0}")]
    NonFinite(Point2),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SmoothError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("a polyline needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("turning radius must be finite and positive, got {0}")]
    InvalidRadius(f64),
    #[error("interior angle {0} is outside (0, π)")]
    AngleOutOfDomain(f64),
    #[error("the three points are collinear; the vertex is a pass-through")]
    Collinear,
    #[error("no curvature-bounded smoothing exists: {0}")]
    Infeasible(FeasibilityReport),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("{which} point {point} lies inside an inflated obstacle")]
    Unreachable { which: &'static str, point: Point2 },
    #[error("goal is not reachable from start on the visibility graph")]
    NoPath,
    #[error("smoothing the planned polyline failed: {source}")]
    Smoothing {
        polyline: Vec<Point2>,
        #[source]
        source: SmoothError,
    },
}
