//! Dubins path smoothing: turns a collision-free polyline into the shortest
//! G¹ path of straight lines and minimum-radius circular arcs.
//!
//! The crate is organised bottom-up:
//!
//! - [`geom`]: points, headings, rigid transforms, line and arc segments.
//! - [`smoother`]: per-corner tangent construction, feasibility checks and
//!   whole-polyline smoothing (sequential and data-parallel).
//! - [`dubins`]: a six-word shortest Dubins solver and a sampled-heading
//!   multi-point dynamic program, used to check optimality.
//! - [`planner`]: mitered obstacle inflation, visibility graph, A*, and
//!   clearance certification of the smoothed path.
//! - [`random`]: seeded generators for benchmark polylines.

pub mod dubins;
pub mod error;
pub mod geom;
pub mod planner;
pub mod random;
pub mod smoother;

pub use dubins::{classify_j_type, dubins_shortest, multipoint_bruteforce, DubinsWord, Pose, WordKind};
pub use error::{GeomError, PlanError, SmoothError};
pub use geom::{
    arc_endpoint, arc_length, heading_between, interior_angle, to_standard_setting, ArcSegment,
    Heading, LineSegment, Point2, RigidTransform, Segment, COLLINEAR_EPSILON, LENGTH_EPSILON,
};
pub use planner::{plan, ConvexPolygon, PlanResult, Scenario};
pub use smoother::{
    path_length, smooth_polyline, smooth_polyline_batch, validate, FeasibilityReport, Polyline,
    SmoothOptions, SmoothPath, TripletSolution, TurnRadius,
};
