//! Polyline smoothing with minimum-radius arcs.
//!
//! Each interior vertex is handled on its own: the circle of radius `r`
//! tangent to both incident segments replaces the corner, and straight
//! pieces join consecutive tangent points. Corners never interact, so the
//! whole polyline is smoothed in linear time and the per-corner work can be
//! spread across threads without changing a single bit of the output.

mod feasibility;
mod path;
mod triplet;

use rayon::prelude::*;

use crate::error::{GeomError, SmoothError};
use crate::geom::{LineSegment, Point2, Segment, LENGTH_EPSILON};

pub use feasibility::{check_far_condition, check_global_existence, FeasibilityReport};
pub use path::{path_length, validate, SmoothPath, ValidationReport, Violation};
pub use triplet::{
    center_distance, check_local_existence, deviation_bound, solve_three_points, tangent_length,
    TripletSolution,
};

use triplet::CornerGeometry;

/// Minimum turning radius in meters.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct TurnRadius(f64);

impl TurnRadius {
    pub fn new(r: f64) -> Result<Self, SmoothError> {
        if r.is_finite() && r > 0.0 {
            Ok(Self(r))
        } else {
            Err(SmoothError::InvalidRadius(r))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// An ordered point sequence with no two consecutive points coincident.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    points: Vec<Point2>,
}

impl Polyline {
    pub fn new(points: Vec<Point2>) -> Result<Self, SmoothError> {
        if points.len() < 2 {
            return Err(SmoothError::TooFewPoints(points.len()));
        }
        if let Some(bad) = points.iter().find(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite(*bad).into());
        }
        for w in points.windows(2) {
            if w[0].distance(w[1]) < LENGTH_EPSILON {
                return Err(GeomError::DegeneratePoints { a: w[0], b: w[1] }.into());
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point2> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn length(&self) -> f64 {
        self.points.windows(2).map(|w| w[0].distance(w[1])).sum()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SmoothOptions {
    /// Smooth infeasible polylines anyway by shrinking the tangent lengths to
    /// what the segments can hold. The affected arcs get a radius below `r`.
    pub best_effort: bool,
}

/// Full result of a smoothing run.
#[derive(Clone, Debug, PartialEq)]
pub struct Smoothed {
    pub path: SmoothPath,
    pub report: FeasibilityReport,
    /// Vertices whose tangent length was clamped in best-effort mode.
    pub clamped: Vec<usize>,
}

impl Smoothed {
    /// True when every piece is provably a shortest Dubins path.
    pub fn is_optimal(&self) -> bool {
        self.clamped.is_empty() && self.report.is_guaranteed()
    }
}

#[derive(Clone, Copy, Debug)]
enum Corner {
    PassThrough,
    Turn(TripletSolution),
}

fn solve_corner(corner: &CornerGeometry, l: f64) -> Corner {
    if corner.is_pass_through() {
        Corner::PassThrough
    } else {
        Corner::Turn(corner.solve_with_length(l))
    }
}

/// Tangent lengths clamped so that neighbouring tangent points never cross:
/// an edge shared by two arcs is split in proportion to their demands.
fn clamped_lengths(points: &[Point2], corners: &[CornerGeometry], r: f64) -> (Vec<f64>, Vec<usize>) {
    let n = points.len();
    let wanted: Vec<f64> = corners.iter().map(|c| c.tangent_length(r)).collect();
    let demand = |vertex: usize| -> f64 {
        if vertex == 0 || vertex == n - 1 {
            0.0
        } else {
            wanted[vertex - 1]
        }
    };
    let mut lengths = wanted.clone();
    let mut clamped = Vec::new();
    for (k, l) in lengths.iter_mut().enumerate() {
        let v = k + 1;
        let mut allowed = f64::INFINITY;
        for (a, b) in [(v - 1, v), (v, v + 1)] {
            let len = points[a].distance(points[b]);
            let (da, db) = (demand(a), demand(b));
            if da + db > len {
                let mine = if a == v { da } else { db };
                let share = if mine.is_infinite() {
                    // a hairpin takes whatever its neighbour leaves
                    let other = if a == v { db } else { da };
                    if other.is_infinite() { len / 2.0 } else { (len - other).max(len / 2.0) }
                } else {
                    len * mine / (da + db)
                };
                allowed = allowed.min(share);
            }
        }
        if *l > allowed {
            *l = allowed;
            clamped.push(v);
        }
    }
    (lengths, clamped)
}

fn assemble(points: &[Point2], corners: &[Corner]) -> SmoothPath {
    let start = points[0];
    let end = points[points.len() - 1];
    let mut segments = Vec::with_capacity(2 * corners.len() + 1);
    let mut cursor = start;
    for corner in corners {
        if let Corner::Turn(sol) = corner {
            if cursor.distance(sol.q1) >= LENGTH_EPSILON {
                segments.push(Segment::Line(LineSegment::new(cursor, sol.q1)));
            }
            let arc = sol.arc();
            if arc.length() >= LENGTH_EPSILON {
                segments.push(Segment::Arc(arc));
            }
            cursor = sol.q2;
        }
    }
    if cursor.distance(end) >= LENGTH_EPSILON || segments.is_empty() {
        segments.push(Segment::Line(LineSegment::new(cursor, end)));
    }
    SmoothPath::from_parts(segments, start, end)
}

/// Shared pipeline; `solve` maps every corner to its solution and is the only
/// step that differs between the sequential and the parallel entry points.
fn smooth_impl<F>(
    poly: &Polyline,
    r: TurnRadius,
    options: SmoothOptions,
    corners: Vec<CornerGeometry>,
    solve: F,
) -> Result<Smoothed, SmoothError>
where
    F: FnOnce(&[CornerGeometry], &[f64]) -> Vec<Corner>,
{
    let points = poly.points();
    let report = feasibility::report_from_corners(poly, &corners, r.get());
    let (lengths, clamped) = if report.is_feasible() {
        (corners.iter().map(|c| c.tangent_length(r.get())).collect(), Vec::new())
    } else if options.best_effort {
        clamped_lengths(points, &corners, r.get())
    } else {
        return Err(SmoothError::Infeasible(report));
    };
    let solved = solve(&corners, &lengths);
    Ok(Smoothed {
        path: assemble(points, &solved),
        report,
        clamped,
    })
}

/// Smooths with explicit options, returning the feasibility report and any
/// clamped vertices along with the path.
pub fn smooth_polyline_with(
    poly: &Polyline,
    r: TurnRadius,
    options: SmoothOptions,
) -> Result<Smoothed, SmoothError> {
    let corners = feasibility::corners(poly.points());
    smooth_impl(poly, r, options, corners, |corners, lengths| {
        corners
            .iter()
            .zip(lengths)
            .map(|(c, &l)| solve_corner(c, l))
            .collect()
    })
}

/// Shortest G¹ smoothing of `poly` with arcs of radius `r`. Refuses with the
/// feasibility report when some corner does not fit.
pub fn smooth_polyline(poly: &Polyline, r: TurnRadius) -> Result<SmoothPath, SmoothError> {
    smooth_polyline_with(poly, r, SmoothOptions::default()).map(|s| s.path)
}

/// Same output as [`smooth_polyline_with`], bit for bit, with corners solved
/// on a thread pool.
///
/// `threads == 0` uses the global rayon pool, `threads == 1` runs
/// sequentially, and any other value runs on a dedicated pool of that size.
pub fn smooth_polyline_batch_with(
    poly: &Polyline,
    r: TurnRadius,
    options: SmoothOptions,
    threads: usize,
) -> Result<Smoothed, SmoothError> {
    match threads {
        1 => smooth_polyline_with(poly, r, options),
        0 => smooth_parallel(poly, r, options),
        n => {
            // building the pool only fails on OS thread exhaustion
            match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| smooth_parallel(poly, r, options)),
                Err(_) => smooth_polyline_with(poly, r, options),
            }
        }
    }
}

fn smooth_parallel(
    poly: &Polyline,
    r: TurnRadius,
    options: SmoothOptions,
) -> Result<Smoothed, SmoothError> {
    let corners: Vec<CornerGeometry> = poly
        .points()
        .par_windows(3)
        .map(|w| CornerGeometry::new(w[0], w[1], w[2]))
        .collect();
    smooth_impl(poly, r, options, corners, |corners, lengths| {
        corners
            .par_iter()
            .zip(lengths.par_iter())
            .map(|(c, &l)| solve_corner(c, l))
            .collect()
    })
}

/// Parallel counterpart of [`smooth_polyline`]; see
/// [`smooth_polyline_batch_with`] for the meaning of `threads`.
pub fn smooth_polyline_batch(
    poly: &Polyline,
    r: TurnRadius,
    threads: usize,
) -> Result<SmoothPath, SmoothError> {
    smooth_polyline_batch_with(poly, r, SmoothOptions::default(), threads).map(|s| s.path)
}

/// Start and end configurations of every smoothed piece: piece `j` runs from
/// the exit of corner `j` (or the first point) to the exit of corner `j + 1`
/// (or the last point). Pass-through vertices do not split pieces.
pub fn piece_configurations(
    poly: &Polyline,
    r: TurnRadius,
) -> Result<Vec<PieceConfig>, SmoothError> {
    let points = poly.points();
    let corners = feasibility::corners(points);
    let report = feasibility::report_from_corners(poly, &corners, r.get());
    if !report.is_feasible() {
        return Err(SmoothError::Infeasible(report));
    }
    let first_heading = crate::geom::heading_between(points[0], points[1])?;
    let mut pieces = Vec::new();
    let mut from = (points[0], first_heading);
    let mut from_vertex = 0;
    let mut length_so_far = 0.0;
    let mut cursor = points[0];
    for (k, c) in corners.iter().enumerate() {
        let vertex = k + 1;
        if c.is_pass_through() {
            continue;
        }
        let sol = c.solve_with_length(c.tangent_length(r.get()));
        length_so_far += cursor.distance(sol.q1) + sol.arc().length();
        let to_heading = crate::geom::Heading::new(c.dir_out.y.atan2(c.dir_out.x));
        pieces.push(PieceConfig {
            start: from.0,
            start_heading: from.1,
            end: sol.q2,
            end_heading: to_heading,
            length: length_so_far,
            from_vertex,
            to_vertex: vertex,
            far_ok: report.far_ok[from_vertex..vertex].iter().all(|&b| b),
        });
        from = (sol.q2, to_heading);
        from_vertex = vertex;
        cursor = sol.q2;
        length_so_far = 0.0;
    }
    let last = points.len() - 1;
    pieces.push(PieceConfig {
        start: from.0,
        start_heading: from.1,
        end: points[last],
        end_heading: from.1,
        length: cursor.distance(points[last]),
        from_vertex,
        to_vertex: last,
        far_ok: report.far_ok[from_vertex..last].iter().all(|&b| b),
    });
    Ok(pieces)
}

/// One line-then-arc piece of a smoothed path, as a pair of configurations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PieceConfig {
    pub start: Point2,
    pub start_heading: crate::geom::Heading,
    pub end: Point2,
    pub end_heading: crate::geom::Heading,
    /// Length of the smoothed path between the two configurations.
    pub length: f64,
    pub from_vertex: usize,
    pub to_vertex: usize,
    /// The 4r separation holds on every polyline edge this piece spans.
    pub far_ok: bool,
}
