use std::fmt;

use crate::geom::{Heading, Point2, RigidTransform, Segment};
use crate::smoother::TurnRadius;

/// A G¹ sequence of lines and arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct SmoothPath {
    segments: Vec<Segment>,
    start: Point2,
    end: Point2,
}

impl SmoothPath {
    /// Wraps an already assembled segment list. Nothing is checked here; use
    /// [`validate`] for that.
    pub fn from_segments(segments: Vec<Segment>) -> Option<Self> {
        let start = segments.first()?.start().0;
        let end = segments.last()?.end().0;
        Some(Self {
            segments,
            start,
            end,
        })
    }

    pub(crate) fn from_parts(segments: Vec<Segment>, start: Point2, end: Point2) -> Self {
        Self {
            segments,
            start,
            end,
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn into_segments(self) -> Vec<Segment> {
        self.segments
    }

    pub fn start_point(&self) -> Point2 {
        self.start
    }

    pub fn end_point(&self) -> Point2 {
        self.end
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn length(&self) -> f64 {
        path_length(self)
    }

    pub fn arc_count(&self) -> usize {
        self.segments
            .iter()
            .filter(|s| matches!(s, Segment::Arc(_)))
            .count()
    }

    pub fn transformed(&self, t: &RigidTransform) -> SmoothPath {
        SmoothPath {
            segments: self.segments.iter().map(|s| t.apply_segment(s)).collect(),
            start: t.apply(self.start),
            end: t.apply(self.end),
        }
    }

    /// Exact distance from `p` to the nearest point of the path.
    pub fn distance_to_point(&self, p: Point2) -> f64 {
        self.segments
            .iter()
            .map(|s| s.distance_to_point(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Position and heading at the start of every segment and at the end of
    /// the last one.
    pub fn junctions(&self) -> Vec<(Point2, Heading)> {
        let mut out: Vec<(Point2, Heading)> = self.segments.iter().map(Segment::start).collect();
        out.extend(self.segments.last().map(Segment::end));
        out
    }

    /// Mutable access for fault-injection in tests and tools.
    pub fn segments_mut(&mut self) -> &mut [Segment] {
        &mut self.segments
    }
}

/// Sum of segment lengths.
pub fn path_length(path: &SmoothPath) -> f64 {
    path.segments.iter().map(Segment::length).sum()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Violation {
    /// Segment `index` does not start where segment `index - 1` ends.
    Gap { index: usize, distance: f64 },
    /// Direction of travel jumps between segment `index - 1` and `index`.
    Kink { index: usize, angle: f64 },
    /// Arc `index` is tighter than the turning radius allows.
    Curvature { index: usize, radius: f64 },
}

impl Violation {
    pub fn index(&self) -> usize {
        match *self {
            Violation::Gap { index, .. }
            | Violation::Kink { index, .. }
            | Violation::Curvature { index, .. } => index,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Gap { index, distance } => {
                write!(f, "segment {index} starts {distance:e} away from the previous end")
            }
            Violation::Kink { index, angle } => {
                write!(f, "heading jumps by {angle:e} rad entering segment {index}")
            }
            Violation::Curvature { index, radius } => {
                write!(f, "arc {index} has radius {radius} below the turning radius")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks endpoint chaining, heading continuity at every junction and the
/// minimum arc radius. Gaps are measured relative to the coordinate
/// magnitude, kinks in radians, radii relative to `r`.
pub fn validate(path: &SmoothPath, r: TurnRadius, tol: f64) -> ValidationReport {
    let mut violations = Vec::new();
    for (index, seg) in path.segments.iter().enumerate() {
        if let Segment::Arc(arc) = seg {
            if arc.radius < r.get() * (1.0 - tol) {
                violations.push(Violation::Curvature {
                    index,
                    radius: arc.radius,
                });
            }
        }
        if index == 0 {
            continue;
        }
        let (prev_end, prev_heading) = path.segments[index - 1].end();
        let (start, heading) = seg.start();
        let distance = prev_end.distance(start);
        let scale = prev_end.x.abs().max(prev_end.y.abs()).max(1.0);
        if distance > tol * scale {
            violations.push(Violation::Gap { index, distance });
        }
        let angle = prev_heading.delta_to(heading).abs();
        if angle > tol {
            violations.push(Violation::Kink { index, angle });
        }
    }
    violations.sort_by_key(Violation::index);
    ValidationReport { violations }
}
