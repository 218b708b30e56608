//! On-disk formats: polyline CSV, scenario JSON and path JSON.

use std::fs;
use std::io::Read;
use std::path::Path;

use dps_core::geom::{ArcSegment, Heading, LineSegment, Point2, Segment};
use dps_core::{ConvexPolygon, Scenario, SmoothPath};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// One record of a path file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SegmentRecord {
    Line {
        a: [f64; 2],
        b: [f64; 2],
    },
    Arc {
        center: [f64; 2],
        radius: f64,
        start_angle: f64,
        sweep: f64,
    },
}

impl From<&Segment> for SegmentRecord {
    fn from(seg: &Segment) -> Self {
        match seg {
            Segment::Line(l) => SegmentRecord::Line {
                a: [l.a.x, l.a.y],
                b: [l.b.x, l.b.y],
            },
            Segment::Arc(a) => SegmentRecord::Arc {
                center: [a.center.x, a.center.y],
                radius: a.radius,
                start_angle: a.start_angle.radians(),
                sweep: a.sweep,
            },
        }
    }
}

impl From<&SegmentRecord> for Segment {
    fn from(rec: &SegmentRecord) -> Self {
        match *rec {
            SegmentRecord::Line { a, b } => {
                Segment::Line(LineSegment::new(Point2::new(a[0], a[1]), Point2::new(b[0], b[1])))
            }
            SegmentRecord::Arc {
                center,
                radius,
                start_angle,
                sweep,
            } => Segment::Arc(ArcSegment::new(
                Point2::new(center[0], center[1]),
                radius,
                Heading::new(start_angle),
                sweep,
            )),
        }
    }
}

/// A smoothed path with its metadata. Floats are written in shortest
/// round-trip form, so loading gives back the same bits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathFile {
    pub segments: Vec<SegmentRecord>,
    pub total_length: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_clearance: Option<f64>,
}

impl PathFile {
    pub fn from_path(path: &SmoothPath, min_clearance: Option<f64>) -> Self {
        Self {
            segments: path.segments().iter().map(SegmentRecord::from).collect(),
            total_length: path.length(),
            // JSON has no infinity; no obstacles means no clearance entry
            min_clearance: min_clearance.filter(|c| c.is_finite()),
        }
    }

    pub fn to_path(&self) -> Option<SmoothPath> {
        SmoothPath::from_segments(self.segments.iter().map(Segment::from).collect())
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read_text(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("path file serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioFile {
    pub bounds: [f64; 4],
    pub robot_radius: f64,
    pub turning_radius: f64,
    pub start: [f64; 2],
    pub goal: [f64; 2],
    #[serde(default)]
    pub obstacles: Vec<Vec<[f64; 2]>>,
}

impl ScenarioFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read_text(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    /// Obstacles are replaced by their convex hulls.
    pub fn to_scenario(&self) -> Result<Scenario, CliError> {
        let obstacles = self
            .obstacles
            .iter()
            .enumerate()
            .map(|(i, verts)| {
                let pts: Vec<Point2> = verts.iter().map(|v| Point2::new(v[0], v[1])).collect();
                ConvexPolygon::hull(&pts).map_err(|e| CliError::Parse(format!("obstacle {i}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Scenario {
            bounds: self.bounds,
            robot_radius: self.robot_radius,
            turning_radius: self.turning_radius,
            start: Point2::new(self.start[0], self.start[1]),
            goal: Point2::new(self.goal[0], self.goal[1]),
            obstacles,
        })
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Parses `x,y` records; a leading `x,y` header is skipped.
pub fn parse_polyline(text: &str) -> Result<Vec<Point2>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Parse(format!("line {}: {e}", i + 1)))?;
        if record.len() != 2 {
            return Err(CliError::Parse(format!(
                "line {}: expected 2 fields, found {}",
                i + 1,
                record.len()
            )));
        }
        if i == 0 && record[0].eq_ignore_ascii_case("x") && record[1].eq_ignore_ascii_case("y") {
            continue;
        }
        let coord = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| CliError::Parse(format!("line {}: {s:?}: {e}", i + 1)))
        };
        points.push(Point2::new(coord(&record[0])?, coord(&record[1])?));
    }
    if points.len() < 2 {
        return Err(CliError::Parse(format!(
            "a polyline needs at least 2 points, found {}",
            points.len()
        )));
    }
    Ok(points)
}

pub fn load_polyline(path: &Path) -> Result<Vec<Point2>, CliError> {
    parse_polyline(&read_text(path)?)
}

pub fn polyline_csv(points: &[Point2]) -> String {
    let mut out = String::from("x,y\n");
    for p in points {
        out.push_str(&format!("{:?},{:?}\n", p.x, p.y));
    }
    out
}
