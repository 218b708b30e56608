//! SVG output. Arcs are written as SVG elliptical-arc commands, never as
//! polyline approximations.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write;

use dps_core::geom::{Point2, Segment};
use dps_core::{ConvexPolygon, SmoothPath};

const PATH_COLOR: &str = "#d62728";
const POLYLINE_COLOR: &str = "#1f77b4";
const OBSTACLE_FILL: &str = "#7f7f7f";
const MARGIN: f64 = 0.05;

#[derive(Default)]
pub struct Drawing<'a> {
    pub path: Option<&'a SmoothPath>,
    pub polyline: Option<&'a [Point2]>,
    pub obstacles: &'a [ConvexPolygon],
    pub bounds: Option<[f64; 4]>,
}

struct Frame {
    min: Point2,
    max: Point2,
}

impl Frame {
    fn include(&mut self, p: Point2) {
        self.min = Point2::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = Point2::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }

    /// SVG y grows downwards.
    fn map(&self, p: Point2) -> Point2 {
        Point2::new(p.x - self.min.x, self.max.y - p.y)
    }
}

fn arc_extremes(seg: &Segment) -> Vec<Point2> {
    let mut pts = vec![seg.start().0, seg.end().0];
    if let Segment::Arc(a) = seg {
        for k in 0..4 {
            let angle = k as f64 * FRAC_PI_2;
            if a.contains_angle(angle) {
                pts.push(a.point_at_angle(angle));
            }
        }
    }
    pts
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// `d` attribute for the path: one `M`, then `L` per line and `A` per arc.
pub fn path_data(path: &SmoothPath, map: impl Fn(Point2) -> Point2) -> String {
    let start = map(path.start_point());
    let mut d = format!("M {} {}", fmt(start.x), fmt(start.y));
    for seg in path.segments() {
        match seg {
            Segment::Line(l) => {
                let b = map(l.b);
                write!(d, " L {} {}", fmt(b.x), fmt(b.y)).unwrap();
            }
            Segment::Arc(a) => {
                // a full turn cannot be one SVG arc; split it in halves
                let pieces = if a.sweep.abs() >= TAU - 1e-9 { 2 } else { 1 };
                for k in 1..=pieces {
                    let end = map(a.point_at(k as f64 / pieces as f64));
                    let sweep = a.sweep / pieces as f64;
                    let large = u8::from(sweep.abs() > PI);
                    // counter-clockwise in the plane is clockwise once y is flipped
                    let dir = u8::from(sweep > 0.0);
                    let r = fmt(a.radius);
                    write!(d, " A {r} {r} 0 {large} {dir} {} {}", fmt(end.x), fmt(end.y)).unwrap();
                }
            }
        }
    }
    d
}

pub fn render(drawing: &Drawing) -> String {
    let mut frame = Frame {
        min: Point2::new(f64::INFINITY, f64::INFINITY),
        max: Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    };
    if let Some([x0, y0, x1, y1]) = drawing.bounds {
        frame.include(Point2::new(x0, y0));
        frame.include(Point2::new(x1, y1));
    }
    if let Some(path) = drawing.path {
        path.segments().iter().flat_map(arc_extremes).for_each(|p| frame.include(p));
    }
    drawing.polyline.into_iter().flatten().for_each(|&p| frame.include(p));
    drawing
        .obstacles
        .iter()
        .flat_map(|o| o.vertices().iter())
        .for_each(|&p| frame.include(p));
    if !frame.min.x.is_finite() {
        frame.include(Point2::ORIGIN);
        frame.include(Point2::new(1.0, 1.0));
    }
    let size = (frame.max - frame.min).norm().max(1e-9);
    let pad = size * MARGIN;
    frame.min = frame.min - Point2::new(pad, pad);
    frame.max = frame.max + Point2::new(pad, pad);
    let width = frame.max.x - frame.min.x;
    let height = frame.max.y - frame.min.y;
    let stroke = size / 300.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="800" height="{}">"#,
        fmt(width),
        fmt(height),
        fmt(800.0 * height / width)
    )
    .unwrap();
    if let Some([x0, y0, x1, y1]) = drawing.bounds {
        let corner = frame.map(Point2::new(x0, y1));
        writeln!(
            out,
            r#"  <rect class="bounds" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
            fmt(corner.x),
            fmt(corner.y),
            fmt(x1 - x0),
            fmt(y1 - y0),
            fmt(stroke)
        )
        .unwrap();
    }
    for o in drawing.obstacles {
        let pts: Vec<String> = o
            .vertices()
            .iter()
            .map(|&p| {
                let q = frame.map(p);
                format!("{},{}", fmt(q.x), fmt(q.y))
            })
            .collect();
        writeln!(
            out,
            r#"  <polygon class="obstacle" points="{}" fill="{OBSTACLE_FILL}"/>"#,
            pts.join(" ")
        )
        .unwrap();
    }
    if let Some(poly) = drawing.polyline {
        let pts: Vec<String> = poly
            .iter()
            .map(|&p| {
                let q = frame.map(p);
                format!("{},{}", fmt(q.x), fmt(q.y))
            })
            .collect();
        writeln!(
            out,
            r#"  <polyline class="polyline" points="{}" fill="none" stroke="{POLYLINE_COLOR}" stroke-width="{}"/>"#,
            pts.join(" "),
            fmt(2.0 * stroke)
        )
        .unwrap();
    }
    if let Some(path) = drawing.path {
        writeln!(
            out,
            r#"  <path class="smoothed" d="{}" fill="none" stroke="{PATH_COLOR}" stroke-width="{}"/>"#,
            path_data(path, |p| frame.map(p)),
            fmt(stroke)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
