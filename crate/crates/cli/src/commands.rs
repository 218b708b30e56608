use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use dps_core::smoother::{piece_configurations, smooth_polyline_batch_with, smooth_polyline_with};
use dps_core::{
    classify_j_type, dubins_shortest, plan, PlanError, Polyline, Pose, SmoothError, SmoothOptions, TurnRadius,
};

use crate::formats::{load_polyline, PathFile, ScenarioFile};
use crate::svg::{render, Drawing};
use crate::{batch_threads, CliError};

/// Relative tolerance for `oracle-check`.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// Writes to `out`, or to stdout when no file is given.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn turn_radius(r: f64) -> Result<TurnRadius, CliError> {
    TurnRadius::new(r).map_err(|e| CliError::Parse(e.to_string()))
}

fn smooth_error(e: SmoothError) -> CliError {
    match e {
        SmoothError::Infeasible(report) => CliError::Infeasible(report.to_string()),
        other => CliError::Parse(other.to_string()),
    }
}

pub struct SmoothArgs {
    pub input: PathBuf,
    pub radius: f64,
    pub best_effort: bool,
    pub parallel: bool,
    pub output: Option<PathBuf>,
}

pub fn smooth(args: &SmoothArgs) -> Result<(), CliError> {
    let r = turn_radius(args.radius)?;
    let poly = Polyline::new(load_polyline(&args.input)?).map_err(smooth_error)?;
    let options = SmoothOptions {
        best_effort: args.best_effort,
    };
    let smoothed = if args.parallel {
        smooth_polyline_batch_with(&poly, r, options, batch_threads())
    } else {
        smooth_polyline_with(&poly, r, options)
    }
    .map_err(smooth_error)?;
    if !smoothed.clamped.is_empty() {
        eprintln!(
            "warning: tangent lengths clamped at vertices {:?}; arcs there are tighter than r ({})",
            smoothed.clamped, smoothed.report
        );
    } else if !smoothed.report.is_guaranteed() {
        eprintln!("note: smoothed, but not provably shortest: {}", smoothed.report);
    }
    emit(args.output.as_deref(), &PathFile::from_path(&smoothed.path, None).to_json())
}

pub fn plan_scenario(input: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let scenario = ScenarioFile::load(input)?.to_scenario()?;
    let res = match plan(&scenario) {
        Ok(res) => res,
        Err(e @ (PlanError::NoPath | PlanError::Unreachable { .. })) => return Err(CliError::NoPath(e.to_string())),
        Err(PlanError::Smoothing { source, .. }) => return Err(smooth_error(source)),
        Err(e) => return Err(CliError::Parse(e.to_string())),
    };
    emit(output, &PathFile::from_path(&res.path, Some(res.clearance)).to_json())?;
    if !res.certified {
        return Err(CliError::Uncertified(format!(
            "clearance {} is below the robot radius {}",
            res.clearance, scenario.robot_radius
        )));
    }
    Ok(())
}

/// Compares every smoothed piece against the shortest Dubins path between
/// its end configurations and returns the printed report.
pub fn oracle_check(input: &Path, radius: f64) -> Result<String, CliError> {
    let r = turn_radius(radius)?;
    let poly = Polyline::new(load_polyline(input)?).map_err(smooth_error)?;
    let pieces = piece_configurations(&poly, r).map_err(smooth_error)?;
    let mut out = String::from("piece,vertices,dps_length,oracle_length,word,j_type,status\n");
    let (mut failed, mut unguaranteed) = (0usize, 0usize);
    for (i, piece) in pieces.iter().enumerate() {
        let start = Pose::from_parts(piece.start, piece.start_heading);
        let goal = Pose::from_parts(piece.end, piece.end_heading);
        let word = dubins_shortest(start, goal, r);
        let (is_j, _) = classify_j_type(start, goal, r);
        let close = (word.total() - piece.length).abs() <= ORACLE_TOLERANCE * piece.length.max(1.0);
        let status = if !piece.far_ok {
            unguaranteed += 1;
            "no guarantee"
        } else if close && is_j {
            "ok"
        } else {
            failed += 1;
            "MISMATCH"
        };
        writeln!(
            out,
            "{i},{}-{},{:?},{:?},{:?},{is_j},{status}",
            piece.from_vertex,
            piece.to_vertex,
            piece.length,
            word.total(),
            word.kind
        )
        .unwrap();
    }
    writeln!(
        out,
        "# {} pieces: {} ok, {failed} mismatched, {unguaranteed} without guarantee",
        pieces.len(),
        pieces.len() - failed - unguaranteed
    )
    .unwrap();
    if failed > 0 {
        return Err(CliError::Mismatch(out));
    }
    Ok(out)
}

pub struct RenderArgs {
    pub path: PathBuf,
    pub scenario: Option<PathBuf>,
    pub polyline: Option<PathBuf>,
    pub output: Option<PathBuf>,
}

pub fn render_svg(args: &RenderArgs) -> Result<(), CliError> {
    let path = PathFile::load(&args.path)?
        .to_path()
        .ok_or_else(|| CliError::Parse(format!("{}: path has no segments", args.path.display())))?;
    let scenario = args
        .scenario
        .as_deref()
        .map(|p| ScenarioFile::load(p)?.to_scenario())
        .transpose()?;
    let polyline = args.polyline.as_deref().map(load_polyline).transpose()?;
    let drawing = Drawing {
        path: Some(&path),
        polyline: polyline.as_deref(),
        obstacles: scenario.as_ref().map_or(&[], |s| s.obstacles.as_slice()),
        bounds: scenario.as_ref().map(|s| s.bounds),
    };
    emit(args.output.as_deref(), &render(&drawing))
}
