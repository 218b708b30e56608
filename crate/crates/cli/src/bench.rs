//! Timing and length-ratio table over random feasible polylines.
//!
//! Polylines come from `ChaCha8Rng::seed_from_u64(seed)`, reseeded for every
//! `n`, so the length columns depend only on the seed and the options.

use std::fmt::Write as _;
use std::time::Instant;

use dps_core::dubins::multipoint_dp;
use dps_core::random::{random_feasible_polyline, PolylineProtocol};
use dps_core::smoother::smooth_polyline_batch;
use dps_core::{multipoint_bruteforce, smooth_polyline, Polyline};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchOptions {
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub seed: u64,
    pub radius: f64,
    /// Heading samples per point for the free-heading multi-point baseline.
    pub mpdp_samples: usize,
    /// The free-heading baseline is skipped above this many points.
    pub mpdp_max_n: usize,
    pub threads: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            sizes: vec![1000],
            repeats: 10,
            seed: 42,
            radius: 2.0,
            mpdp_samples: 360,
            mpdp_max_n: 1000,
            threads: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub seq_us: f64,
    pub batch_us: f64,
    pub dps_length: f64,
    /// Free headings sampled at every polyline vertex.
    pub vertex_length: Option<f64>,
    /// Headings fixed to the smoothed path's own segment junctions.
    pub junction_length: f64,
}

pub const HEADER: &str = "n,seq_us,batch_us,dps_len,mpdp_p_len,ratio_p,mpdp_q_len,ratio_q";

impl BenchRow {
    pub fn csv(&self) -> String {
        let (p_len, ratio_p) = match self.vertex_length {
            Some(v) => (format!("{v:?}"), format!("{:?}", v / self.dps_length)),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{:.3},{:.3},{:?},{p_len},{ratio_p},{:?},{:?}",
            self.n,
            self.seq_us,
            self.batch_us,
            self.dps_length,
            self.junction_length,
            self.junction_length / self.dps_length
        )
    }
}

fn mean_micros(repeats: usize, mut f: impl FnMut()) -> f64 {
    f();
    let started = Instant::now();
    for _ in 0..repeats {
        f();
    }
    started.elapsed().as_secs_f64() * 1e6 / repeats as f64
}

pub fn run_size(n: usize, opts: &BenchOptions) -> Result<BenchRow, CliError> {
    if n < 3 {
        return Err(CliError::Parse(format!("bench needs n >= 3, got {n}")));
    }
    let protocol = PolylineProtocol::with_radius(opts.radius);
    let r = dps_core::TurnRadius::new(opts.radius).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let points = random_feasible_polyline(&mut rng, n, &protocol)
        .ok_or_else(|| CliError::Infeasible(format!("could not draw a feasible polyline with n={n}, r={}", opts.radius)))?;
    let poly = Polyline::new(points).map_err(|e| CliError::Parse(e.to_string()))?;
    let path = smooth_polyline(&poly, r).map_err(|e| CliError::Infeasible(e.to_string()))?;

    let repeats = opts.repeats.max(1);
    let seq_us = mean_micros(repeats, || {
        std::hint::black_box(smooth_polyline(&poly, r).ok());
    });
    let batch_us = mean_micros(repeats, || {
        std::hint::black_box(smooth_polyline_batch(&poly, r, opts.threads).ok());
    });

    let (points, headings): (Vec<_>, Vec<Vec<f64>>) =
        path.junctions().into_iter().map(|(p, h)| (p, vec![h.radians()])).unzip();
    let junction_length = multipoint_dp(&points, &headings, r).length;
    let vertex_length = (n <= opts.mpdp_max_n).then(|| multipoint_bruteforce(poly.points(), r, opts.mpdp_samples));
    Ok(BenchRow {
        n,
        seq_us,
        batch_us,
        dps_length: path.length(),
        vertex_length,
        junction_length,
    })
}

pub fn run(opts: &BenchOptions) -> Result<String, CliError> {
    if opts.mpdp_samples < 4 {
        return Err(CliError::Parse("--mpdp-samples must be at least 4".into()));
    }
    let mut out = format!("{HEADER}\n");
    for &n in &opts.sizes {
        writeln!(out, "{}", run_size(n, opts)?.csv()).unwrap();
    }
    Ok(out)
}
