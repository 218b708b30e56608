//! Fixtures shared by the criterion benchmarks in `benches/`.

use std::f64::consts::PI;

use dps_core::dubins::Pose;
use dps_core::random::{random_feasible_polyline, PolylineProtocol};
use dps_core::{Polyline, TurnRadius};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Radius used by every benchmark.
pub const RADIUS: f64 = 2.0;

pub fn radius() -> TurnRadius {
    TurnRadius::new(RADIUS).unwrap()
}

/// Seeded random polyline of `n` points that is feasible at [`RADIUS`].
pub fn polyline(n: usize, seed: u64) -> Polyline {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let protocol = PolylineProtocol::with_radius(RADIUS);
    Polyline::new(random_feasible_polyline(&mut rng, n, &protocol).expect("feasible polyline")).unwrap()
}

/// Seeded random pose pairs inside a 20 m square.
pub fn pose_pairs(count: usize, seed: u64) -> Vec<(Pose, Pose)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pose = || Pose::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0), rng.gen_range(-PI..PI));
    (0..count).map(|_| (pose(), pose())).collect()
}
