//! Random polylines for benchmarks and property checks.
//!
//! Each new point lies on a circle around the previous one, with the circle
//! radius drawn uniformly from `[min_step, max_step]` and the direction
//! uniformly from `[0, 2π)`. A candidate is redrawn until the corner it
//! closes satisfies the existence checks and the `4r` separation, so every
//! generated polyline smooths with the optimality guarantee.

use std::f64::consts::TAU;

use rand::Rng;

use crate::geom::Point2;
use crate::smoother::TurnRadius;

/// Sampling parameters. The defaults are steps in `[1, 10]` and radius 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolylineProtocol {
    pub min_step: f64,
    pub max_step: f64,
    pub radius: f64,
    /// Redraws allowed per point before backtracking. The whole polyline
    /// gets `100 * n` times this.
    pub max_attempts: usize,
}

impl Default for PolylineProtocol {
    fn default() -> Self {
        Self {
            min_step: 1.0,
            max_step: 10.0,
            radius: 1.0,
            max_attempts: 100,
        }
    }
}

impl PolylineProtocol {
    pub fn with_radius(radius: f64) -> Self {
        Self {
            radius,
            ..Self::default()
        }
    }

    pub fn turn_radius(&self) -> TurnRadius {
        TurnRadius::new(self.radius).expect("protocol radius must be positive")
    }
}

/// Tangent length at `p_m` for radius `r`, 0 when straight.
fn tangent_at(p_i: Point2, p_m: Point2, p_f: Point2, r: f64) -> (f64, Point2) {
    let v1 = p_m - p_i;
    let v2 = p_f - p_m;
    let cross = v1.cross(v2);
    let denom = v1.dot(v2) + v1.norm() * v2.norm();
    let l = if denom <= 0.0 { f64::INFINITY } else { r * cross.abs() / denom };
    (l, v2.normalized())
}

/// Generates an `n`-point polyline under `protocol`, or `None` if the
/// attempt budget runs out.
///
/// Candidates that provably leave no valid continuation are redrawn at once.
/// Other dead ends are caught after `max_attempts` failed draws, when the
/// previous point is dropped and redrawn.
pub fn random_feasible_polyline<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    protocol: &PolylineProtocol,
) -> Option<Vec<Point2>> {
    assert!(n >= 2, "a polyline needs at least two points");
    let r = protocol.radius;
    let far = 4.0 * r;
    let mut pts = Vec::with_capacity(n);
    pts.push(Point2::ORIGIN);
    // tangent length at each placed vertex once its corner is known
    let mut tangents: Vec<f64> = vec![0.0];
    let mut budget = protocol.max_attempts.saturating_mul(n).saturating_mul(100);

    while pts.len() < n {
        let k = pts.len();
        let last = pts[k - 1];
        let is_final = k == n - 1;
        let mut placed = false;
        for _ in 0..protocol.max_attempts {
            if budget == 0 {
                return None;
            }
            budget -= 1;
            let step = rng.gen_range(protocol.min_step..=protocol.max_step);
            let angle = rng.gen_range(0.0..TAU);
            let cand = last + Point2::from_polar(step, angle);
            if is_final && step < far {
                continue;
            }
            // the next corner can reach at most `2 step - l` from `last`; below
            // 4r the far condition there is already lost
            let reach = |l: f64| is_final || 2.0 * step - l >= far;
            if k == 1 {
                if !reach(0.0) {
                    continue;
                }
                pts.push(cand);
                placed = true;
                break;
            }
            let before = pts[k - 2];
            let (l, dir_out) = tangent_at(before, last, cand, r);
            let len_in = before.distance(last);
            // edge (before, last) holds both tangent points, the new edge holds ours
            if tangents[k - 2] + l > len_in || l > step {
                continue;
            }
            // 4r between `before` and the first tangent point after `last`
            let q = last + dir_out * l;
            if before.distance(q) < far || !reach(l) {
                continue;
            }
            tangents[k - 1] = l;
            pts.push(cand);
            placed = true;
            break;
        }
        if placed {
            tangents.push(0.0);
        } else if k > 1 {
            pts.pop();
            tangents.pop();
            tangents[k - 2] = 0.0;
        }
    }
    Some(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smoother::{check_global_existence, Polyline};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_polylines_pass_all_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for radius in [0.25, 1.0, 2.0] {
            let protocol = PolylineProtocol::with_radius(radius);
            for n in [2, 3, 4, 10, 200] {
                let pts = random_feasible_polyline(&mut rng, n, &protocol).unwrap_or_else(|| panic!("r={radius} n={n}"));
                assert_eq!(pts.len(), n);
                let poly = Polyline::new(pts).unwrap();
                let report = check_global_existence(&poly, protocol.turn_radius());
                assert!(report.is_guaranteed(), "r={radius} n={n}: {report}");
            }
        }
    }

    #[test]
    fn same_seed_same_polyline() {
        let protocol = PolylineProtocol::default();
        let a = random_feasible_polyline(&mut ChaCha8Rng::seed_from_u64(42), 50, &protocol);
        let b = random_feasible_polyline(&mut ChaCha8Rng::seed_from_u64(42), 50, &protocol);
        assert_eq!(a, b);
    }

    #[test]
    fn impossible_protocol_gives_up() {
        let protocol = PolylineProtocol {
            radius: 5.0,
            max_attempts: 100,
            ..PolylineProtocol::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(random_feasible_polyline(&mut rng, 3, &protocol).is_none());
    }
}
