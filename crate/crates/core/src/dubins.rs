//! Shortest Dubins paths between two configurations, and a sampled-heading
//! dynamic program through a sequence of points.
//!
//! The six candidate words are the classical closed forms evaluated in the
//! frame where the start sits at the origin and the goal on the positive
//! x-axis, with unit turning radius. Ties are broken by the order of
//! [`WordKind::ALL`].

use std::f64::consts::TAU;
use std::fmt;

use crate::geom::{mod_two_pi, Heading, Point2};
use crate::smoother::TurnRadius;

/// Arc parameters this close to a full turn are the same configuration as no
/// turn at all and are reported as zero.
const FULL_TURN_SNAP: f64 = 1e-10;

/// Relative tolerance under which two word totals count as a tie.
const TIE_TOLERANCE: f64 = 1e-12;

/// A J-type path has no initial arc; `ℓ₁` at or below this (unit radius) counts as none.
pub const J_TYPE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pose {
    pub position: Point2,
    pub heading: Heading,
}

impl Pose {
    pub fn new(x: f64, y: f64, heading: f64) -> Self {
        Self {
            position: Point2::new(x, y),
            heading: Heading::new(heading),
        }
    }

    pub fn from_parts(position: Point2, heading: Heading) -> Self {
        Self { position, heading }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordKind {
    Lsl,
    Rsr,
    Lsr,
    Rsl,
    Rlr,
    Lrl,
}

/// One maneuver of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Steer {
    Left,
    Straight,
    Right,
}

impl WordKind {
    pub const ALL: [WordKind; 6] = [
        WordKind::Lsl,
        WordKind::Rsr,
        WordKind::Lsr,
        WordKind::Rsl,
        WordKind::Rlr,
        WordKind::Lrl,
    ];

    pub fn steers(self) -> [Steer; 3] {
        use Steer::*;
        match self {
            WordKind::Lsl => [Left, Straight, Left],
            WordKind::Rsr => [Right, Straight, Right],
            WordKind::Lsr => [Left, Straight, Right],
            WordKind::Rsl => [Right, Straight, Left],
            WordKind::Rlr => [Right, Left, Right],
            WordKind::Lrl => [Left, Right, Left],
        }
    }

    /// Three arcs rather than arc-straight-arc.
    pub fn is_ccc(self) -> bool {
        matches!(self, WordKind::Rlr | WordKind::Lrl)
    }
}

impl fmt::Display for WordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WordKind::Lsl => "LSL",
            WordKind::Rsr => "RSR",
            WordKind::Lsr => "LSR",
            WordKind::Rsl => "RSL",
            WordKind::Rlr => "RLR",
            WordKind::Lrl => "LRL",
        };
        f.write_str(s)
    }
}

/// A Dubins word with its three segment parameters for unit radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DubinsWord {
    pub kind: WordKind,
    /// `(ℓ₁, ℓ₂, ℓ₃)` for unit turning radius: arc angles or straight length.
    pub params: [f64; 3],
    pub radius: f64,
}

impl DubinsWord {
    /// Segment lengths in meters.
    pub fn lengths(&self) -> [f64; 3] {
        self.params.map(|p| p * self.radius)
    }

    pub fn total(&self) -> f64 {
        self.normalized_total() * self.radius
    }

    pub fn normalized_total(&self) -> f64 {
        self.params.iter().sum()
    }

    /// No initial arc: the path leaves straight along the start heading.
    pub fn is_j_type(&self) -> bool {
        self.params[0] <= J_TYPE_TOLERANCE
    }

    /// Configuration reached after driving the word from `start`.
    pub fn end_pose(&self, start: Pose) -> Pose {
        let mut pose = start;
        for (steer, &param) in self.kind.steers().iter().zip(&self.params) {
            pose = advance(pose, *steer, param * self.radius, self.radius);
        }
        pose
    }

    /// Configuration at arc-length `s` (clamped to the path) from `start`.
    pub fn pose_at(&self, start: Pose, s: f64) -> Pose {
        let mut pose = start;
        let mut remaining = s.max(0.0);
        for (steer, &param) in self.kind.steers().iter().zip(&self.params) {
            let len = param * self.radius;
            let step = remaining.min(len);
            pose = advance(pose, *steer, step, self.radius);
            remaining -= step;
            if remaining <= 0.0 {
                break;
            }
        }
        pose
    }
}

fn advance(pose: Pose, steer: Steer, length: f64, radius: f64) -> Pose {
    let th = pose.heading.radians();
    let p = pose.position;
    match steer {
        Steer::Straight => Pose::from_parts(p + Point2::from_polar(length, th), pose.heading),
        Steer::Left => {
            let phi = length / radius;
            let end = th + phi;
            Pose::from_parts(
                p + Point2::new(end.sin() - th.sin(), th.cos() - end.cos()) * radius,
                Heading::new(end),
            )
        }
        Steer::Right => {
            let phi = length / radius;
            let end = th - phi;
            Pose::from_parts(
                p + Point2::new(th.sin() - end.sin(), end.cos() - th.cos()) * radius,
                Heading::new(end),
            )
        }
    }
}

#[inline]
fn angle_param(theta: f64) -> f64 {
    let m = mod_two_pi(theta);
    if TAU - m < FULL_TURN_SNAP {
        0.0
    } else {
        m
    }
}

/// Start and goal reduced to the normalized frame.
#[derive(Clone, Copy, Debug)]
struct Reduced {
    alpha: f64,
    beta: f64,
    d: f64,
    sa: f64,
    ca: f64,
    sb: f64,
    cb: f64,
}

impl Reduced {
    fn new(start: Pose, goal: Pose, r: f64) -> Self {
        let delta = goal.position - start.position;
        let d = delta.norm() / r;
        let theta = if d > 0.0 { delta.y.atan2(delta.x) } else { 0.0 };
        let alpha = mod_two_pi(start.heading.radians() - theta);
        let beta = mod_two_pi(goal.heading.radians() - theta);
        Self::from_angles(alpha, beta, d)
    }

    #[inline]
    fn from_angles(alpha: f64, beta: f64, d: f64) -> Self {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        Self {
            alpha,
            beta,
            d,
            sa,
            ca,
            sb,
            cb,
        }
    }

    #[inline]
    fn params(&self, kind: WordKind) -> Option<[f64; 3]> {
        let Reduced {
            alpha,
            beta,
            d,
            sa,
            ca,
            sb,
            cb,
        } = *self;
        let c_ab = ca * cb + sa * sb;
        match kind {
            // the straight part of LSL and RSR is the distance between the two
            // circle centers; hypot avoids the cancellation of the expanded form
            WordKind::Lsl => {
                let (dx, dy) = (d + sa - sb, cb - ca);
                let p = dx.hypot(dy);
                if p <= SINGLE_ARC {
                    return Some([0.0, 0.0, angle_param(beta - alpha)]);
                }
                let tmp1 = dy.atan2(dx);
                Some([angle_param(tmp1 - alpha), p, angle_param(beta - tmp1)])
            }
            WordKind::Rsr => {
                let (dx, dy) = (d - sa + sb, ca - cb);
                let p = dx.hypot(dy);
                if p <= SINGLE_ARC {
                    return Some([0.0, 0.0, angle_param(alpha - beta)]);
                }
                let tmp1 = dy.atan2(dx);
                Some([angle_param(alpha - tmp1), p, angle_param(tmp1 - beta)])
            }
            WordKind::Lsr => {
                let p_sq = -2.0 + d * d + 2.0 * c_ab + 2.0 * d * (sa + sb);
                let p_sq = clamp_square(p_sq)?;
                let p = p_sq.sqrt();
                let tmp0 = (-ca - cb).atan2(d + sa + sb) - (-2.0f64).atan2(p);
                Some([angle_param(tmp0 - alpha), p, angle_param(tmp0 - beta)])
            }
            WordKind::Rsl => {
                let p_sq = -2.0 + d * d + 2.0 * c_ab - 2.0 * d * (sa + sb);
                let p_sq = clamp_square(p_sq)?;
                let p = p_sq.sqrt();
                let tmp0 = (ca + cb).atan2(d - sa - sb) - 2.0f64.atan2(p);
                Some([angle_param(alpha - tmp0), p, angle_param(beta - tmp0)])
            }
            WordKind::Rlr => {
                let tmp0 = (6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sa - sb)) / 8.0;
                if tmp0.abs() > 1.0 {
                    return None;
                }
                let phi = (ca - cb).atan2(d - sa + sb);
                let p = angle_param(TAU - tmp0.acos());
                let t = angle_param(alpha - phi + angle_param(p / 2.0));
                Some([t, p, angle_param(alpha - beta - t + p)])
            }
            WordKind::Lrl => {
                let tmp0 = (6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sb - sa)) / 8.0;
                if tmp0.abs() > 1.0 {
                    return None;
                }
                let phi = (ca - cb).atan2(d + sa - sb);
                let p = angle_param(TAU - tmp0.acos());
                let t = angle_param(-alpha - phi + p / 2.0);
                Some([t, p, angle_param(beta - alpha - t + p)])
            }
        }
    }

    #[inline]
    fn shortest_total(&self) -> f64 {
        WordKind::ALL
            .iter()
            .filter_map(|&k| self.params(k))
            .map(|p| p[0] + p[1] + p[2])
            .fold(f64::INFINITY, f64::min)
    }
}

/// Start and goal circles this close (unit radius) coincide: the word is a
/// single arc and the direction between centers is noise.
const SINGLE_ARC: f64 = 1e-9;

/// Squared straight lengths a hair below zero are rounding noise.
#[inline]
fn clamp_square(p_sq: f64) -> Option<f64> {
    if p_sq >= 0.0 {
        Some(p_sq)
    } else if p_sq > -1e-12 {
        Some(0.0)
    } else {
        None
    }
}

fn same_configuration(start: Pose, goal: Pose) -> bool {
    start.position == goal.position && start.heading == goal.heading
}

/// The word of the given family, if it exists between `start` and `goal`.
pub fn dubins_word(start: Pose, goal: Pose, r: TurnRadius, kind: WordKind) -> Option<DubinsWord> {
    if same_configuration(start, goal) {
        return Some(DubinsWord {
            kind,
            params: [0.0; 3],
            radius: r.get(),
        });
    }
    Reduced::new(start, goal, r.get())
        .params(kind)
        .map(|params| DubinsWord {
            kind,
            params,
            radius: r.get(),
        })
}

/// All words that exist, in tie-break order.
pub fn dubins_candidates(start: Pose, goal: Pose, r: TurnRadius) -> Vec<DubinsWord> {
    WordKind::ALL
        .iter()
        .filter_map(|&k| dubins_word(start, goal, r, k))
        .collect()
}

/// Shortest curvature-bounded path from `start` to `goal`.
pub fn dubins_shortest(start: Pose, goal: Pose, r: TurnRadius) -> DubinsWord {
    let mut best: Option<DubinsWord> = None;
    for word in dubins_candidates(start, goal, r) {
        match best {
            None => best = Some(word),
            Some(b) => {
                let (wt, bt) = (word.normalized_total(), b.normalized_total());
                if wt < bt - TIE_TOLERANCE * bt.max(1.0) {
                    best = Some(word);
                }
            }
        }
    }
    // LSL and RSR always exist, so there is always a candidate
    best.expect("CSC words always exist")
}

/// Whether the shortest path from `start` to `goal` leaves straight (no
/// initial arc), together with that path.
pub fn classify_j_type(start: Pose, goal: Pose, r: TurnRadius) -> (bool, DubinsWord) {
    let word = dubins_shortest(start, goal, r);
    (word.is_j_type(), word)
}

/// Result of the multi-point dynamic program.
#[derive(Clone, Debug, PartialEq)]
pub struct MultipointSolution {
    pub length: f64,
    /// Chosen heading at every point.
    pub headings: Vec<f64>,
}

/// Shortest concatenation of Dubins paths through `points` when the heading
/// at point `i` is restricted to `candidates[i]`.
///
/// Dynamic programming over the heading choices, `O(n K²)` word evaluations.
/// Sequential; run separate instances in parallel if needed.
pub fn multipoint_dp(
    points: &[Point2],
    candidates: &[Vec<f64>],
    r: TurnRadius,
) -> MultipointSolution {
    assert_eq!(points.len(), candidates.len(), "one candidate set per point");
    assert!(points.len() >= 2, "need at least two points");
    assert!(candidates.iter().all(|c| !c.is_empty()), "empty candidate set");
    let radius = r.get();

    let mut cost: Vec<f64> = vec![0.0; candidates[0].len()];
    let mut back: Vec<Vec<usize>> = Vec::with_capacity(points.len() - 1);
    for i in 0..points.len() - 1 {
        let delta = points[i + 1] - points[i];
        let d = delta.norm() / radius;
        let theta = delta.y.atan2(delta.x);
        let from: Vec<(f64, f64, f64)> = candidates[i]
            .iter()
            .map(|&h| {
                let a = mod_two_pi(h - theta);
                let (s, c) = a.sin_cos();
                (a, s, c)
            })
            .collect();
        let step: Vec<(f64, usize)> = candidates[i + 1]
            .iter()
            .map(|&h| {
                let beta = mod_two_pi(h - theta);
                let (sb, cb) = beta.sin_cos();
                let mut best = (f64::INFINITY, 0usize);
                for (k, (&(alpha, sa, ca), &acc)) in from.iter().zip(&cost).enumerate() {
                    if acc >= best.0 {
                        continue;
                    }
                    let red = Reduced {
                        alpha,
                        beta,
                        d,
                        sa,
                        ca,
                        sb,
                        cb,
                    };
                    let total = acc + red.shortest_total() * radius;
                    if total < best.0 {
                        best = (total, k);
                    }
                }
                best
            })
            .collect();
        cost = step.iter().map(|s| s.0).collect();
        back.push(step.iter().map(|s| s.1).collect());
    }

    let (mut idx, length) = cost
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, &c)| if c < acc.1 { (i, c) } else { acc });
    let mut headings = vec![0.0; points.len()];
    for i in (0..points.len()).rev() {
        headings[i] = candidates[i][idx];
        if i > 0 {
            idx = back[i - 1][idx];
        }
    }
    MultipointSolution { length, headings }
}

/// `samples` equally spaced headings on `[0, 2π)`.
pub fn heading_grid(samples: usize) -> Vec<f64> {
    (0..samples)
        .map(|k| TAU * k as f64 / samples as f64)
        .collect()
}

/// Shortest multi-point Dubins path through every point with free headings,
/// each sampled on a uniform grid of `samples_per_angle` values.
pub fn multipoint_bruteforce(points: &[Point2], r: TurnRadius, samples_per_angle: usize) -> f64 {
    assert!(samples_per_angle >= 4, "need at least 4 heading samples");
    let grid = heading_grid(samples_per_angle);
    let candidates = vec![grid; points.len()];
    multipoint_dp(points, &candidates, r).length
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn r1() -> TurnRadius {
        TurnRadius::new(1.0).unwrap()
    }

    fn pose_close(a: Pose, b: Pose, tol: f64) -> bool {
        a.position.distance(b.position) <= tol && a.heading.delta_to(b.heading).abs() <= tol
    }

    #[test]
    fn straight_ahead_is_degenerate_lsl() {
        let w = dubins_shortest(Pose::new(0., 0., 0.), Pose::new(4., 0., 0.), r1());
        assert_eq!(w.kind, WordKind::Lsl);
        assert_eq!(w.params[0], 0.0);
        assert_abs_diff_eq!(w.params[1], 4.0, epsilon = 1e-15);
        assert_eq!(w.params[2], 0.0);
        assert_abs_diff_eq!(w.total(), 4.0, epsilon = 1e-15);
    }

    #[test]
    fn identical_configurations_cost_nothing() {
        let p = Pose::new(1., 2., 0.3);
        assert_eq!(dubins_shortest(p, p, r1()).total(), 0.0);
    }

    #[test]
    fn every_candidate_reaches_the_goal() {
        let cases = [
            (Pose::new(0., 0., 0.), Pose::new(0., 0., PI)),
            (Pose::new(0., 0., 0.), Pose::new(2., 2., FRAC_PI_2)),
            (Pose::new(1., -2., 2.0), Pose::new(-3., 0.5, -1.0)),
            (Pose::new(0., 0., 0.), Pose::new(1., 0.5, 3.0)),
        ];
        for (s, g) in cases {
            let words = dubins_candidates(s, g, r1());
            assert!(words.len() >= 4);
            for w in words {
                assert!(pose_close(w.end_pose(s), g, 1e-9), "{} {:?}", w.kind, w.end_pose(s));
            }
        }
    }

    #[test]
    fn j_type_right_angle_piece() {
        // first piece of the right-angle example: (0,0) heading 0 to (4,1) heading π/2
        let (is_j, w) = classify_j_type(Pose::new(0., 0., 0.), Pose::new(4., 1., FRAC_PI_2), r1());
        assert!(is_j);
        assert_eq!(w.kind, WordKind::Lsl);
        assert_abs_diff_eq!(w.params[1], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w.params[2], FRAC_PI_2, epsilon = 1e-12);

        let (is_j, w) = classify_j_type(Pose::new(0., 0., 0.), Pose::new(9., 0., 0.), r1());
        assert!(is_j);
        assert_eq!(w.params[2], 0.0);

        // goal behind the start, facing back: must turn first
        let (is_j, _) = classify_j_type(Pose::new(0., 0., 0.), Pose::new(-5., 0., PI), r1());
        assert!(!is_j);
    }

    #[test]
    fn multipoint_two_collinear_points() {
        let pts = [Point2::new(0., 0.), Point2::new(7., 0.)];
        let len = multipoint_bruteforce(&pts, r1(), 8);
        assert_abs_diff_eq!(len, 7.0, epsilon = 1e-12);
    }

    #[test]
    fn multipoint_refinement_is_monotone() {
        let pts = [
            Point2::new(0., 0.),
            Point2::new(5., 1.),
            Point2::new(7., 6.),
            Point2::new(2., 9.),
        ];
        let mut last = f64::INFINITY;
        for k in [8, 16, 32, 64, 128] {
            let len = multipoint_bruteforce(&pts, r1(), k);
            assert!(len <= last + 1e-12);
            last = len;
        }
        let polyline: f64 = pts.windows(2).map(|w| w[0].distance(w[1])).sum();
        assert!(last >= polyline);
    }

    #[test]
    fn multipoint_dp_recovers_headings() {
        let pts = [Point2::new(0., 0.), Point2::new(5., 0.), Point2::new(10., 0.)];
        let cands = vec![heading_grid(16); 3];
        let sol = multipoint_dp(&pts, &cands, r1());
        assert_abs_diff_eq!(sol.length, 10.0, epsilon = 1e-12);
        assert_eq!(sol.headings, vec![0.0, 0.0, 0.0]);
    }

    proptest! {
        #[test]
        fn scaling_law(x in -20.0..20.0f64, y in -20.0..20.0f64, h0 in -PI..PI, h1 in -PI..PI, s in 0.1..10.0f64) {
            let a = Pose::new(0., 0., h0);
            let b = Pose::new(x, y, h1);
            let base = dubins_shortest(a, b, r1()).total();
            let scaled = dubins_shortest(
                Pose::new(0., 0., h0),
                Pose::new(x * s, y * s, h1),
                TurnRadius::new(s).unwrap(),
            ).total();
            prop_assert!((scaled - s * base).abs() <= 1e-9 * (s * base).max(1.0));
        }

        #[test]
        fn shortest_word_reaches_goal(x in -20.0..20.0f64, y in -20.0..20.0f64, h0 in -PI..PI, h1 in -PI..PI, radius in 0.2..3.0f64) {
            let a = Pose::new(1.0, -1.0, h0);
            let b = Pose::new(x, y, h1);
            let w = dubins_shortest(a, b, TurnRadius::new(radius).unwrap());
            prop_assert!(pose_close(w.end_pose(a), b, 1e-8));
            prop_assert!(w.params.iter().all(|&p| p >= 0.0));
            let straight = a.position.distance(b.position);
            prop_assert!(w.total() >= straight - 1e-9);
        }
    }
}
