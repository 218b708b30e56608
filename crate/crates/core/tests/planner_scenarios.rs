mod support;

use dps_core::geom::Point2;
use dps_core::planner::{clearance, obstacle_offset, CLEARANCE_TOLERANCE};
use dps_core::{plan, validate, ConvexPolygon, PlanError, Scenario, TurnRadius};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{random_scenario, sampled_clearance};

fn p(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

#[test]
fn single_square_keeps_robot_radius() {
    let square = ConvexPolygon::new(vec![p(4., 4.), p(6., 4.), p(6., 6.), p(4., 6.)]).unwrap();
    let scenario = Scenario {
        bounds: [0., 0., 10., 10.],
        robot_radius: 0.2,
        turning_radius: 0.5,
        start: p(1., 4.5),
        goal: p(9., 5.5),
        obstacles: vec![square.clone()],
    };
    let res = plan(&scenario).unwrap();
    assert!(res.polyline.len() > 2);
    let (sampled, _) = sampled_clearance(&res.path, &[square], 1000);
    assert!(sampled >= 0.2, "sampled clearance {sampled}");
    assert!(res.clearance >= 0.2 - CLEARANCE_TOLERANCE);
    assert!(res.clearance <= sampled + 1e-12);
    assert!(res.certified);
}

#[test]
fn corridor_narrower_than_twice_the_offset_is_blocked() {
    let lower = ConvexPolygon::new(vec![p(4., -1.), p(6., -1.), p(6., 4.75), p(4., 4.75)]).unwrap();
    let upper = ConvexPolygon::new(vec![p(4., 5.25), p(6., 5.25), p(6., 11.), p(4., 11.)]).unwrap();
    let offset = obstacle_offset(&lower, 0.2, 0.5).unwrap();
    assert!(0.5 < 2.0 * offset);
    let scenario = Scenario {
        bounds: [0., 0., 10., 10.],
        robot_radius: 0.2,
        turning_radius: 0.5,
        start: p(1., 5.),
        goal: p(9., 5.),
        obstacles: vec![lower, upper],
    };
    assert!(matches!(plan(&scenario), Err(PlanError::NoPath)));
}

#[test]
fn random_scenarios_stay_clear() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut planned = 0;
    let mut attempts = 0;
    while planned < 150 {
        attempts += 1;
        assert!(attempts < 5000, "too few plannable scenarios");
        let s = random_scenario(&mut rng);
        let Ok(res) = plan(&s) else { continue };
        planned += 1;
        let r = TurnRadius::new(s.turning_radius).unwrap();
        assert!(validate(&res.path, r, 1e-9).is_ok());
        let exact = clearance(&res.path, &s.obstacles);
        assert_eq!(exact, res.clearance);
        let (sampled, spacing) = sampled_clearance(&res.path, &s.obstacles, 1000);
        if s.obstacles.is_empty() {
            assert_eq!(exact, f64::INFINITY);
            continue;
        }
        assert!(exact <= sampled + 1e-9, "exact {exact} above sampled {sampled}");
        assert!(sampled - exact <= spacing + 1e-9, "exact {exact} far below sampled {sampled}");
        assert!(
            res.clearance >= s.robot_radius - CLEARANCE_TOLERANCE,
            "clearance {} < h {} in {s:?}",
            res.clearance,
            s.robot_radius
        );
    }
}
