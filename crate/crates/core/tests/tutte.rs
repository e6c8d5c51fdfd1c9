use std::collections::BTreeMap;

use approx::assert_abs_diff_eq;
use gemlink::geom3::p2;
use gemlink::planar_map::{random_move_log, random_triangulation, MoveLog, Side};
use gemlink::tutte::{
    embed_wing, lift_to_halfplane, tutte_embed, verify_rectilinear, EdgeWeights, Solver, TutteOptions,
};
use gemlink::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn triangle() -> BTreeMap<usize, gemlink::geom3::Point2> {
    BTreeMap::from([(0, p2(0.0, 0.0)), (1, p2(1.0, 0.0)), (2, p2(0.5, 0.9))])
}

#[test]
fn solvers_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let map = random_triangulation(120, &mut rng);
    let w = EdgeWeights::unit();
    let a = tutte_embed(&map, &w, &triangle(), TutteOptions::default()).unwrap();
    let opts = TutteOptions { solver: Solver::Iterative, max_iters: Some(200_000), tol: 1e-10 };
    let b = tutte_embed(&map, &w, &triangle(), opts).unwrap();
    for (v, p) in &a.coords {
        assert_abs_diff_eq!(p.x, b.get(*v).x, epsilon = 1e-7);
        assert_abs_diff_eq!(p.y, b.get(*v).y, epsilon = 1e-7);
    }
}

#[test]
fn iteration_cap_reports_convergence_failure() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let map = random_triangulation(300, &mut rng);
    let opts = TutteOptions { solver: Solver::Iterative, max_iters: Some(3), tol: 1e-12 };
    let r = tutte_embed(&map, &EdgeWeights::unit(), &triangle(), opts);
    assert!(matches!(r, Err(Error::Convergence { .. })));
}

#[test]
fn shipped_wings_embed_and_lift() {
    let log = MoveLog::parse(include_str!("../data/synthetic_n12.movelog")).unwrap();
    let st = log.final_state().unwrap();
    for side in [Side::Left, Side::Right] {
        for mult in [1, 4] {
            let emb = embed_wing(&st, side, mult, TutteOptions::default()).unwrap();
            assert!(verify_rectilinear(st.side(side), &emb).ok);
            let lift = lift_to_halfplane(st.side(side), &emb, side).unwrap();
            assert!(lift.values().all(|p| p.is_finite()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn triangulations_embed_rectilinearly(v in 3usize..400, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let map = random_triangulation(v, &mut rng);
        let emb = tutte_embed(&map, &EdgeWeights::unit(), &triangle(), TutteOptions::default()).unwrap();
        prop_assert!(emb.residual <= 1e-10);
        let rep = verify_rectilinear(&map, &emb);
        prop_assert!(rep.ok, "{} crossings", rep.crossings.len());
    }

    #[test]
    fn random_wings_embed(n in 1u32..25, seed in any::<u64>(), mult in 1u32..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let st = random_move_log(n, &mut rng).unwrap().final_state().unwrap();
        for side in [Side::Left, Side::Right] {
            let emb = embed_wing(&st, side, mult, TutteOptions::default()).unwrap();
            prop_assert!(verify_rectilinear(st.side(side), &emb).ok);
        }
    }
}
