use gemlink::planar_map::{init_wings, random_move_log, random_triangulation, Label, MoveLog, Side};
use gemlink::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SYNTHETIC: &str = include_str!("../data/synthetic_n12.movelog");

#[test]
fn shipped_log_replays() {
    let log = MoveLog::parse(SYNTHETIC).unwrap();
    assert_eq!(log.n, 12);
    let st = log.final_state().unwrap();
    for side in [Side::Left, Side::Right] {
        let moves = log.moves_on(side);
        assert_eq!(st.side(side).edge_count(), 24 + 4 * moves);
        assert_eq!(st.side(side).genus().unwrap(), 0);
        st.check_nervure_tree(side).unwrap();
    }
}

#[test]
fn initial_wings() {
    let st = init_wings(5).unwrap();
    for side in [Side::Left, Side::Right] {
        let map = st.side(side);
        assert_eq!(map.vertex_count(), 11);
        assert_eq!(map.edge_count(), 10);
        assert!(!map.label(st.root(side)).is_z());
    }
    assert!(matches!(init_wings(0), Err(Error::InvalidOrder(0))));
}

#[test]
fn malformed_logs_are_rejected() {
    assert!(MoveLog::parse("").is_err());
    assert!(MoveLog::parse("n=0\n").is_err());
    let err = MoveLog::parse("n=3\n1 7 a1 1 2 3 4 P1 split=6,5|4,3,2,1 newz=1,6\n").unwrap_err();
    assert!(err.is_input_error(), "{err}");
}

#[test]
fn triangulation_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for v in [3, 4, 10, 57] {
        let t = random_triangulation(v, &mut rng);
        t.validate().unwrap();
        assert_eq!(t.edge_count(), 3 * v - 6);
        assert_eq!(t.trace_faces().unwrap().len(), 2 * v - 4);
        assert_eq!(t.genus().unwrap(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn logs_round_trip_and_stay_planar(n in 1u32..30, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let log = random_move_log(n, &mut rng).unwrap();
        let text = log.to_string();
        let back = MoveLog::parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        let states = back.replay().unwrap();
        prop_assert_eq!(states.len(), log.moves.len() + 1);
        let last = states.last().unwrap();
        for side in [Side::Left, Side::Right] {
            let map = last.side(side);
            prop_assert_eq!(map.genus().unwrap(), 0);
            prop_assert_eq!(map.component_count(), 1);
            let z = map.vertices().filter(|(_, v)| matches!(v.label, Label::Z(_))).count();
            prop_assert_eq!(z as u32, 2 * n);
        }
    }

    #[test]
    fn triangulation_faces_are_triangles(v in 3usize..200, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_triangulation(v, &mut rng);
        prop_assert!(t.trace_faces().unwrap().iter().all(|f| f.len() == 3));
        prop_assert_eq!(t.euler_characteristic().unwrap(), 2);
    }
}
