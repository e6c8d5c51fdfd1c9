use rand::seq::SliceRandom;
use rand::Rng;

use super::{init_wings, EdgeClass, Label, MoveLog, MoveRecord, RotationMap, Side, TailKind, TailType, WingState};
use crate::error::Result;

fn random_move<R: Rng>(st: &WingState, rng: &mut R) -> Option<MoveRecord> {
    let mut candidates = Vec::new();
    for side in [Side::Left, Side::Right] {
        for v in st.pendant_vertices(side) {
            let (_, wings) = st.ordered_wing_star(side, v);
            if wings.len() >= 4 {
                candidates.push((side, v));
            }
        }
    }
    let &(side, v) = candidates.choose(rng)?;
    let map = st.side(side);
    let (parent, wings) = st.ordered_wing_star(side, v);
    let ring: Vec<u32> = wings.iter().map(|&d| map.label(map.target(d)).index()).collect();
    let k = rng.gen_range(2..=ring.len() - 2);
    let (a, b) = ring.split_at(k);
    let faces_outer = parent.is_none() || rng.gen_bool(0.5);
    let new_z = if faces_outer { vec![*b.last().unwrap(), a[0]] } else { vec![*a.last().unwrap(), b[0]] };
    let kind = *[TailKind::P, TailKind::B, TailKind::PRefined, TailKind::BRefined].choose(rng).unwrap();
    let rank = match kind {
        TailKind::P | TailKind::B => rng.gen_range(1..=3),
        _ => rng.gen_range(2..=3),
    };
    let odd = |rng: &mut R| 2 * rng.gen_range(0..st.n) + 1;
    let even = |rng: &mut R| 2 * rng.gen_range(1..=st.n);
    Some(MoveRecord {
        m: st.step,
        color: side.color(),
        target: map.label(v),
        head: (odd(rng), even(rng)),
        tail: (odd(rng), even(rng)),
        tail_type: TailType { kind, rank },
        split: (a.to_vec(), b.to_vec()),
        new_z,
    })
}

/// Draws a valid move log of order `n` with up to `n - 1` moves; generation
/// stops early when no pendant vertex can be split any more.
pub fn random_move_log<R: Rng>(n: u32, rng: &mut R) -> Result<MoveLog> {
    let mut st = init_wings(n)?;
    let mut moves = Vec::new();
    while st.step < n {
        let Some(mv) = random_move(&st, rng) else { break };
        st = st.apply_wbp_move(&mv)?;
        moves.push(mv);
    }
    debug_assert!(moves.iter().all(|m| !matches!(m.target, Label::Z(_))));
    Ok(MoveLog { n, moves })
}

/// Random simple planar triangulation on `v >= 3` vertices. Vertices 0, 1, 2
/// bound the outer face in counterclockwise order. Built by inserting points
/// into random inner faces, then applying random legal edge flips.
pub fn random_triangulation<R: Rng>(v: usize, rng: &mut R) -> RotationMap {
    assert!(v >= 3, "a triangulation needs at least 3 vertices");
    // ccw neighbour lists
    let mut nb: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    let outer = |a: usize, b: usize, c: usize| a < 3 && b < 3 && c < 3 && b == (a + 2) % 3 && c == (a + 1) % 3;
    let insert_after = |list: &mut Vec<usize>, after: usize, x: usize| {
        let i = list.iter().position(|&y| y == after).unwrap();
        list.insert(i + 1, x);
    };

    while nb.len() < v {
        let a = rng.gen_range(0..nb.len());
        let i = rng.gen_range(0..nb[a].len());
        let (b, c) = (nb[a][i], nb[a][(i + 1) % nb[a].len()]);
        if outer(a, b, c) {
            continue;
        }
        let w = nb.len();
        insert_after(&mut nb[a], b, w);
        insert_after(&mut nb[b], c, w);
        insert_after(&mut nb[c], a, w);
        nb.push(vec![a, b, c]);
    }

    for _ in 0..4 * v {
        let a = rng.gen_range(0..nb.len());
        let len = nb[a].len();
        let i = rng.gen_range(0..len);
        let b = nb[a][i];
        let c = nb[a][(i + 1) % len];
        let d = nb[a][(i + len - 1) % len];
        if len <= 3 || nb[b].len() <= 3 || c == d || outer(a, b, c) || outer(a, d, b) || nb[c].contains(&d) {
            continue;
        }
        nb[a].retain(|&x| x != b);
        nb[b].retain(|&x| x != a);
        insert_after(&mut nb[c], a, d);
        insert_after(&mut nb[d], b, c);
    }

    let labels: Vec<Label> = (0..nb.len() as u32).map(Label::Node).collect();
    RotationMap::from_neighbor_lists(&nb, &labels, EdgeClass::Plain).expect("triangulation is a valid rotation map")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn triangulations_are_planar_and_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for v in [3usize, 4, 10, 200] {
            let m = random_triangulation(v, &mut rng);
            assert_eq!(m.vertex_count(), v);
            assert_eq!(m.edge_count(), 3 * v - 6);
            assert_eq!(m.genus().unwrap(), 0);
            assert!(m.trace_faces().unwrap().iter().all(|f| f.len() == 3));
        }
    }

    proptest! {
        #[test]
        fn random_logs_stay_planar_trees(seed in any::<u64>(), n in 2u32..30) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let log = random_move_log(n, &mut rng).unwrap();
            let states = log.replay().unwrap();
            for (i, st) in states.iter().enumerate() {
                for side in [Side::Left, Side::Right] {
                    let m = st.side(side);
                    prop_assert_eq!(m.edge_count() as u32, 2 * n + 4 * st.moves_applied(side));
                    prop_assert!(m.edge_count() as u32 <= 6 * n - 4);
                    prop_assert_eq!(m.genus().unwrap(), 0);
                    prop_assert_eq!(m.component_count(), 1);
                    st.check_nervure_tree(side).unwrap();
                    prop_assert_eq!(st.pendant_vertices(side).len() as u32, 1 + st.moves_applied(side));
                }
                prop_assert_eq!(st.step as usize, i + 1);
            }
        }
    }
}
