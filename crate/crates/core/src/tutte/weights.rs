use std::collections::BTreeMap;

use crate::planar_map::{EdgeClass, EdgeId, Side, VertexId, WingState};

/// Positive integer edge weights; edges without an entry weigh 1. An edge of
/// weight `k` acts like `k` parallel unit edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeWeights {
    weights: BTreeMap<EdgeId, u32>,
}

impl EdgeWeights {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn get(&self, e: EdgeId) -> u32 {
        self.weights.get(&e).copied().unwrap_or(1)
    }

    /// Sets a weight, clamping to at least 1.
    pub fn set(&mut self, e: EdgeId, w: u32) {
        self.weights.insert(e, w.max(1));
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, u32)> + '_ {
        self.weights.iter().map(|(e, w)| (*e, *w))
    }
}

/// Nervure weight heuristic: each nervure edge weighs `multiplier` times the
/// number of pendant vertices below it (away from the root); wing edges weigh 1.
pub fn nervure_weights(state: &WingState, side: Side, multiplier: u32) -> EdgeWeights {
    let map = state.side(side);
    let root = state.root(side);
    let mut weights = EdgeWeights::unit();

    // Iterative DFS, children after parents, then accumulate leaves bottom-up.
    let mut order: Vec<(VertexId, Option<EdgeId>)> = Vec::new();
    let mut parent_of: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut stack = vec![(root, None)];
    while let Some((v, via)) = stack.pop() {
        order.push((v, via));
        for (e, u) in map.neighbors_by(v, EdgeClass::Nervure) {
            if Some(e) != via && parent_of.get(&v) != Some(&u) {
                parent_of.insert(u, v);
                stack.push((u, Some(e)));
            }
        }
    }
    let mut leaves: BTreeMap<VertexId, u32> = BTreeMap::new();
    for &(v, via) in order.iter().rev() {
        let below: u32 = map
            .neighbors_by(v, EdgeClass::Nervure)
            .iter()
            .filter(|(e, _)| Some(*e) != via)
            .map(|(_, u)| leaves[u])
            .sum();
        let own = if v != root && map.neighbors_by(v, EdgeClass::Nervure).len() <= 1 { 1 } else { 0 };
        leaves.insert(v, below + own);
        if let Some(e) = via {
            weights.set(e, multiplier.saturating_mul(below + own));
        }
    }
    weights
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{init_wings, Label, MoveRecord, TailKind, TailType};

    fn split_move(st: &WingState, target: Label, k: usize) -> MoveRecord {
        let side = if matches!(target, Label::LowerA(_)) { Side::Left } else { Side::Right };
        let map = st.side(side);
        let v = map.id_of(target).unwrap();
        let (_, wings) = st.ordered_wing_star(side, v);
        let ring: Vec<u32> = wings.iter().map(|&d| map.label(map.target(d)).index()).collect();
        let (a, b) = ring.split_at(k);
        MoveRecord {
            m: st.step,
            color: side.color(),
            target,
            head: (1, 2),
            tail: (1, 2),
            tail_type: TailType { kind: TailKind::P, rank: 1 },
            split: (a.to_vec(), b.to_vec()),
            new_z: vec![*b.last().unwrap(), a[0]],
        }
    }

    fn nervure_weight_values(st: &WingState, m: u32) -> Vec<(Label, Label, u32)> {
        let w = nervure_weights(st, Side::Left, m);
        let map = &st.left;
        let mut out: Vec<_> = st
            .nervure_edges(Side::Left)
            .into_iter()
            .map(|e| {
                let [a, b] = map.edge(e).ends;
                (map.label(a), map.label(b), w.get(e))
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn path_like_nervure_has_unit_weights() {
        // a single split: both nervure edges lead to exactly one pendant vertex
        let st = init_wings(4).unwrap();
        let st = st.apply_wbp_move(&split_move(&st, Label::LowerA(1), 4)).unwrap();
        for (_, _, w) in nervure_weight_values(&st, 1) {
            assert_eq!(w, 1);
        }
        for (_, _, w) in nervure_weight_values(&st, 3) {
            assert_eq!(w, 3);
        }
    }

    #[test]
    fn balanced_binary_nervure() {
        // a1 -> {a2, A1, a3}; then split a2 and a3: four leaves.
        let st = init_wings(8).unwrap();
        let st = st.apply_wbp_move(&split_move(&st, Label::LowerA(1), 8)).unwrap();
        let st = st.apply_wbp_move(&split_move(&st, Label::LowerA(2), 4)).unwrap();
        let st = st.apply_wbp_move(&split_move(&st, Label::LowerA(3), 4)).unwrap();
        let vals = nervure_weight_values(&st, 1);
        let root_adjacent: Vec<u32> = vals
            .iter()
            .filter(|(a, b, _)| *a == Label::UpperA(1) || *b == Label::UpperA(1))
            .map(|t| t.2)
            .collect();
        assert_eq!(root_adjacent, vec![2, 2]);
        let leaf_edges: Vec<u32> = vals.iter().filter(|(a, _, _)| a.is_lower()).map(|t| t.2).collect();
        assert_eq!(leaf_edges, vec![1, 1, 1, 1]);
        let tripled = nervure_weight_values(&st, 3);
        for (a, b) in vals.iter().zip(tripled.iter()) {
            assert_eq!(3 * a.2, b.2);
        }
    }
}
