use std::collections::BTreeMap;

use super::{Dart, EdgeClass, EdgeId, Label, MoveRecord, RotationMap, UnionFind, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// Side grown by a move whose balloon tail has color `c`.
    pub fn from_color(c: u8) -> Option<Side> {
        match c {
            1 => Some(Side::Left),
            0 => Some(Side::Right),
            _ => None,
        }
    }

    pub fn color(self) -> u8 {
        match self {
            Side::Left => 1,
            Side::Right => 0,
        }
    }

    fn lower(self, i: u32) -> Label {
        match self {
            Side::Left => Label::LowerA(i),
            Side::Right => Label::LowerB(i),
        }
    }

    fn upper(self, i: u32) -> Label {
        match self {
            Side::Left => Label::UpperA(i),
            Side::Right => Label::UpperB(i),
        }
    }

    pub fn owns(self, label: Label) -> bool {
        match self {
            Side::Left => matches!(label, Label::LowerA(_) | Label::UpperA(_)),
            Side::Right => matches!(label, Label::LowerB(_) | Label::UpperB(_)),
        }
    }
}

/// The pair of wings (with their nervures) after some prefix of a move log.
#[derive(Clone, Debug, PartialEq)]
pub struct WingState {
    pub n: u32,
    pub left: RotationMap,
    pub right: RotationMap,
    /// Last lower-case index used on the left (`a`) side.
    pub last_a: u32,
    /// Last lower-case index used on the right (`b`) side.
    pub last_b: u32,
    /// Index of the next move to apply.
    pub step: u32,
    left_root: VertexId,
    right_root: VertexId,
    left_moves: u32,
    right_moves: u32,
}

fn initial_wing(n: u32, root: Label) -> (RotationMap, VertexId) {
    let mut map = RotationMap::new();
    let zs: Vec<VertexId> = (1..=2 * n).map(|j| map.add_vertex(Label::Z(j)).unwrap()).collect();
    let r = map.add_vertex(root).unwrap();
    let mut star = Vec::with_capacity(zs.len());
    // Seen from the apex, counterclockwise runs from the top of the axis down.
    for &z in zs.iter().rev() {
        let e = map.add_detached_edge(r, z, EdgeClass::Wing);
        star.push(Dart::new(e, 0));
        map.star_mut(z).push(Dart::new(e, 1));
    }
    map.set_star(r, star);
    (map, r)
}

/// Initial wings: the stars of `a1` and `b1` over the axis vertices
/// `z3_1 .. z3_2n`, with degenerate one-point nervures.
pub fn init_wings(n: u32) -> Result<WingState> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let (left, left_root) = initial_wing(n, Label::LowerA(1));
    let (right, right_root) = initial_wing(n, Label::LowerB(1));
    Ok(WingState {
        n,
        left,
        right,
        last_a: 1,
        last_b: 1,
        step: 1,
        left_root,
        right_root,
        left_moves: 0,
        right_moves: 0,
    })
}

impl WingState {
    pub fn side(&self, side: Side) -> &RotationMap {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    fn side_mut(&mut self, side: Side) -> &mut RotationMap {
        match side {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        }
    }

    /// Root of the nervure tree (`a1`/`b1`, or the upper-case vertex that
    /// replaced it).
    pub fn root(&self, side: Side) -> VertexId {
        match side {
            Side::Left => self.left_root,
            Side::Right => self.right_root,
        }
    }

    pub fn moves_applied(&self, side: Side) -> u32 {
        match side {
            Side::Left => self.left_moves,
            Side::Right => self.right_moves,
        }
    }

    pub fn nervure_degree(&self, side: Side, v: VertexId) -> usize {
        self.side(side).neighbors_by(v, EdgeClass::Nervure).len()
    }

    /// Pendant nervure vertices: non-axis vertices of nervure degree at most 1.
    pub fn pendant_vertices(&self, side: Side) -> Vec<VertexId> {
        let map = self.side(side);
        map.vertex_ids()
            .filter(|&v| !map.label(v).is_z() && self.nervure_degree(side, v) <= 1)
            .collect()
    }

    pub fn z_vertex(&self, side: Side, j: u32) -> Option<VertexId> {
        self.side(side).id_of(Label::Z(j))
    }

    /// Nervure edges of one side.
    pub fn nervure_edges(&self, side: Side) -> Vec<EdgeId> {
        self.side(side).edges().filter(|(_, e)| e.class == EdgeClass::Nervure).map(|(id, _)| id).collect()
    }

    /// The nervure is a tree spanning every non-axis vertex.
    pub fn check_nervure_tree(&self, side: Side) -> Result<()> {
        let map = self.side(side);
        let non_z: Vec<VertexId> = map.vertex_ids().filter(|&v| !map.label(v).is_z()).collect();
        let size = map.vertex_ids().max().map_or(0, |m| m + 1);
        let mut uf = UnionFind::new(size);
        let mut count = 0;
        for (_, e) in map.edges().filter(|(_, e)| e.class == EdgeClass::Nervure) {
            if map.label(e.ends[0]).is_z() || map.label(e.ends[1]).is_z() {
                return Err(Error::Structural("nervure edge touches the axis".into()));
            }
            if !uf.union(e.ends[0], e.ends[1]) {
                return Err(Error::Structural("nervure contains a cycle".into()));
            }
            count += 1;
        }
        if count + 1 != non_z.len() {
            return Err(Error::Structural(format!(
                "nervure has {count} edges for {} vertices; not spanning",
                non_z.len()
            )));
        }
        Ok(())
    }

    /// Wing darts of `v` in counterclockwise order, starting right after the
    /// nervure dart (if any), together with that nervure dart.
    pub(crate) fn ordered_wing_star(&self, side: Side, v: VertexId) -> (Option<Dart>, Vec<Dart>) {
        let map = self.side(side);
        let star = map.star(v);
        let nerv: Vec<usize> = (0..star.len())
            .filter(|&i| map.edge(star[i].edge).class == EdgeClass::Nervure)
            .collect();
        match nerv.as_slice() {
            [] => (None, star.to_vec()),
            [i] => {
                let wings = (1..star.len()).map(|k| star[(i + k) % star.len()]).collect();
                (Some(star[*i]), wings)
            }
            _ => (None, Vec::new()),
        }
    }

    /// Applies one wbp-move, returning the new state.
    pub fn apply_wbp_move(&self, mv: &MoveRecord) -> Result<WingState> {
        if mv.m != self.step {
            return Err(Error::Structural(format!("move index {} out of sequence; expected {}", mv.m, self.step)));
        }
        if mv.m >= self.n {
            return Err(Error::Structural(format!("move index {} exceeds n - 1 = {}", mv.m, self.n - 1)));
        }
        let side = Side::from_color(mv.color)
            .ok_or_else(|| Error::Structural(format!("color {} is not 0 or 1", mv.color)))?;
        if !side.owns(mv.target) || !mv.target.is_lower() {
            return Err(Error::Structural(format!(
                "target {} is not a lower-case vertex of the side selected by color {}",
                mv.target, mv.color
            )));
        }
        let map = self.side(side);
        let t = map
            .id_of(mv.target)
            .ok_or_else(|| Error::Structural(format!("target {} is not present", mv.target)))?;
        if self.nervure_degree(side, t) > 1 {
            return Err(Error::Structural(format!("target {} is not a pendant nervure vertex", mv.target)));
        }
        let (parent, wings) = self.ordered_wing_star(side, t);

        let z_of = |d: Dart| -> u32 { map.label(map.target(d)).index() };
        let ring: Vec<u32> = wings.iter().map(|&d| z_of(d)).collect();
        let (arc1, arc2) = (&mv.split.0, &mv.split.1);
        let joined: Vec<u32> = arc1.iter().chain(arc2.iter()).copied().collect();
        if joined.len() != ring.len() {
            return Err(Error::format(0, format!("split of {} covers {} of {} wing edges", mv.target, joined.len(), ring.len())));
        }
        if joined != ring {
            return Err(Error::format(
                0,
                format!("split of {} is not an ordered partition of its wing star {:?}", mv.target, ring),
            ));
        }
        if arc1.len() < 2 || arc2.len() < 2 {
            return Err(Error::Structural(format!("each arc of the split of {} needs at least two wing edges", mv.target)));
        }
        let inner = [*arc1.last().unwrap(), arc2[0]];
        let outer = [*arc2.last().unwrap(), arc1[0]];
        let faces_outer = if mv.new_z.as_slice() == inner {
            false
        } else if mv.new_z.as_slice() == outer {
            true
        } else {
            return Err(Error::format(
                0,
                format!(
                    "newz must name the axis vertices flanking one side of the split: ({},{}) or ({},{}); got {:?}",
                    inner[0], inner[1], outer[0], outer[1], mv.new_z
                ),
            ));
        };
        if parent.is_none() && !faces_outer {
            return Err(Error::Structural(format!(
                "splitting the root {} must keep its replacement on the outer triangle (newz={},{})",
                mv.target, outer[0], outer[1]
            )));
        }
        let (w1, w2) = wings.split_at(arc1.len());

        let mut next = self.clone();
        let last = match side {
            Side::Left => self.last_a,
            Side::Right => self.last_b,
        };
        let p = mv.target.index();
        let m = next.side_mut(side);
        let lo1 = m.add_vertex(side.lower(last + 1))?;
        let lo2 = m.add_vertex(side.lower(last + 2))?;
        let up = m.add_vertex(side.upper(p))?;
        let e1 = m.add_detached_edge(lo1, up, EdgeClass::Nervure);
        let e2 = m.add_detached_edge(lo2, up, EdgeClass::Nervure);
        // g1 runs alongside the first dart `ga` of its arc, g2 alongside `gb`
        let (ga, gb) = if faces_outer { (w1[0], *w2.last().unwrap()) } else { (*w1.last().unwrap(), w2[0]) };
        let zx = m.target(ga);
        let zy = m.target(gb);
        let g1 = m.add_detached_edge(up, zx, EdgeClass::Wing);
        let g2 = m.add_detached_edge(up, zy, EdgeClass::Wing);

        for &d in w1 {
            m.set_end(d, lo1);
        }
        for &d in w2 {
            m.set_end(d, lo2);
        }
        let mut s1 = vec![Dart::new(e1, 0)];
        s1.extend_from_slice(w1);
        let mut s2 = vec![Dart::new(e2, 0)];
        s2.extend_from_slice(w2);
        m.set_star(lo1, s1);
        m.set_star(lo2, s2);

        let mut su = Vec::with_capacity(5);
        if let Some(pd) = parent {
            m.set_end(pd, up);
            su.push(pd);
        }
        if faces_outer {
            su.extend([Dart::new(g1, 0), Dart::new(e1, 1), Dart::new(e2, 1), Dart::new(g2, 0)]);
        } else {
            su.extend([Dart::new(e1, 1), Dart::new(g1, 0), Dart::new(g2, 0), Dart::new(e2, 1)]);
        }
        m.set_star(up, su);

        // Around the target g1 sits just counterclockwise-after `ga` in the
        // inner case and just before it in the outer case; at the axis vertex
        // the order flips.
        let insert_next_to = |m: &mut RotationMap, z: VertexId, anchor: Dart, new: Dart, after: bool| {
            let star = m.star_mut(z);
            let i = star.iter().position(|&d| d == anchor).expect("wing dart at axis vertex");
            star.insert(if after { i + 1 } else { i }, new);
        };
        insert_next_to(m, zx, ga.twin(), Dart::new(g1, 1), faces_outer);
        insert_next_to(m, zy, gb.twin(), Dart::new(g2, 1), !faces_outer);

        m.remove_vertex(t);
        match side {
            Side::Left => {
                next.last_a += 2;
                next.left_moves += 1;
                if next.left_root == t {
                    next.left_root = up;
                }
            }
            Side::Right => {
                next.last_b += 2;
                next.right_moves += 1;
                if next.right_root == t {
                    next.right_root = up;
                }
            }
        }
        next.step += 1;
        Ok(next)
    }

    /// Wing edge count per axis vertex, for diagnostics.
    pub fn axis_degrees(&self, side: Side) -> BTreeMap<u32, usize> {
        let map = self.side(side);
        (1..=2 * self.n).map(|j| (j, map.id_of(Label::Z(j)).map_or(0, |v| map.degree(v)))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{TailKind, TailType};

    fn first_move(n: u32, k: usize) -> MoveRecord {
        // a1's counterclockwise star runs z_2n .. z_1.
        let ring: Vec<u32> = (1..=2 * n).rev().collect();
        let (a, b) = ring.split_at(k);
        MoveRecord {
            m: 1,
            color: 1,
            target: Label::LowerA(1),
            head: (1, 2),
            tail: (3, 4),
            tail_type: TailType { kind: TailKind::P, rank: 1 },
            split: (a.to_vec(), b.to_vec()),
            new_z: vec![*b.last().unwrap(), a[0]],
        }
    }

    #[test]
    fn init_counts() {
        for (n, e) in [(1, 2), (12, 24), (25, 50)] {
            let st = init_wings(n).unwrap();
            for side in [Side::Left, Side::Right] {
                let m = st.side(side);
                assert_eq!(m.edge_count(), e);
                assert_eq!(st.nervure_edges(side).len(), 0);
            }
            assert_eq!((st.last_a, st.last_b), (1, 1));
        }
        assert!(matches!(init_wings(0), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn one_move_adds_four_edges() {
        let st = init_wings(2).unwrap();
        let next = st.apply_wbp_move(&first_move(2, 2)).unwrap();
        assert_eq!(next.left.edge_count(), 4 + 4);
        assert_eq!(next.right.edge_count(), 4);
        assert_eq!(next.nervure_edges(Side::Left).len(), 2);
        next.check_nervure_tree(Side::Left).unwrap();
        assert_eq!(next.left.genus().unwrap(), 0);
        assert_eq!(next.pendant_vertices(Side::Left).len(), 2);
        assert_eq!((next.last_a, next.step), (3, 2));
        let root = next.left.label(next.root(Side::Left));
        assert_eq!(root, Label::UpperA(1));
    }

    #[test]
    fn non_pendant_target_is_rejected() {
        let st = init_wings(3).unwrap();
        let st = st.apply_wbp_move(&first_move(3, 3)).unwrap();
        let mut mv = first_move(3, 3);
        mv.m = 2;
        mv.target = Label::UpperA(1);
        assert!(matches!(st.apply_wbp_move(&mv), Err(Error::Structural(_))));
        mv.target = Label::LowerA(1);
        assert!(matches!(st.apply_wbp_move(&mv), Err(Error::Structural(_))));
    }

    #[test]
    fn bad_split_is_a_format_error() {
        let st = init_wings(3).unwrap();
        let mut mv = first_move(3, 3);
        mv.split.1.swap(0, 1);
        assert!(matches!(st.apply_wbp_move(&mv), Err(Error::Format { .. })));
        let mut mv = first_move(3, 3);
        mv.split.1.pop();
        assert!(matches!(st.apply_wbp_move(&mv), Err(Error::Format { .. })));
        let mut mv = first_move(3, 3);
        mv.new_z = vec![1, 2];
        assert!(matches!(st.apply_wbp_move(&mv), Err(Error::Format { .. })));
    }

    #[test]
    fn n1_has_no_legal_move() {
        let st = init_wings(1).unwrap();
        assert!(st.apply_wbp_move(&first_move(1, 1)).is_err());
    }

    #[test]
    fn wrong_color_for_target() {
        let st = init_wings(3).unwrap();
        let mut mv = first_move(3, 3);
        mv.color = 0;
        assert!(matches!(st.apply_wbp_move(&mv), Err(Error::Structural(_))));
    }
}
