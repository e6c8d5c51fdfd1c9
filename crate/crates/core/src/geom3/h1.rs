use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::complex::Complex3;
use super::cone::cone;
use super::{p3, Point3};
use crate::error::{Error, Result};
use crate::planar_map::{EdgeClass, EdgeId, Label, Side, VertexId, WingState};

/// The chosen wing edge at one axis vertex on one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Representative {
    pub side: Side,
    pub j: u32,
    pub edge: EdgeId,
    /// The non-axis end of the edge.
    pub other: Label,
}

/// One wing edge per axis vertex per side. A lone edge is taken as is;
/// otherwise the edge to the smallest-indexed upper-case label wins, falling
/// back to the smallest-indexed lower-case label when no upper-case neighbour
/// exists.
pub fn select_representatives(state: &WingState) -> Result<Vec<Representative>> {
    let mut out = Vec::with_capacity(4 * state.n as usize);
    for side in [Side::Left, Side::Right] {
        let map = state.side(side);
        for j in 1..=2 * state.n {
            let z = map
                .id_of(Label::Z(j))
                .ok_or_else(|| Error::Structural(format!("axis vertex z3_{j} is missing on the {side:?} side")))?;
            let best = map
                .star(z)
                .iter()
                .filter(|d| map.edge(d.edge).class == EdgeClass::Wing)
                .map(|&d| (d.edge, map.label(map.target(d))))
                .min_by_key(|&(e, l)| (!l.is_upper(), l.index(), e));
            let (edge, other) =
                best.ok_or_else(|| Error::Structural(format!("axis vertex z3_{j} has no wing edge on the {side:?} side")))?;
            out.push(Representative { side, j, edge, other });
        }
    }
    Ok(out)
}

/// Apexes `z0`, `z1`, `z2` and the axis points `z3_j` (stored at index `j - 1`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisFrame {
    pub z0: Point3,
    pub z1: Point3,
    pub z2: Point3,
    pub z3: Vec<Point3>,
}

impl AxisFrame {
    /// Default frame: `z3_j = (0, 0, j)`, `z2 = (0, -n, 0)` behind the wing
    /// plane, and `z0`, `z1` reflected through the two roots so that each root
    /// is the midpoint of its apex and `z2`.
    pub fn standard(n: u32, root_left: Point3, root_right: Point3) -> AxisFrame {
        let z2 = p3(0.0, -(n as f64), 0.0);
        AxisFrame {
            z0: root_left * 2.0 - z2,
            z1: root_right * 2.0 - z2,
            z2,
            z3: (1..=2 * n).map(|j| p3(0.0, 0.0, j as f64)).collect(),
        }
    }

    pub fn validate(&self, root_left: Point3, root_right: Point3) -> Result<()> {
        let close = |a: Point3, b: Point3| a.dist(b) <= 1e-9 * (1.0 + a.norm().max(b.norm()));
        if !close(self.z0.midpoint(self.z2), root_left) {
            return Err(Error::Precondition("midpoint of z0 and z2 is not the left root".into()));
        }
        if !close(self.z1.midpoint(self.z2), root_right) {
            return Err(Error::Precondition("midpoint of z1 and z2 is not the right root".into()));
        }
        if let Some(j) = self.z3.iter().position(|p| p.x != 0.0 || p.y != 0.0) {
            return Err(Error::Precondition(format!("z3_{} is off the axis", j + 1)));
        }
        Ok(())
    }
}

/// Cones both lifted wings over their representative edges and closes the
/// complex with the triangles `z3_j z1 z0`. Fails if any two triangles meet
/// improperly.
pub fn build_h1_diamond(
    state: &WingState,
    left_lift: &BTreeMap<VertexId, Point3>,
    right_lift: &BTreeMap<VertexId, Point3>,
    frame: &AxisFrame,
) -> Result<Complex3> {
    let lift = |side: Side| match side {
        Side::Left => left_lift,
        Side::Right => right_lift,
    };
    let root_pos = |side: Side| -> Result<Point3> {
        lift(side)
            .get(&state.root(side))
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{side:?} root has no lifted position")))
    };
    frame.validate(root_pos(Side::Left)?, root_pos(Side::Right)?)?;
    if frame.z3.len() != 2 * state.n as usize {
        return Err(Error::Precondition(format!("frame has {} axis points, expected {}", frame.z3.len(), 2 * state.n)));
    }

    let mut cx = Complex3::default();
    cx.add_point("z0", frame.z0)?;
    cx.add_point("z1", frame.z1)?;
    cx.add_point("z2", frame.z2)?;
    for (i, &p) in frame.z3.iter().enumerate() {
        cx.add_point(Label::Z(i as u32 + 1).to_string(), p)?;
    }
    for side in [Side::Left, Side::Right] {
        let map = state.side(side);
        for (&v, &p) in lift(side) {
            let label = map.label(v);
            if label.is_z() && frame.z3[label.index() as usize - 1] != p {
                return Err(Error::Precondition(format!("{label} is lifted away from its frame position")));
            }
            cx.add_point(label.to_string(), p)?;
        }
    }

    for rep in select_representatives(state)? {
        let apex = match rep.side {
            Side::Left => "z0",
            Side::Right => "z1",
        };
        let z = Label::Z(rep.j).to_string();
        let w = rep.other.to_string();
        for a in [apex, "z2"] {
            cone(cx.points[a], &[cx.points[&z], cx.points[&w]])?;
            cx.add_triangle([a, &z, &w])?;
        }
    }
    for j in 1..=2 * state.n {
        let z = Label::Z(j).to_string();
        cx.add_triangle([&z, "z1", "z0"])?;
    }
    cx.check_embedded()?;
    Ok(cx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::init_wings;
    use crate::tutte::{embed_wing, lift_to_halfplane, TutteOptions};

    fn lifted(state: &WingState) -> (BTreeMap<VertexId, Point3>, BTreeMap<VertexId, Point3>) {
        let l = embed_wing(state, Side::Left, 3, TutteOptions::default()).unwrap();
        let r = embed_wing(state, Side::Right, 3, TutteOptions::default()).unwrap();
        (
            lift_to_halfplane(&state.left, &l, Side::Left).unwrap(),
            lift_to_halfplane(&state.right, &r, Side::Right).unwrap(),
        )
    }

    #[test]
    fn trivial_wings_give_ten_triangles() {
        let st = init_wings(1).unwrap();
        let (l, r) = lifted(&st);
        let frame = AxisFrame::standard(1, l[&st.root(Side::Left)], r[&st.root(Side::Right)]);
        let cx = build_h1_diamond(&st, &l, &r, &frame).unwrap();
        assert_eq!(cx.simplices2.len(), 10);
    }

    #[test]
    fn bad_frame_is_precondition_error() {
        let st = init_wings(2).unwrap();
        let (l, r) = lifted(&st);
        let mut frame = AxisFrame::standard(2, l[&st.root(Side::Left)], r[&st.root(Side::Right)]);
        frame.z0 = frame.z0 + p3(0.0, 0.0, 1.0);
        assert!(matches!(build_h1_diamond(&st, &l, &r, &frame), Err(Error::Precondition(_))));
    }

    #[test]
    fn representative_preference() {
        // initial wings: every z3_j sees only the root
        let st = init_wings(3).unwrap();
        let reps = select_representatives(&st).unwrap();
        assert_eq!(reps.len(), 12);
        assert!(reps.iter().all(|r| r.other == Label::LowerA(1) || r.other == Label::LowerB(1)));
    }

    #[test]
    fn grown_wings_embed() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in [2u32, 5, 12] {
            let st = crate::planar_map::random_move_log(n, &mut rng).unwrap().final_state().unwrap();
            let (l, r) = lifted(&st);
            let frame = AxisFrame::standard(n, l[&st.root(Side::Left)], r[&st.root(Side::Right)]);
            let cx = build_h1_diamond(&st, &l, &r, &frame).unwrap();
            assert_eq!(cx.simplices2.len(), 10 * n as usize);
        }
    }
}
