use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom3::{p2, p3, Point2, Point3};
use crate::planar_map::{EdgeClass, Label, RotationMap, UnionFind};
use crate::tutte::{tutte_embed, verify_rectilinear, EdgeWeights, TutteOptions};

use super::{LinkDiagram, PLLink};

const OUTER_RADIUS: f64 = 10.0;
const LIFT: f64 = 0.3;

/// Star position of each role at a crossing, matching the rotation used by
/// [`LinkDiagram::to_rotation_map`].
fn slot(sign: i8, over: bool, outgoing: bool) -> usize {
    match (over, outgoing, sign > 0) {
        (true, true, _) => 0,
        (true, false, _) => 2,
        (false, true, true) => 1,
        (false, false, true) => 3,
        (false, true, false) => 3,
        (false, false, false) => 1,
    }
}

/// Builds a PL link in 3-space whose vertical projection is `diagram`.
///
/// Each crossing becomes a hub surrounded by four leg vertices; strands
/// between crossings are subdivided twice, the remaining faces are
/// star-triangulated, and the resulting triangulation is drawn with a Tutte
/// embedding. The over strand passes `+h` above the hub and the under strand
/// `h` below it. Split pieces are laid out side by side along `x`.
pub fn realize(diagram: &LinkDiagram) -> Result<PLLink> {
    diagram.validate()?;
    if diagram.genus()? != 0 {
        return Err(Error::Topology("diagram is not planar".into()));
    }
    let nc = diagram.component_count();
    let mut uf = UnionFind::new(nc);
    let mut owner: Vec<Option<usize>> = vec![None; diagram.crossing_count()];
    for (c, comp) in diagram.components.iter().enumerate() {
        for p in comp {
            match owner[p.crossing] {
                Some(o) => {
                    uf.union(o, c);
                }
                None => owner[p.crossing] = Some(c),
            }
        }
    }
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let mut piece_of: HashMap<usize, usize> = HashMap::new();
    for c in 0..nc {
        let r = uf.find(c);
        let k = *piece_of.entry(r).or_insert_with(|| {
            pieces.push(Vec::new());
            pieces.len() - 1
        });
        pieces[k].push(c);
    }

    let mut curves: Vec<Vec<Point3>> = vec![Vec::new(); nc];
    let mut cursor = 0.0;
    for piece in &pieces {
        let mut drawn: Vec<(usize, Vec<Point3>)> = if piece.len() == 1 && diagram.components[piece[0]].is_empty() {
            let s = 1.0;
            vec![(piece[0], vec![p3(0.0, 0.0, 0.0), p3(s, 0.0, 0.0), p3(s, s, 0.0), p3(0.0, s, 0.0)])]
        } else {
            realize_piece(diagram, piece)?
        };
        let (lo, hi) = drawn.iter().flat_map(|(_, pts)| pts).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.x), hi.max(p.x)));
        for (_, pts) in drawn.iter_mut() {
            for p in pts.iter_mut() {
                p.x += cursor - lo;
            }
        }
        cursor += hi - lo + OUTER_RADIUS * 0.5;
        for (c, pts) in drawn {
            curves[c] = pts;
        }
    }
    Ok(PLLink::new(curves))
}

fn realize_piece(diagram: &LinkDiagram, piece: &[usize]) -> Result<Vec<(usize, Vec<Point3>)>> {
    let mut local: HashMap<usize, usize> = HashMap::new();
    for &c in piece {
        for p in &diagram.components[c] {
            let n = local.len();
            local.entry(p.crossing).or_insert(n);
        }
    }
    let hub = |x: usize| 5 * local[&x];
    let leg = |x: usize, k: usize| 5 * local[&x] + 1 + k % 4;
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); 5 * local.len()];
    // strand vertices: (component, passage) -> (s_a, s_b)
    let mut strand: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for &c in piece {
        let comp = &diagram.components[c];
        for i in 0..comp.len() {
            let sa = lists.len();
            lists.push(Vec::new());
            lists.push(Vec::new());
            strand.insert((c, i), (sa, sa + 1));
        }
    }
    for &x in local.keys() {
        lists[hub(x)] = (0..4).map(|k| leg(x, k)).collect();
    }
    for &c in piece {
        let comp = &diagram.components[c];
        for (i, p) in comp.iter().enumerate() {
            let q = comp[(i + 1) % comp.len()];
            let (sa, sb) = strand[&(c, i)];
            let out_leg = leg(p.crossing, slot(diagram.crossings[p.crossing].sign, p.over, true));
            let in_leg = leg(q.crossing, slot(diagram.crossings[q.crossing].sign, q.over, false));
            lists[sa] = vec![out_leg, sb];
            lists[sb] = vec![sa, in_leg];
            for (l, s) in [(out_leg, sa), (in_leg, sb)] {
                let x = (l - 1) / 5;
                let k = l - 5 * x - 1;
                lists[l] = vec![s, 5 * x + 1 + (k + 1) % 4, 5 * x, 5 * x + 1 + (k + 3) % 4];
            }
        }
    }

    let faces = trace(&lists);
    let outer = (0..faces.len()).max_by_key(|&f| (faces[f].len(), std::cmp::Reverse(f))).expect("nonempty piece");
    for (f, face) in faces.iter().enumerate() {
        if f == outer || face.len() <= 3 {
            continue;
        }
        let center = lists.len();
        lists.push(face.iter().rev().copied().collect());
        let m = face.len();
        for i in 0..m {
            let v = face[i];
            let prev = face[(i + m - 1) % m];
            let at = lists[v].iter().position(|&u| u == prev).expect("face neighbour");
            lists[v].insert(at + 1, center);
        }
    }
    let labels: Vec<Label> = (0..lists.len()).map(|i| Label::Node(i as u32)).collect();
    let map = RotationMap::from_neighbor_lists(&lists, &labels, EdgeClass::Plain)?;
    let m = faces[outer].len();
    let fixed = faces[outer]
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let a = std::f64::consts::TAU * i as f64 / m as f64;
            (v, p2(OUTER_RADIUS * a.cos(), OUTER_RADIUS * a.sin()))
        })
        .collect();
    let emb = tutte_embed(&map, &EdgeWeights::unit(), &fixed, TutteOptions::default())?;
    let report = verify_rectilinear(&map, &emb);
    if !report.ok {
        return Err(Error::Embedding(format!(
            "diagram drawing has {} crossing edge pairs and {} rotation mismatches",
            report.crossings.len(),
            report.rotation_mismatch.len()
        )));
    }
    let at = |v: usize| -> Point2 { emb.get(v) };
    let h = LIFT
        * local
            .keys()
            .flat_map(|&x| (0..4).map(move |k| (x, k)))
            .map(|(x, k)| (at(hub(x)) - at(leg(x, k))).norm())
            .fold(f64::INFINITY, f64::min);
    let flat = |v: usize| {
        let p = at(v);
        p3(p.x, p.y, 0.0)
    };
    let mut out = Vec::new();
    for &c in piece {
        let comp = &diagram.components[c];
        let mut pts = Vec::with_capacity(5 * comp.len());
        for (i, p) in comp.iter().enumerate() {
            let sign = diagram.crossings[p.crossing].sign;
            let hp = at(hub(p.crossing));
            let (sa, sb) = strand[&(c, i)];
            pts.push(flat(leg(p.crossing, slot(sign, p.over, false))));
            pts.push(p3(hp.x, hp.y, if p.over { h } else { -h }));
            pts.push(flat(leg(p.crossing, slot(sign, p.over, true))));
            pts.push(flat(sa));
            pts.push(flat(sb));
        }
        out.push((c, pts));
    }
    Ok(out)
}

/// Faces of a map given by counterclockwise neighbour lists, each as its
/// cyclic vertex sequence.
fn trace(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, list) in lists.iter().enumerate() {
        for (i, &u) in list.iter().enumerate() {
            pos.insert((v, u), i);
        }
    }
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut faces = Vec::new();
    for (v, list) in lists.iter().enumerate() {
        for &u in list {
            if seen.contains_key(&(v, u)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (v, u);
            while seen.insert((a, b), ()).is_none() {
                face.push(a);
                let nb = &lists[b];
                let w = nb[(pos[&(b, a)] + 1) % nb.len()];
                (a, b) = (b, w);
            }
            faces.push(face);
        }
    }
    faces
}
