use std::collections::BTreeSet;

use serde::Serialize;

use super::PlaneEmbedding;
use crate::geom3::predicates::{orient2d, segments_intersect_2d};
use crate::planar_map::{EdgeId, RotationMap, VertexId};

/// Outcome of a straight-line planarity check.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RectilinearReport {
    pub ok: bool,
    /// Pairs of edges whose segments meet outside a shared endpoint.
    pub crossings: Vec<(EdgeId, EdgeId)>,
    /// Distinct vertices drawn at the same point.
    pub coincident: Vec<(VertexId, VertexId)>,
    /// Free vertices whose drawn neighbour order differs from the rotation.
    pub rotation_mismatch: Vec<VertexId>,
}

/// Checks that the embedding draws `map` without crossings and respects its
/// rotation system at every free vertex. Uses exact orientation tests.
pub fn verify_rectilinear(map: &RotationMap, emb: &PlaneEmbedding) -> RectilinearReport {
    let mut report = RectilinearReport::default();
    let pos = |v: VertexId| emb.coords[&v];

    let mut pts: Vec<(VertexId, (f64, f64))> = map.vertex_ids().map(|v| (v, (pos(v).x, pos(v).y))).collect();
    pts.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    for w in pts.windows(2) {
        if w[0].1 == w[1].1 {
            report.coincident.push((w[0].0, w[1].0));
        }
    }

    // sweep over bounding boxes in x
    let mut segs: Vec<(f64, f64, EdgeId)> = map
        .edges()
        .filter(|(_, e)| e.ends[0] != e.ends[1])
        .map(|(id, e)| {
            let (a, b) = (pos(e.ends[0]).x, pos(e.ends[1]).x);
            (a.min(b), a.max(b), id)
        })
        .collect();
    segs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut active: Vec<(f64, EdgeId)> = Vec::new();
    for &(lo, hi, e) in &segs {
        active.retain(|&(h, _)| h >= lo);
        for &(_, f) in &active {
            if edges_conflict(map, emb, e, f) {
                report.crossings.push((e.min(f), e.max(f)));
            }
        }
        active.push((hi, e));
    }
    report.crossings.sort();

    for v in map.vertex_ids() {
        if emb.fixed.contains(&v) || map.degree(v) < 3 {
            continue;
        }
        let star: Vec<VertexId> = map.star(v).iter().map(|&d| map.target(d)).collect();
        let o = pos(v);
        let mut by_angle: Vec<(f64, VertexId)> = star
            .iter()
            .map(|&u| {
                let d = pos(u) - o;
                (d.y.atan2(d.x), u)
            })
            .collect();
        by_angle.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let drawn: Vec<VertexId> = by_angle.iter().map(|t| t.1).collect();
        let distinct: BTreeSet<_> = star.iter().collect();
        let same = distinct.len() == star.len()
            && (0..drawn.len()).any(|s| (0..drawn.len()).all(|k| drawn[(s + k) % drawn.len()] == star[k]));
        if !same {
            report.rotation_mismatch.push(v);
        }
    }

    report.ok = report.crossings.is_empty() && report.coincident.is_empty() && report.rotation_mismatch.is_empty();
    report
}

fn edges_conflict(map: &RotationMap, emb: &PlaneEmbedding, e: EdgeId, f: EdgeId) -> bool {
    let [a, b] = map.edge(e).ends;
    let [c, d] = map.edge(f).ends;
    let p = |v: VertexId| emb.coords[&v];
    let shared: Vec<VertexId> = [a, b].into_iter().filter(|x| *x == c || *x == d).collect();
    match shared.len() {
        0 => segments_intersect_2d(p(a), p(b), p(c), p(d)),
        1 => {
            let s = shared[0];
            let u = if a == s { b } else { a };
            let w = if c == s { d } else { c };
            orient2d(p(s), p(u), p(w)) == 0 && (p(u) - p(s)).dot(p(w) - p(s)) > 0.0
        }
        _ => true,
    }
}
