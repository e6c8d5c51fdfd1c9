use std::collections::{BTreeMap, VecDeque};

use faer::linalg::solvers::Solve;
use faer::sparse::{SparseColMat, Triplet};
use faer::Mat;

use super::EdgeWeights;
use crate::error::{Error, Result};
use crate::geom3::{p2, Point2};
use crate::planar_map::{RotationMap, VertexId};

type Adjacency = BTreeMap<VertexId, Vec<(VertexId, f64)>>;

fn adjacency(map: &RotationMap, weights: &EdgeWeights) -> Adjacency {
    let mut adj: Adjacency = map.vertex_ids().map(|v| (v, Vec::new())).collect();
    for (e, edge) in map.edges() {
        let [a, b] = edge.ends;
        if a == b {
            continue;
        }
        let w = weights.get(e) as f64;
        adj.get_mut(&a).unwrap().push((b, w));
        adj.get_mut(&b).unwrap().push((a, w));
    }
    adj
}

/// Every free vertex must be connected to some pinned vertex.
fn check_anchored(adj: &Adjacency, fixed: &BTreeMap<VertexId, Point2>) -> Result<()> {
    let mut seen: BTreeMap<VertexId, bool> = adj.keys().map(|&v| (v, fixed.contains_key(&v))).collect();
    let mut queue: VecDeque<VertexId> = fixed.keys().copied().collect();
    while let Some(v) = queue.pop_front() {
        for &(u, _) in &adj[&v] {
            let s = seen.get_mut(&u).unwrap();
            if !*s {
                *s = true;
                queue.push_back(u);
            }
        }
    }
    match seen.iter().find(|(_, s)| !**s) {
        Some((v, _)) => Err(Error::Structural(format!("vertex {v} is not connected to any fixed vertex"))),
        None => Ok(()),
    }
}

pub(super) fn direct(
    map: &RotationMap,
    weights: &EdgeWeights,
    fixed: &BTreeMap<VertexId, Point2>,
) -> Result<BTreeMap<VertexId, Point2>> {
    let adj = adjacency(map, weights);
    check_anchored(&adj, fixed)?;
    let free: Vec<VertexId> = adj.keys().copied().filter(|v| !fixed.contains_key(v)).collect();
    let index: BTreeMap<VertexId, usize> = free.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut coords: BTreeMap<VertexId, Point2> = fixed.clone();
    if free.is_empty() {
        return Ok(coords);
    }

    let nf = free.len();
    let mut triplets = Vec::new();
    let mut rhs = Mat::<f64>::zeros(nf, 2);
    for (i, v) in free.iter().enumerate() {
        let mut diag = 0.0;
        for &(u, w) in &adj[v] {
            diag += w;
            match index.get(&u) {
                Some(&j) => triplets.push(Triplet::new(i, j, -w)),
                None => {
                    let p = fixed[&u];
                    rhs[(i, 0)] += w * p.x;
                    rhs[(i, 1)] += w * p.y;
                }
            }
        }
        triplets.push(Triplet::new(i, i, diag));
    }
    let a = SparseColMat::<usize, f64>::try_new_from_triplets(nf, nf, &triplets)
        .map_err(|e| Error::Structural(format!("cannot assemble Laplacian: {e:?}")))?;
    let llt = a
        .sp_cholesky(faer::Side::Lower)
        .map_err(|e| Error::Structural(format!("Laplacian is not positive definite: {e:?}")))?;
    llt.solve_in_place(rhs.as_mut());
    for (i, &v) in free.iter().enumerate() {
        coords.insert(v, p2(rhs[(i, 0)], rhs[(i, 1)]));
    }
    Ok(coords)
}

/// Jacobi relaxation started from the centroid of the pinned vertices.
/// Returns the final coordinates and the residual after every sweep; the
/// residual sequence is non-increasing.
pub fn relax(
    map: &RotationMap,
    weights: &EdgeWeights,
    fixed: &BTreeMap<VertexId, Point2>,
    max_iters: usize,
    tol: f64,
) -> Result<(BTreeMap<VertexId, Point2>, Vec<f64>)> {
    let adj = adjacency(map, weights);
    check_anchored(&adj, fixed)?;
    let ids: Vec<VertexId> = adj.keys().copied().collect();
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbrs: Vec<Vec<(usize, f64)>> = ids.iter().map(|v| adj[v].iter().map(|&(u, w)| (index[&u], w)).collect()).collect();
    let pinned: Vec<bool> = ids.iter().map(|v| fixed.contains_key(v)).collect();

    let centroid = if fixed.is_empty() {
        p2(0.0, 0.0)
    } else {
        fixed.values().fold(p2(0.0, 0.0), |a, &b| a + b) / fixed.len() as f64
    };
    let mut pos: Vec<Point2> = ids.iter().map(|v| fixed.get(v).copied().unwrap_or(centroid)).collect();
    let mut next = pos.clone();
    let mut history = Vec::new();

    let average = |pos: &[Point2], i: usize| -> Point2 {
        let (s, w) = nbrs[i].iter().fold((p2(0.0, 0.0), 0.0), |(s, t), &(j, w)| (s + pos[j] * w, t + w));
        s / w
    };
    let residual = |pos: &[Point2]| -> f64 {
        (0..pos.len()).filter(|&i| !pinned[i]).map(|i| (pos[i] - average(pos, i)).norm()).fold(0.0, f64::max)
    };

    let mut r = residual(&pos);
    let mut iters = 0;
    while r > tol {
        if iters == max_iters {
            return Err(Error::Convergence { iters, residual: r });
        }
        for i in 0..pos.len() {
            next[i] = if pinned[i] { pos[i] } else { average(&pos, i) };
        }
        std::mem::swap(&mut pos, &mut next);
        r = residual(&pos);
        history.push(r);
        iters += 1;
    }
    let coords = ids.iter().zip(pos).map(|(&v, p)| (v, p)).collect();
    Ok((coords, history))
}

/// Largest distance between a free vertex and the weighted average of its
/// neighbours.
pub fn barycentric_residual(
    map: &RotationMap,
    weights: &EdgeWeights,
    coords: &BTreeMap<VertexId, Point2>,
    fixed: &BTreeMap<VertexId, Point2>,
) -> f64 {
    let adj = adjacency(map, weights);
    let mut worst: f64 = 0.0;
    for (v, nb) in &adj {
        if fixed.contains_key(v) || nb.is_empty() {
            continue;
        }
        let (s, w) = nb.iter().fold((p2(0.0, 0.0), 0.0), |(s, t), &(u, w)| (s + coords[&u] * w, t + w));
        worst = worst.max((coords[v] - s / w).norm());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{EdgeClass, Label};

    fn grid(k: u32) -> (RotationMap, BTreeMap<VertexId, Point2>) {
        let mut m = RotationMap::new();
        let id = |i: u32, j: u32| (i * k + j) as VertexId;
        for i in 0..k {
            for j in 0..k {
                m.add_vertex(Label::Node(i * k + j)).unwrap();
            }
        }
        for i in 0..k {
            for j in 0..k {
                if i + 1 < k {
                    m.add_edge(id(i, j), id(i + 1, j), EdgeClass::Plain);
                }
                if j + 1 < k {
                    m.add_edge(id(i, j), id(i, j + 1), EdgeClass::Plain);
                }
            }
        }
        let mut fixed = BTreeMap::new();
        for i in 0..k {
            for j in 0..k {
                if i == 0 || j == 0 || i == k - 1 || j == k - 1 {
                    let (x, y) = (i as f64, j as f64);
                    fixed.insert(id(i, j), p2(x + 0.3 * y, y * y / (k - 1) as f64));
                }
            }
        }
        (m, fixed)
    }

    #[test]
    fn iterative_matches_direct_on_grid() {
        let (m, fixed) = grid(5);
        let w = EdgeWeights::unit();
        let d = direct(&m, &w, &fixed).unwrap();
        let (it, _) = relax(&m, &w, &fixed, 100_000, 1e-13).unwrap();
        for (v, p) in &d {
            assert!((*p - it[v]).norm() < 1e-9, "vertex {v}");
        }
        assert!(barycentric_residual(&m, &w, &d, &fixed) < 1e-12);
    }

    #[test]
    fn relaxation_residual_is_monotone() {
        let (m, fixed) = grid(6);
        let (_, hist) = relax(&m, &EdgeWeights::unit(), &fixed, 100_000, 1e-10).unwrap();
        assert!(hist.len() > 3);
        assert!(hist.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12)));
    }

    #[test]
    fn relaxation_reports_non_convergence() {
        let (m, fixed) = grid(6);
        let r = relax(&m, &EdgeWeights::unit(), &fixed, 3, 1e-14);
        assert!(matches!(r, Err(Error::Convergence { iters: 3, .. })));
    }
}
