//! Weighted Tutte barycentric embeddings of wing-plus-nervure maps.

mod rectilinear;
mod render;
mod solve;
mod weights;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom3::{p2, p3, Point2, Point3};
use crate::planar_map::{Label, RotationMap, Side, VertexId, WingState};

pub use rectilinear::{verify_rectilinear, RectilinearReport};
pub use render::{embedding_json, embedding_svg};
pub use solve::relax;
pub use solve::barycentric_residual;
pub use weights::{nervure_weights, EdgeWeights};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    Direct,
    Iterative,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TutteOptions {
    pub solver: Solver,
    /// Iteration cap for the iterative solver; `None` means `50 * V`.
    pub max_iters: Option<usize>,
    pub tol: f64,
}

impl Default for TutteOptions {
    fn default() -> Self {
        TutteOptions { solver: Solver::Direct, max_iters: None, tol: 1e-10 }
    }
}

/// Vertex positions in a half-plane, `x` measured away from the axis and `y`
/// along it.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneEmbedding {
    pub coords: BTreeMap<VertexId, Point2>,
    pub fixed: BTreeSet<VertexId>,
    pub residual: f64,
}

impl PlaneEmbedding {
    pub fn get(&self, v: VertexId) -> Point2 {
        self.coords[&v]
    }
}

/// Places every free vertex at the weighted average of its neighbours, with
/// the vertices in `fixed` pinned.
pub fn tutte_embed(
    map: &RotationMap,
    weights: &EdgeWeights,
    fixed: &BTreeMap<VertexId, Point2>,
    opts: TutteOptions,
) -> Result<PlaneEmbedding> {
    if !(opts.tol > 0.0) {
        return Err(Error::Argument(format!("tolerance must be positive, got {}", opts.tol)));
    }
    for v in fixed.keys() {
        if !map.contains(*v) {
            return Err(Error::Argument(format!("fixed vertex {v} is not in the map")));
        }
    }
    let coords = match opts.solver {
        Solver::Direct => solve::direct(map, weights, fixed)?,
        Solver::Iterative => {
            let cap = opts.max_iters.unwrap_or(50 * map.vertex_count().max(1));
            solve::relax(map, weights, fixed, cap, opts.tol)?.0
        }
    };
    let residual = barycentric_residual(map, weights, &coords, fixed);
    if residual > opts.tol {
        return Err(Error::Convergence { iters: 0, residual });
    }
    Ok(PlaneEmbedding { coords, fixed: fixed.keys().copied().collect(), residual })
}

/// Default pinned positions for one wing: `z3_j` at `(0, j)` and the nervure
/// root at `(n, (2n + 1) / 2)`.
pub fn wing_boundary(state: &WingState, side: Side) -> BTreeMap<VertexId, Point2> {
    let map = state.side(side);
    let n = state.n as f64;
    let mut fixed: BTreeMap<VertexId, Point2> = (1..=2 * state.n)
        .filter_map(|j| map.id_of(Label::Z(j)).map(|v| (v, p2(0.0, j as f64))))
        .collect();
    fixed.insert(state.root(side), p2(n, (2.0 * n + 1.0) / 2.0));
    fixed
}

/// Embeds one wing with nervure weights scaled by `multiplier`.
pub fn embed_wing(state: &WingState, side: Side, multiplier: u32, opts: TutteOptions) -> Result<PlaneEmbedding> {
    let weights = nervure_weights(state, side, multiplier);
    tutte_embed(state.side(side), &weights, &wing_boundary(state, side), opts)
}

/// Rotates a half-plane embedding into 3-space: the left wing goes to
/// `(x, 0, z)` and the right wing to `(-x, 0, z)`.
pub fn lift_to_halfplane(map: &RotationMap, emb: &PlaneEmbedding, side: Side) -> Result<BTreeMap<VertexId, Point3>> {
    let mut out = BTreeMap::new();
    for (&v, &p) in &emb.coords {
        if map.contains(v) && map.label(v).is_z() && p.x != 0.0 {
            return Err(Error::Placement(format!("axis vertex {} placed off the axis at x = {}", map.label(v), p.x)));
        }
        let x = match side {
            Side::Left => p.x,
            Side::Right => -p.x,
        };
        out.insert(v, p3(x, 0.0, p.y));
    }
    Ok(out)
}
