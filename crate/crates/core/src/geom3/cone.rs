use super::predicates::collinear3;
use super::Point3;
use crate::error::{Error, Result};

/// Cone `x * base`: one triangle `(x, p_i, p_{i+1})` per segment of the open
/// polyline `base`.
pub fn cone(x: Point3, base: &[Point3]) -> Result<Vec<[Point3; 3]>> {
    if base.len() < 2 {
        return Err(Error::Argument("cone base needs at least one segment".into()));
    }
    base.windows(2)
        .enumerate()
        .map(|(i, w)| {
            if w[0] == w[1] || collinear3(x, w[0], w[1]) {
                Err(Error::Degeneracy(format!("apex is collinear with base segment {i}")))
            } else {
                Ok([x, w[0], w[1]])
            }
        })
        .collect()
}
