use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom3::Point3;

/// Closed polylines in 3-space. Each component is a cyclic vertex list; the
/// closing segment from the last vertex back to the first is implicit.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PLLink {
    pub components: Vec<Vec<Point3>>,
    #[serde(default)]
    pub framing: Vec<Option<i64>>,
}

impl PLLink {
    pub fn new(components: Vec<Vec<Point3>>) -> Self {
        let framing = vec![None; components.len()];
        PLLink { components, framing }
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// Number of 1-simplices, which equals the vertex count for closed curves.
    pub fn segment_count(&self) -> usize {
        self.vertex_count()
    }

    /// Segments of component `c` in order.
    pub fn segments(&self, c: usize) -> impl Iterator<Item = (Point3, Point3)> + '_ {
        let comp = &self.components[c];
        (0..comp.len()).map(move |i| (comp[i], comp[(i + 1) % comp.len()]))
    }

    pub fn reversed(&self, c: usize) -> PLLink {
        let mut out = self.clone();
        out.components[c].reverse();
        out
    }

    /// Structural checks: every component has at least 3 vertices, all finite,
    /// consecutive vertices distinct, and the framing slot matches in length.
    pub fn check_structure(&self) -> Result<()> {
        if !self.framing.is_empty() && self.framing.len() != self.components.len() {
            return Err(Error::Validation(format!(
                "{} framings for {} components",
                self.framing.len(),
                self.components.len()
            )));
        }
        for (c, comp) in self.components.iter().enumerate() {
            if comp.len() < 3 {
                return Err(Error::Validation(format!("component {c} has {} vertices; at least 3 needed", comp.len())));
            }
            for i in 0..comp.len() {
                if !comp[i].is_finite() {
                    return Err(Error::Validation(format!("component {c} vertex {i} is not finite")));
                }
                if comp[i] == comp[(i + 1) % comp.len()] {
                    return Err(Error::Validation(format!("component {c} repeats vertex {i}")));
                }
            }
        }
        Ok(())
    }

    /// Full validation: structure plus a minimum distance `clearance` between
    /// every pair of non-adjacent segments.
    pub fn validate(&self, clearance: f64) -> Result<()> {
        self.check_structure()?;
        let segs: Vec<(usize, usize, Point3, Point3)> = (0..self.components.len())
            .flat_map(|c| self.segments(c).enumerate().map(move |(i, (a, b))| (c, i, a, b)))
            .collect();
        for (x, &(c1, i1, a, b)) in segs.iter().enumerate() {
            for &(c2, i2, p, q) in &segs[x + 1..] {
                if c1 == c2 {
                    let n = self.components[c1].len();
                    if (i1 + 1) % n == i2 || (i2 + 1) % n == i1 {
                        continue;
                    }
                }
                let d = segment_distance(a, b, p, q);
                if d <= clearance {
                    return Err(Error::Proximity(format!(
                        "segment {i1} of component {c1} and segment {i2} of component {c2} are {d:e} apart"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Euclidean distance between closed segments `ab` and `cd`.
pub fn segment_distance(a: Point3, b: Point3, c: Point3, d: Point3) -> f64 {
    let u = b - a;
    let v = d - c;
    let w = a - c;
    let (uu, uv, vv, uw, vw) = (u.dot(u), u.dot(v), v.dot(v), u.dot(w), v.dot(w));
    let den = uu * vv - uv * uv;
    let mut best = f64::INFINITY;
    let mut try_st = |s: f64, t: f64| {
        let s = s.clamp(0.0, 1.0);
        let t = t.clamp(0.0, 1.0);
        best = best.min(((a + u * s) - (c + v * t)).norm());
    };
    if den > 1e-14 * uu * vv {
        let s = (uv * vw - vv * uw) / den;
        let t = (uu * vw - uv * uw) / den;
        try_st(s, t);
    }
    // endpoint projections cover the boundary of the parameter square
    if vv > 0.0 {
        try_st(0.0, vw / vv);
        try_st(1.0, (vw + uv) / vv);
    }
    if uu > 0.0 {
        try_st(-uw / uu, 0.0);
        try_st((uv - uw) / uu, 1.0);
    }
    try_st(0.0, 0.0);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3::p3;

    #[test]
    fn segment_distance_cases() {
        let o = p3(0.0, 0.0, 0.0);
        let x = p3(1.0, 0.0, 0.0);
        assert_eq!(segment_distance(o, x, p3(0.5, 1.0, 2.0), p3(0.5, -1.0, 2.0)), 2.0);
        assert_eq!(segment_distance(o, x, p3(2.0, 0.0, 0.0), p3(3.0, 0.0, 0.0)), 1.0);
        assert_eq!(segment_distance(o, x, p3(0.5, 0.0, 0.0), p3(0.5, 1.0, 0.0)), 0.0);
    }

    #[test]
    fn structure_errors() {
        let tri = vec![p3(0.0, 0.0, 0.0), p3(1.0, 0.0, 0.0), p3(0.0, 1.0, 0.0)];
        assert!(PLLink::new(vec![tri.clone()]).validate(1e-9).is_ok());
        assert!(PLLink::new(vec![tri[..2].to_vec()]).check_structure().is_err());
        let touching = PLLink::new(vec![tri.clone(), tri.iter().map(|p| *p + p3(0.5, 0.0, 0.0)).collect()]);
        assert!(matches!(touching.validate(1e-9), Err(Error::Proximity(_))));
    }
}
