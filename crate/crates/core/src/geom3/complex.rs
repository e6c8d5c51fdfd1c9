use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::predicates::triangles_improper;
use super::Point3;
use crate::error::{Error, Result};

/// Labelled points with triangles and segments over them.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Complex3 {
    pub points: BTreeMap<String, Point3>,
    pub simplices2: Vec<[String; 3]>,
    #[serde(default)]
    pub simplices1: Vec<[String; 2]>,
}

impl Complex3 {
    /// Inserts a point; re-inserting a label at a different position is an error.
    pub fn add_point(&mut self, label: impl Into<String>, p: Point3) -> Result<()> {
        let label = label.into();
        match self.points.get(&label) {
            Some(q) if *q != p => Err(Error::Placement(format!("point {label} placed at two different positions"))),
            _ => {
                self.points.insert(label, p);
                Ok(())
            }
        }
    }

    pub fn add_triangle(&mut self, t: [&str; 3]) -> Result<()> {
        for l in t {
            if !self.points.contains_key(l) {
                return Err(Error::Structural(format!("triangle corner {l} is not a point of the complex")));
            }
        }
        self.simplices2.push(t.map(String::from));
        Ok(())
    }

    fn corners(&self, t: &[String; 3]) -> [Point3; 3] {
        [self.points[&t[0]], self.points[&t[1]], self.points[&t[2]]]
    }

    /// Every pair of triangles that meets in more than a common face.
    pub fn improper_pairs(&self) -> Vec<(usize, usize)> {
        let index: BTreeMap<&str, usize> = self.points.keys().enumerate().map(|(i, k)| (k.as_str(), i)).collect();
        let tris: Vec<([usize; 3], [Point3; 3])> = self
            .simplices2
            .iter()
            .map(|t| (t.clone().map(|l| index[l.as_str()]), self.corners(t)))
            .collect();
        let boxes: Vec<(Point3, Point3)> = tris
            .iter()
            .map(|(_, c)| {
                let lo = Point3 { x: c[0].x.min(c[1].x).min(c[2].x), y: c[0].y.min(c[1].y).min(c[2].y), z: c[0].z.min(c[1].z).min(c[2].z) };
                let hi = Point3 { x: c[0].x.max(c[1].x).max(c[2].x), y: c[0].y.max(c[1].y).max(c[2].y), z: c[0].z.max(c[1].z).max(c[2].z) };
                (lo, hi)
            })
            .collect();
        let mut out = Vec::new();
        for i in 0..tris.len() {
            for j in i + 1..tris.len() {
                let (a, b) = (boxes[i], boxes[j]);
                if a.1.x < b.0.x || b.1.x < a.0.x || a.1.y < b.0.y || b.1.y < a.0.y || a.1.z < b.0.z || b.1.z < a.0.z {
                    continue;
                }
                if triangles_improper(tris[i].0, tris[i].1, tris[j].0, tris[j].1) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Errors with the first offending pair if the triangles do not form an
    /// embedded complex.
    pub fn check_embedded(&self) -> Result<()> {
        match self.improper_pairs().first() {
            None => Ok(()),
            Some(&(i, j)) => Err(Error::Embedding(format!(
                "triangles {:?} and {:?} intersect improperly",
                self.simplices2[i], self.simplices2[j]
            ))),
        }
    }

    /// Wavefront OBJ with one `v` line per point (label order) and one `f`
    /// line per triangle.
    pub fn to_obj(&self) -> String {
        let index: BTreeMap<&str, usize> = self.points.keys().enumerate().map(|(i, k)| (k.as_str(), i + 1)).collect();
        let mut s = String::new();
        for (label, p) in &self.points {
            let _ = writeln!(s, "# {label}\nv {} {} {}", p.x, p.y, p.z);
        }
        for t in &self.simplices2 {
            let _ = writeln!(s, "f {} {} {}", index[t[0].as_str()], index[t[1].as_str()], index[t[2].as_str()]);
        }
        for e in &self.simplices1 {
            let _ = writeln!(s, "l {} {}", index[e[0].as_str()], index[e[1].as_str()]);
        }
        s
    }
}
