use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom3::{p3, Point3};

use super::{linking_numbers, PLLink};

/// A triangulated annulus in 3-space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cylinder {
    pub points: Vec<Point3>,
    pub triangles: Vec<[usize; 3]>,
}

/// The medial curve of a cylinder together with its two boundary curves,
/// all oriented the same way.
#[derive(Clone, Debug, PartialEq)]
pub struct CylinderCurves {
    pub medial: Vec<Point3>,
    pub boundary: [Vec<Point3>; 2],
}

impl Cylinder {
    /// The band between `curve` and its translate by `offset`.
    pub fn band(curve: &[Point3], offset: Point3) -> Cylinder {
        let n = curve.len();
        let mut points = curve.to_vec();
        points.extend(curve.iter().map(|&p| p + offset));
        let mut triangles = Vec::with_capacity(2 * n);
        for i in 0..n {
            let j = (i + 1) % n;
            triangles.push([i, j, n + i]);
            triangles.push([j, n + j, n + i]);
        }
        Cylinder { points, triangles }
    }

    /// Extracts the medial and boundary curves. Every triangle must have
    /// vertices on both boundary circles.
    pub fn curves(&self) -> Result<CylinderCurves> {
        for t in &self.triangles {
            if t.iter().any(|&i| i >= self.points.len()) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::Validation(format!("bad triangle {t:?}")));
            }
        }
        let mut uses: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (k, t) in self.triangles.iter().enumerate() {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                uses.entry((a.min(b), a.max(b))).or_default().push(k);
            }
        }
        if let Some((e, _)) = uses.iter().find(|(_, ts)| ts.len() > 2) {
            return Err(Error::Topology(format!("edge {e:?} lies on more than two triangles")));
        }
        let cycles = boundary_cycles(uses.iter().filter(|(_, ts)| ts.len() == 1).map(|(&e, _)| e))?;
        if cycles.len() != 2 {
            return Err(Error::Topology(format!("expected 2 boundary circles, found {}", cycles.len())));
        }
        let mut side: BTreeMap<usize, usize> = BTreeMap::new();
        for (s, cyc) in cycles.iter().enumerate() {
            for &v in cyc {
                side.insert(v, s);
            }
        }
        for t in &self.triangles {
            let on: BTreeSet<Option<&usize>> = t.iter().map(|v| side.get(v)).collect();
            if on.len() != 2 || on.contains(&None) {
                return Err(Error::Topology(format!("triangle {t:?} does not span both boundaries")));
            }
        }
        let cross = |t: &[usize; 3]| -> Vec<(usize, usize)> {
            [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
                .into_iter()
                .filter(|(a, b)| side[a] != side[b])
                .map(|(a, b)| if side[&a] == 0 { (a, b) } else { (b, a) })
                .collect()
        };

        // walk the strip of triangles through its cross edges
        let key = |(a, b): (usize, usize)| (a.min(b), a.max(b));
        let mut walk: Vec<(usize, usize)> = Vec::new();
        let mut visited = vec![false; self.triangles.len()];
        let mut t = 0;
        let mut via = cross(&self.triangles[0])[0];
        loop {
            visited[t] = true;
            let exit = cross(&self.triangles[t]).into_iter().find(|&e| e != via).expect("two cross edges");
            walk.push(exit);
            let next = uses[&key(exit)].iter().copied().find(|&u| u != t);
            match next {
                Some(u) if !visited[u] => {
                    t = u;
                    via = exit;
                }
                Some(0) => break,
                _ => return Err(Error::Topology("triangle strip does not close up".into())),
            }
        }
        if visited.iter().any(|v| !v) {
            return Err(Error::Topology("triangles outside the strip".into()));
        }
        let medial = walk.iter().map(|&(a, b)| self.points[a].midpoint(self.points[b])).collect();
        let boundary = [0, 1].map(|s| {
            let seen: Vec<usize> = walk.iter().map(|&(a, b)| if s == 0 { a } else { b }).collect();
            orient(&cycles[s], &seen).into_iter().map(|v| self.points[v]).collect()
        });
        Ok(CylinderCurves { medial, boundary })
    }

    /// Linking number of the two boundary curves, oriented in parallel.
    pub fn framing(&self, seed: u64) -> Result<i64> {
        let c = self.curves()?;
        let link = PLLink::new(c.boundary.to_vec());
        Ok(linking_numbers(&link, framing_direction(), seed)?[0][1])
    }
}

fn framing_direction() -> Point3 {
    p3(0.31, 0.17, 1.0)
}

/// Medial curves of the cylinders, each carrying the framing measured by its
/// cylinder.
pub fn framings_from_cylinders(cylinders: &[Cylinder], seed: u64) -> Result<PLLink> {
    let mut comps = Vec::new();
    let mut framing = Vec::new();
    for c in cylinders {
        let curves = c.curves()?;
        let pair = PLLink::new(curves.boundary.to_vec());
        framing.push(Some(linking_numbers(&pair, framing_direction(), seed)?[0][1]));
        comps.push(curves.medial);
    }
    let mut link = PLLink::new(comps);
    link.framing = framing;
    Ok(link)
}

fn boundary_cycles(edges: impl Iterator<Item = (usize, usize)>) -> Result<Vec<Vec<usize>>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if let Some((v, _)) = adj.iter().find(|(_, n)| n.len() != 2) {
        return Err(Error::Topology(format!("boundary is not a union of circles at vertex {v}")));
    }
    let mut done = BTreeSet::new();
    let mut cycles = Vec::new();
    for &start in adj.keys() {
        if done.contains(&start) {
            continue;
        }
        let mut cyc = vec![start];
        done.insert(start);
        let (mut prev, mut cur) = (start, adj[&start][0]);
        while cur != start {
            cyc.push(cur);
            done.insert(cur);
            let n = &adj[&cur];
            let next = if n[0] == prev { n[1] } else { n[0] };
            (prev, cur) = (cur, next);
        }
        cycles.push(cyc);
    }
    Ok(cycles)
}

/// Rotates and possibly reverses `cycle` to follow the order in which its
/// vertices first appear in `seen`.
fn orient(cycle: &[usize], seen: &[usize]) -> Vec<usize> {
    let mut order = Vec::new();
    for &v in seen {
        if order.last() != Some(&v) && !order.contains(&v) {
            order.push(v);
        }
        if order.len() == 2 {
            break;
        }
    }
    let i = cycle.iter().position(|&v| v == order[0]).expect("boundary vertex");
    let n = cycle.len();
    let mut out: Vec<usize> = (0..n).map(|k| cycle[(i + k) % n]).collect();
    if order.len() == 2 && out[1] != order[1] {
        out[1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkproj::project;
    use crate::linkproj::project::tests::circle;

    #[test]
    fn flat_band_has_zero_framing() {
        let c = circle(p3(0.0, 0.0, 0.0), 1.0, 10, 0);
        let cyl = Cylinder::band(&c, p3(0.0, 0.0, 0.1));
        let curves = cyl.curves().unwrap();
        assert_eq!(curves.medial.len(), 20);
        assert_eq!(cyl.framing(1).unwrap(), 0);
    }

    #[test]
    fn twisted_band_matches_writhe() {
        // a trefoil-like curve drawn near the xy-plane; the vertical push-off
        // links the core `writhe` times
        let k: Vec<Point3> = (0..60)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 60.0;
                p3(t.sin() + 2.0 * (2.0 * t).sin(), t.cos() - 2.0 * (2.0 * t).cos(), -(3.0 * t).sin() * 0.5)
            })
            .collect();
        let w = project(&PLLink::new(vec![k.clone()]), p3(0.0, 0.0, 1.0), 3).unwrap().writhe(0).unwrap();
        assert_eq!(w.abs(), 3);
        let link = framings_from_cylinders(&[Cylinder::band(&k, p3(0.0, 0.0, 0.01))], 5).unwrap();
        assert_eq!(link.framing, vec![Some(w)]);
    }

    #[test]
    fn reversed_triangles_keep_framing() {
        let c = circle(p3(0.0, 0.0, 0.0), 1.0, 8, 0);
        let mut cyl = Cylinder::band(&c, p3(0.0, 0.0, 0.1));
        cyl.triangles.reverse();
        for t in cyl.triangles.iter_mut() {
            t.swap(0, 2);
        }
        assert_eq!(cyl.framing(2).unwrap(), 0);
    }

    #[test]
    fn disk_is_not_a_cylinder() {
        let cyl = Cylinder { points: vec![p3(0.0, 0.0, 0.0), p3(1.0, 0.0, 0.0), p3(0.0, 1.0, 0.0)], triangles: vec![[0, 1, 2]] };
        assert!(matches!(cyl.curves(), Err(Error::Topology(_))));
        let mut two = Cylinder::band(&circle(p3(0.0, 0.0, 0.0), 1.0, 6, 2), p3(0.0, 0.0, 0.1));
        two.triangles.truncate(11);
        assert!(matches!(two.curves(), Err(Error::Topology(_))));
    }
}
