use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom3::Point2;
use crate::planar_map::{Dart, EdgeClass, Label, RotationMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    /// External name, used as the Gauss-code label.
    pub label: u32,
    /// +1 or -1 under the right-handed convention.
    pub sign: i8,
}

/// One pass of a component through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Passage {
    /// Index into `LinkDiagram::crossings`.
    pub crossing: usize,
    pub over: bool,
}

/// Where a crossing sits on a projected polyline: segment index and the
/// parameter along it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PassageSite {
    pub segment: usize,
    pub t: f64,
}

/// Projected curves backing a diagram, kept for rendering.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DiagramGeometry {
    pub curves: Vec<Vec<Point2>>,
    /// Parallel to `LinkDiagram::components`.
    pub sites: Vec<Vec<PassageSite>>,
}

/// A decorated link diagram: signed crossings and, per component, the cyclic
/// sequence of passages.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub crossings: Vec<Crossing>,
    pub components: Vec<Vec<Passage>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<DiagramGeometry>,
}

/// Position of a passage: component and index within it.
pub type Slot = (usize, usize);

impl LinkDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// For each crossing, the slots of its over and under passages.
    pub fn passage_slots(&self) -> Result<Vec<(Slot, Slot)>> {
        let mut over: Vec<Option<Slot>> = vec![None; self.crossings.len()];
        let mut under: Vec<Option<Slot>> = vec![None; self.crossings.len()];
        for (c, comp) in self.components.iter().enumerate() {
            for (i, p) in comp.iter().enumerate() {
                let cell = match (p.crossing < self.crossings.len(), p.over) {
                    (false, _) => {
                        return Err(Error::Validation(format!("passage refers to missing crossing {}", p.crossing)))
                    }
                    (true, true) => &mut over[p.crossing],
                    (true, false) => &mut under[p.crossing],
                };
                if cell.replace((c, i)).is_some() {
                    let label = self.crossings[p.crossing].label;
                    let kind = if p.over { "over" } else { "under" };
                    return Err(Error::Validation(format!("crossing {label} has two {kind} passages")));
                }
            }
        }
        over.into_iter()
            .zip(under)
            .enumerate()
            .map(|(x, pair)| match pair {
                (Some(o), Some(u)) => Ok((o, u)),
                _ => Err(Error::Validation(format!(
                    "crossing {} lacks an over or an under passage",
                    self.crossings[x].label
                ))),
            })
            .collect()
    }

    /// Checks that every crossing is passed exactly once over and once under,
    /// that signs are ±1 and labels distinct.
    pub fn validate(&self) -> Result<()> {
        self.passage_slots()?;
        let mut seen = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::Validation(format!("crossing {} has sign {}", c.label, c.sign)));
            }
            if let Some(j) = seen.insert(c.label, i) {
                return Err(Error::Validation(format!("crossings {j} and {i} share label {}", c.label)));
            }
        }
        Ok(())
    }

    /// Components passing over and under crossing `x`.
    pub fn crossing_components(&self) -> Result<Vec<(usize, usize)>> {
        Ok(self.passage_slots()?.into_iter().map(|(o, u)| (o.0, u.0)).collect())
    }

    /// Half the sum of signs of crossings between components `a` and `b`.
    pub fn linking_number(&self, a: usize, b: usize) -> Result<i64> {
        if a == b {
            return Err(Error::Argument(format!("linking number of component {a} with itself; use writhe")));
        }
        let k = self.components.len();
        if a >= k || b >= k {
            return Err(Error::Argument(format!("component index out of range ({a}, {b}) for {k} components")));
        }
        let sum: i64 = self
            .crossing_components()?
            .iter()
            .zip(&self.crossings)
            .filter(|((o, u), _)| (*o == a && *u == b) || (*o == b && *u == a))
            .map(|(_, c)| c.sign as i64)
            .sum();
        if sum % 2 != 0 {
            return Err(Error::Validation(format!("odd crossing-sign sum {sum} between components {a} and {b}")));
        }
        Ok(sum / 2)
    }

    /// Sum of signs of the self-crossings of component `c`.
    pub fn writhe(&self, c: usize) -> Result<i64> {
        Ok(self
            .crossing_components()?
            .iter()
            .zip(&self.crossings)
            .filter(|((o, u), _)| *o == c && *u == c)
            .map(|(_, x)| x.sign as i64)
            .sum())
    }

    /// Reverses the orientation of component `c`. Signs of crossings between
    /// `c` and other components flip; self-crossings keep theirs.
    pub fn reversed(&self, c: usize) -> Result<LinkDiagram> {
        let comps = self.crossing_components()?;
        let mut out = self.clone();
        out.components[c].reverse();
        for (x, (o, u)) in comps.into_iter().enumerate() {
            if (o == c) != (u == c) {
                out.crossings[x].sign = -out.crossings[x].sign;
            }
        }
        if let Some(g) = out.geometry.as_mut() {
            g.curves[c].reverse();
            g.curves[c].rotate_right(1);
            let n = g.curves[c].len();
            for s in g.sites[c].iter_mut() {
                *s = PassageSite { segment: n - 1 - s.segment, t: 1.0 - s.t };
            }
            g.sites[c].reverse();
        }
        Ok(out)
    }

    /// The 4-regular map of the diagram: one vertex per crossing whose
    /// counterclockwise star is `[over out, under out, over in, under in]` for
    /// a positive crossing and `[over out, under in, over in, under out]` for a
    /// negative one. Edge `e` of component `c` runs from the out-slot of its
    /// passage `i` to the in-slot of passage `i + 1`; the returned table maps
    /// `(c, i)` to that edge. Crossingless components are omitted.
    pub fn to_rotation_map(&self) -> Result<(RotationMap, BTreeMap<Slot, usize>)> {
        self.validate()?;
        let mut edges = Vec::new();
        let mut edge_of = BTreeMap::new();
        // per crossing: [over_in, over_out, under_in, under_out] darts
        let mut ends: Vec<[Option<Dart>; 4]> = vec![[None; 4]; self.crossings.len()];
        for (c, comp) in self.components.iter().enumerate() {
            for (i, p) in comp.iter().enumerate() {
                let q = comp[(i + 1) % comp.len()];
                let e = edges.len();
                edges.push(([p.crossing, q.crossing], EdgeClass::Plain));
                edge_of.insert((c, i), e);
                ends[p.crossing][if p.over { 1 } else { 3 }] = Some(Dart::new(e, 0));
                ends[q.crossing][if q.over { 0 } else { 2 }] = Some(Dart::new(e, 1));
            }
        }
        let vertices = self
            .crossings
            .iter()
            .zip(&ends)
            .map(|(x, d)| {
                let [oi, oo, ui, uo] = d.map(|d| d.expect("validated passage"));
                let star = if x.sign > 0 { vec![oo, uo, oi, ui] } else { vec![oo, ui, oi, uo] };
                (Label::Crossing(x.label), star)
            })
            .collect();
        let map = RotationMap::from_parts(vertices, edges)?;
        Ok((map, edge_of))
    }

    /// Euler genus of the surface on which the diagram's map embeds; zero means
    /// the diagram is planar.
    pub fn genus(&self) -> Result<u64> {
        self.to_rotation_map()?.0.genus()
    }

    /// Relabels crossings as 1, 2, ... in order of first appearance.
    pub fn canonical_labels(&self) -> LinkDiagram {
        let mut out = self.clone();
        let mut next = 1;
        let mut assigned = vec![false; self.crossings.len()];
        for comp in &self.components {
            for p in comp {
                if !assigned[p.crossing] {
                    assigned[p.crossing] = true;
                    out.crossings[p.crossing].label = next;
                    next += 1;
                }
            }
        }
        out
    }
}
