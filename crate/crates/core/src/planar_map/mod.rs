//! Planar maps given by rotation systems, and the wing/nervure growth engine.

mod generate;
mod movelog;
mod wings;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use generate::{random_move_log, random_triangulation};
pub use movelog::{MoveLog, MoveRecord, TailKind, TailType};
pub use wings::{init_wings, Side, WingState};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Vertex tags. `Z(j)` are the axis vertices; lower/upper case `a`/`b` are the
/// wing vertices of the left/right side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Z(u32),
    LowerA(u32),
    UpperA(u32),
    LowerB(u32),
    UpperB(u32),
    Crossing(u32),
    Node(u32),
}

impl Label {
    pub fn is_z(self) -> bool {
        matches!(self, Label::Z(_))
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Label::UpperA(_) | Label::UpperB(_))
    }

    pub fn is_lower(self) -> bool {
        matches!(self, Label::LowerA(_) | Label::LowerB(_))
    }

    pub fn index(self) -> u32 {
        match self {
            Label::Z(i)
            | Label::LowerA(i)
            | Label::UpperA(i)
            | Label::LowerB(i)
            | Label::UpperB(i)
            | Label::Crossing(i)
            | Label::Node(i) => i,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Z(j) => write!(f, "z3_{j}"),
            Label::LowerA(i) => write!(f, "a{i}"),
            Label::UpperA(i) => write!(f, "A{i}"),
            Label::LowerB(i) => write!(f, "b{i}"),
            Label::UpperB(i) => write!(f, "B{i}"),
            Label::Crossing(i) => write!(f, "x{i}"),
            Label::Node(i) => write!(f, "v{i}"),
        }
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (ctor, rest): (fn(u32) -> Label, &str) = if let Some(r) = s.strip_prefix("z3_") {
            (Label::Z, r)
        } else {
            let mut chars = s.chars();
            let head = chars.next().ok_or_else(|| "empty label".to_string())?;
            let ctor: fn(u32) -> Label = match head {
                'a' => Label::LowerA,
                'A' => Label::UpperA,
                'b' => Label::LowerB,
                'B' => Label::UpperB,
                'x' => Label::Crossing,
                'v' => Label::Node,
                _ => return Err(format!("unknown label `{s}`")),
            };
            (ctor, chars.as_str())
        };
        let idx: u32 = rest.parse().map_err(|_| format!("bad label index in `{s}`"))?;
        Ok(ctor(idx))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    Wing,
    Nervure,
    Plain,
}

/// A half-edge: edge `edge` seen from its endpoint `ends[end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: u8,
}

impl Dart {
    pub fn new(edge: EdgeId, end: u8) -> Self {
        Dart { edge, end }
    }

    pub fn twin(self) -> Self {
        Dart { edge: self.edge, end: 1 - self.end }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub ends: [VertexId; 2],
    pub class: EdgeClass,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub label: Label,
    /// Counterclockwise cyclic order of the darts at this vertex.
    pub star: Vec<Dart>,
}

/// A planar map stored as a rotation system.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RotationMap {
    vertices: BTreeMap<VertexId, Vertex>,
    edges: BTreeMap<EdgeId, Edge>,
    by_label: BTreeMap<Label, VertexId>,
    next_vertex: VertexId,
    next_edge: EdgeId,
}

impl RotationMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a map from explicit stars. `edges[e]` gives the endpoints of
    /// edge `e`; each star lists darts counterclockwise.
    pub fn from_parts(vertices: Vec<(Label, Vec<Dart>)>, edges: Vec<([VertexId; 2], EdgeClass)>) -> Result<Self> {
        let mut map = RotationMap::new();
        for (label, _) in &vertices {
            map.add_vertex(*label)?;
        }
        for (ends, class) in edges {
            for v in ends {
                if !map.vertices.contains_key(&v) {
                    return Err(Error::Structural(format!("edge endpoint {v} does not exist")));
                }
            }
            let id = map.next_edge;
            map.next_edge += 1;
            map.edges.insert(id, Edge { ends, class });
        }
        for (v, (_, star)) in vertices.into_iter().enumerate() {
            map.vertices.get_mut(&v).unwrap().star = star;
        }
        map.validate()?;
        Ok(map)
    }

    /// Builds a simple map from counterclockwise neighbour lists; vertex `i`
    /// gets id `i` and label `labels[i]`.
    pub fn from_neighbor_lists(lists: &[Vec<usize>], labels: &[Label], class: EdgeClass) -> Result<Self> {
        let mut edge_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut edges: Vec<([VertexId; 2], EdgeClass)> = Vec::new();
        let stars: Vec<(Label, Vec<Dart>)> = lists
            .iter()
            .enumerate()
            .map(|(a, list)| {
                let star = list
                    .iter()
                    .map(|&b| {
                        let key = (a.min(b), a.max(b));
                        let e = *edge_of.entry(key).or_insert_with(|| {
                            edges.push(([key.0, key.1], class));
                            edges.len() - 1
                        });
                        Dart::new(e, if a == key.0 { 0 } else { 1 })
                    })
                    .collect();
                (labels[a], star)
            })
            .collect();
        RotationMap::from_parts(stars, edges)
    }

    pub fn add_vertex(&mut self, label: Label) -> Result<VertexId> {
        if self.by_label.contains_key(&label) {
            return Err(Error::Structural(format!("duplicate vertex label {label}")));
        }
        let id = self.next_vertex;
        self.next_vertex += 1;
        self.vertices.insert(id, Vertex { label, star: Vec::new() });
        self.by_label.insert(label, id);
        Ok(id)
    }

    /// Adds an edge and appends its darts to the end of both stars.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, class: EdgeClass) -> EdgeId {
        let id = self.next_edge;
        self.next_edge += 1;
        self.edges.insert(id, Edge { ends: [u, v], class });
        self.vertices.get_mut(&u).expect("vertex").star.push(Dart::new(id, 0));
        self.vertices.get_mut(&v).expect("vertex").star.push(Dart::new(id, 1));
        id
    }

    /// Adds an edge without touching any star; the caller places the darts.
    pub(crate) fn add_detached_edge(&mut self, u: VertexId, v: VertexId, class: EdgeClass) -> EdgeId {
        let id = self.next_edge;
        self.next_edge += 1;
        self.edges.insert(id, Edge { ends: [u, v], class });
        id
    }

    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        if let Some(vx) = self.vertices.remove(&v) {
            self.by_label.remove(&vx.label);
        }
    }

    pub(crate) fn set_star(&mut self, v: VertexId, star: Vec<Dart>) {
        self.vertices.get_mut(&v).expect("vertex").star = star;
    }

    pub(crate) fn star_mut(&mut self, v: VertexId) -> &mut Vec<Dart> {
        &mut self.vertices.get_mut(&v).expect("vertex").star
    }

    pub(crate) fn set_end(&mut self, d: Dart, v: VertexId) {
        self.edges.get_mut(&d.edge).expect("edge").ends[d.end as usize] = v;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, &Vertex)> + '_ {
        self.vertices.iter().map(|(k, v)| (*k, v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Edge)> + '_ {
        self.edges.iter().map(|(k, e)| (*k, e))
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[&e]
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.vertices[&v].label
    }

    pub fn id_of(&self, label: Label) -> Option<VertexId> {
        self.by_label.get(&label).copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn star(&self, v: VertexId) -> &[Dart] {
        &self.vertices[&v].star
    }

    /// Vertex the dart sits at.
    pub fn origin(&self, d: Dart) -> VertexId {
        self.edges[&d.edge].ends[d.end as usize]
    }

    /// Vertex the dart points to.
    pub fn target(&self, d: Dart) -> VertexId {
        self.edges[&d.edge].ends[1 - d.end as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[&v].star.len()
    }

    /// Neighbours of `v` across edges of the given class, in star order.
    pub fn neighbors_by(&self, v: VertexId, class: EdgeClass) -> Vec<(EdgeId, VertexId)> {
        self.star(v)
            .iter()
            .filter(|d| self.edges[&d.edge].class == class)
            .map(|d| (d.edge, self.target(*d)))
            .collect()
    }

    /// Checks that every edge appears exactly twice across the stars, once per
    /// dart, each at the vertex it belongs to.
    pub fn validate(&self) -> Result<()> {
        let mut seen: BTreeMap<Dart, VertexId> = BTreeMap::new();
        for (&v, vx) in &self.vertices {
            for &d in &vx.star {
                let Some(edge) = self.edges.get(&d.edge) else {
                    return Err(Error::Structural(format!("star of {} names unknown edge {}", vx.label, d.edge)));
                };
                if d.end > 1 || edge.ends[d.end as usize] != v {
                    return Err(Error::Structural(format!("dart {d:?} misplaced at {}", vx.label)));
                }
                if seen.insert(d, v).is_some() {
                    return Err(Error::Structural(format!("dart {d:?} appears twice")));
                }
            }
        }
        for &e in self.edges.keys() {
            let count = [0u8, 1].iter().filter(|&&end| seen.contains_key(&Dart::new(e, end))).count();
            if count != 2 {
                return Err(Error::Structural(format!("edge {e} appears {count} time(s) in the stars; dangling edge")));
            }
        }
        Ok(())
    }

    /// Traces all faces. Each face is the cyclic list of darts along its
    /// boundary; isolated vertices contribute one empty face each.
    pub fn trace_faces(&self) -> Result<Vec<Vec<Dart>>> {
        self.validate()?;
        let mut pos: BTreeMap<Dart, (VertexId, usize)> = BTreeMap::new();
        for (&v, vx) in &self.vertices {
            for (i, &d) in vx.star.iter().enumerate() {
                pos.insert(d, (v, i));
            }
        }
        let next = |d: Dart| -> Dart {
            let t = d.twin();
            let (v, i) = pos[&t];
            let star = &self.vertices[&v].star;
            star[(i + 1) % star.len()]
        };
        let mut visited: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = Vec::new();
        for &d0 in pos.keys() {
            if visited.contains(&d0) {
                continue;
            }
            let mut face = Vec::new();
            let mut d = d0;
            while visited.insert(d) {
                face.push(d);
                d = next(d);
            }
            faces.push(face);
        }
        for vx in self.vertices.values() {
            if vx.star.is_empty() {
                faces.push(Vec::new());
            }
        }
        Ok(faces)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.next_vertex);
        for e in self.edges.values() {
            uf.union(e.ends[0], e.ends[1]);
        }
        self.vertices.keys().map(|&v| uf.find(v)).collect::<BTreeSet<_>>().len()
    }

    /// `V - E + F` using the traced faces.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let f = self.trace_faces()?.len() as i64;
        Ok(self.vertex_count() as i64 - self.edge_count() as i64 + f)
    }

    /// Total genus of the surfaces determined by the rotation (summed over
    /// connected components).
    pub fn genus(&self) -> Result<u64> {
        let chi = self.euler_characteristic()?;
        let c = self.component_count() as i64;
        let twice = 2 * c - chi;
        debug_assert!(twice >= 0 && twice % 2 == 0);
        Ok((twice / 2) as u64)
    }
}

/// Disjoint-set forest over dense indices.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_has_one_face() {
        let mut m = RotationMap::new();
        m.add_vertex(Label::Node(0)).unwrap();
        assert_eq!(m.trace_faces().unwrap().len(), 1);
        assert_eq!(m.euler_characteristic().unwrap(), 2);
        assert_eq!(m.genus().unwrap(), 0);
    }

    #[test]
    fn triangle_has_two_faces() {
        let mut m = RotationMap::new();
        let v: Vec<_> = (0..3).map(|i| m.add_vertex(Label::Node(i)).unwrap()).collect();
        m.add_edge(v[0], v[1], EdgeClass::Plain);
        m.add_edge(v[1], v[2], EdgeClass::Plain);
        m.add_edge(v[2], v[0], EdgeClass::Plain);
        assert_eq!(m.trace_faces().unwrap().len(), 2);
        assert_eq!(m.euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn star_of_initial_wing_has_one_face() {
        let st = init_wings(2).unwrap();
        let m = &st.left;
        assert_eq!((m.vertex_count(), m.edge_count()), (5, 4));
        assert_eq!(m.trace_faces().unwrap().len(), 1);
        assert_eq!(m.euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn dangling_edge_is_rejected() {
        let mut m = RotationMap::new();
        let a = m.add_vertex(Label::Node(0)).unwrap();
        let b = m.add_vertex(Label::Node(1)).unwrap();
        m.add_edge(a, b, EdgeClass::Plain);
        m.star_mut(b).clear();
        assert!(matches!(m.trace_faces(), Err(Error::Structural(_))));
    }

    #[test]
    fn interleaved_loops_live_on_the_torus() {
        let loops = |star: Vec<Dart>| {
            RotationMap::from_parts(
                vec![(Label::Node(0), star)],
                vec![([0, 0], EdgeClass::Plain), ([0, 0], EdgeClass::Plain)],
            )
            .unwrap()
        };
        let (d0, d1) = (Dart::new(0, 0), Dart::new(1, 0));
        let nested = loops(vec![d0, d0.twin(), d1, d1.twin()]);
        assert_eq!(nested.trace_faces().unwrap().len(), 3);
        assert_eq!(nested.genus().unwrap(), 0);
        let crossed = loops(vec![d0, d1, d0.twin(), d1.twin()]);
        assert_eq!(crossed.trace_faces().unwrap().len(), 1);
        assert_eq!(crossed.genus().unwrap(), 1);
    }

    #[test]
    fn label_text_round_trips() {
        for l in [Label::Z(7), Label::LowerA(3), Label::UpperA(1), Label::LowerB(12), Label::UpperB(5), Label::Crossing(9)] {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
    }
}
