//! Link diagrams as duets and quintets. Crossing `x` owns legs
//! `4x-3, 4x-2, 4x-1, 4x` in counterclockwise order (southwest, southeast,
//! northeast, northwest). Duets pair up legs along the strands; each
//! quintet `{x, d|u, in, out, component}` is one passage through crossing
//! `x`, `d` under and `u` over, entering at leg `in` and leaving at `out`.
//!
//! Duets are written `a,b` and quintets in braces, any number per line; the
//! LaTeX table markup `&`, `\\`, `\{`, `\}` and
//! `\text{..}` is tolerated, and lines without digits are skipped.
//!
//! ```
//! use gemlink::codecs::{dq_to_gauss, parse_dq, serialize_gauss};
//!
//! let curl = parse_dq("1,2\n3,4\n{1,d,1,3,1}\n{1,u,4,2,1}\n").unwrap();
//! assert_eq!(serialize_gauss(&dq_to_gauss(&curl).unwrap()), "((-1,+1)) [1:+]");
//! ```

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geom3::{p2, Point2};
use crate::linkproj::{Crossing, LinkDiagram, Passage};
use crate::planar_map::{Dart, EdgeClass, Label, RotationMap};

use super::gauss::{from_diagram, GaussCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quintet {
    pub crossing: u32,
    pub over: bool,
    pub in_leg: u32,
    pub out_leg: u32,
    pub component: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuetQuintetFile {
    pub duets: Vec<(u32, u32)>,
    pub quintets: Vec<Quintet>,
}

fn owner(leg: u32) -> u32 {
    leg.div_ceil(4)
}

/// Position of a leg around its crossing: 0 SW, 1 SE, 2 NE, 3 NW.
fn corner(leg: u32) -> usize {
    ((leg - 1) % 4) as usize
}

fn corner_point(leg: u32) -> Point2 {
    [p2(-1.0, -1.0), p2(1.0, -1.0), p2(1.0, 1.0), p2(-1.0, 1.0)][corner(leg)]
}

fn int(tok: &str, line: usize) -> Result<u32> {
    tok.trim().parse().map_err(|_| Error::format(line, format!("expected an integer, found '{tok}'")))
}

pub fn parse_dq(text: &str) -> Result<DuetQuintetFile> {
    let mut duets = Vec::new();
    let mut quintets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if !content.chars().any(|c| c.is_ascii_digit()) {
            continue;
        }
        let cleaned = content
            .replace("\\text{d}", "d")
            .replace("\\text{u}", "u")
            .replace("\\{", "{")
            .replace("\\}", "}")
            .replace("\\\\", " ")
            .replace('&', " ");
        let mut rest = cleaned.trim_start();
        while !rest.is_empty() {
            if rest.starts_with('\\') {
                let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
                rest = rest[end..].trim_start();
            } else if let Some(body) = rest.strip_prefix('{') {
                let end = body.find('}').ok_or_else(|| Error::format(line, "unterminated quintet"))?;
                let fields: Vec<&str> = body[..end].split(',').map(str::trim).collect();
                if fields.len() != 5 {
                    return Err(Error::format(line, format!("quintet needs 5 fields, found {}", fields.len())));
                }
                let over = match fields[1] {
                    "d" => false,
                    "u" => true,
                    other => return Err(Error::format(line, format!("expected d or u, found '{other}'"))),
                };
                quintets.push(Quintet {
                    crossing: int(fields[0], line)?,
                    over,
                    in_leg: int(fields[2], line)?,
                    out_leg: int(fields[3], line)?,
                    component: int(fields[4], line)?,
                });
                rest = body[end + 1..].trim_start();
            } else {
                // a duet "a,b", possibly with spaces around the comma
                let comma = rest.find(',').ok_or_else(|| Error::format(line, format!("expected a duet, found '{}'", rest.trim())))?;
                let a = int(&rest[..comma], line)?;
                let tail = rest[comma + 1..].trim_start();
                let end = tail.find(|c: char| !c.is_ascii_digit()).unwrap_or(tail.len());
                let b = int(&tail[..end], line)?;
                duets.push((a, b));
                rest = tail[end..].trim_start();
            }
        }
    }
    let file = DuetQuintetFile { duets, quintets };
    file.validate()?;
    Ok(file)
}

pub fn serialize_dq(file: &DuetQuintetFile) -> String {
    let mut out = String::from("# duets\n");
    for (a, b) in &file.duets {
        out.push_str(&format!("{a},{b}\n"));
    }
    out.push_str("# quintets: {crossing, d|u, in-leg, out-leg, component}\n");
    for q in &file.quintets {
        let t = if q.over { 'u' } else { 'd' };
        out.push_str(&format!("{{{},{t},{},{},{}}}\n", q.crossing, q.in_leg, q.out_leg, q.component));
    }
    out
}

impl DuetQuintetFile {
    pub fn crossing_count(&self) -> usize {
        self.quintets.iter().map(|q| q.crossing).max().unwrap_or(0) as usize
    }

    pub fn component_count(&self) -> usize {
        self.quintets.iter().map(|q| q.component).collect::<BTreeSet<_>>().len()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.crossing_count() as u32;
        let mut partner: BTreeMap<u32, u32> = BTreeMap::new();
        for &(a, b) in &self.duets {
            for leg in [a, b] {
                if leg == 0 || leg > 4 * k {
                    return Err(Error::Validation(format!("leg {leg} is outside 1..{}", 4 * k)));
                }
            }
            if a == b {
                return Err(Error::Validation(format!("leg {a} is matched with itself")));
            }
            for (x, y) in [(a, b), (b, a)] {
                if partner.insert(x, y).is_some() {
                    return Err(Error::Validation(format!("leg {x} appears in two duets")));
                }
            }
        }
        if let Some(leg) = (1..=4 * k).find(|l| !partner.contains_key(l)) {
            return Err(Error::Validation(format!("leg {leg} is in no duet")));
        }
        let mut kinds: BTreeMap<u32, Vec<&Quintet>> = BTreeMap::new();
        for q in &self.quintets {
            for leg in [q.in_leg, q.out_leg] {
                if owner(leg) != q.crossing {
                    return Err(Error::Validation(format!("leg {leg} does not belong to crossing {}", q.crossing)));
                }
            }
            if (corner(q.in_leg) + 2) % 4 != corner(q.out_leg) {
                return Err(Error::Validation(format!(
                    "legs {} and {} are not opposite at crossing {}",
                    q.in_leg, q.out_leg, q.crossing
                )));
            }
            kinds.entry(q.crossing).or_default().push(q);
        }
        for x in 1..=k {
            let qs = kinds.get(&x).map(Vec::as_slice).unwrap_or(&[]);
            let ok = qs.len() == 2 && qs[0].over != qs[1].over;
            if !ok {
                return Err(Error::Validation(format!("crossing {x} needs exactly one d and one u quintet")));
            }
            if corner(qs[0].in_leg) % 2 == corner(qs[1].in_leg) % 2 {
                return Err(Error::Validation(format!("both passages at crossing {x} use the same legs")));
            }
        }
        let comps: BTreeSet<u32> = self.quintets.iter().map(|q| q.component).collect();
        if comps.iter().copied().ne(1..=comps.len() as u32) {
            return Err(Error::Validation(format!("component ids {comps:?} are not 1..{}", comps.len())));
        }
        Ok(())
    }

    fn partner(&self) -> BTreeMap<u32, u32> {
        self.duets.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect()
    }
}

/// The 4-regular map with crossings as vertices (legs counterclockwise) and
/// duets as edges.
pub fn dq_to_map(file: &DuetQuintetFile) -> Result<RotationMap> {
    let k = file.crossing_count();
    let mut star_of: BTreeMap<u32, Dart> = BTreeMap::new();
    let mut edges = Vec::new();
    for (e, &(a, b)) in file.duets.iter().enumerate() {
        edges.push(([owner(a) as usize - 1, owner(b) as usize - 1], EdgeClass::Plain));
        star_of.insert(a, Dart::new(e, 0));
        star_of.insert(b, Dart::new(e, 1));
    }
    let vertices = (1..=k as u32)
        .map(|x| (Label::Crossing(x), (4 * x - 3..=4 * x).map(|l| star_of[&l]).collect()))
        .collect();
    RotationMap::from_parts(vertices, edges)
}

/// Walks every component along its quintets: from a passage's out-leg,
/// through its duet, into the next passage's in-leg.
pub fn dq_to_diagram(file: &DuetQuintetFile) -> Result<LinkDiagram> {
    file.validate()?;
    let partner = file.partner();
    let by_in: BTreeMap<u32, usize> = file.quintets.iter().enumerate().map(|(i, q)| (q.in_leg, i)).collect();
    let by_out: BTreeSet<u32> = file.quintets.iter().map(|q| q.out_leg).collect();
    let k = file.crossing_count();
    let mut crossings: Vec<Crossing> = (1..=k as u32).map(|label| Crossing { label, sign: 0 }).collect();
    let mut pair: Vec<[Option<&Quintet>; 2]> = vec![[None, None]; k];
    for q in &file.quintets {
        pair[q.crossing as usize - 1][q.over as usize] = Some(q);
    }
    for (x, [under, over]) in pair.iter().enumerate() {
        let (u, o) = (under.expect("validated"), over.expect("validated"));
        let dir = |q: &Quintet| corner_point(q.out_leg) - corner_point(q.in_leg);
        crossings[x].sign = if dir(o).cross(dir(u)) > 0.0 { 1 } else { -1 };
    }

    let mut visited = vec![false; file.quintets.len()];
    let mut components = Vec::new();
    for c in 1..=file.component_count() as u32 {
        let start = file.quintets.iter().position(|q| q.component == c).expect("contiguous ids");
        let mut comp = Vec::new();
        let mut i = start;
        loop {
            if visited[i] {
                return Err(Error::Orientation(format!(
                    "strand through quintet {{{}, ..}} closes up before returning to its start",
                    file.quintets[i].crossing
                )));
            }
            visited[i] = true;
            let q = file.quintets[i];
            if q.component != c {
                return Err(Error::Validation(format!(
                    "crossing {} passage is on component {} but reached from component {c}",
                    q.crossing, q.component
                )));
            }
            comp.push(Passage { crossing: q.crossing as usize - 1, over: q.over });
            let leg = partner[&q.out_leg];
            i = match by_in.get(&leg) {
                Some(&j) => j,
                None if by_out.contains(&leg) => {
                    return Err(Error::Orientation(format!(
                        "out-leg {} meets out-leg {leg}; the strand orientations disagree",
                        q.out_leg
                    )))
                }
                None => return Err(Error::Validation(format!("leg {leg} is on no quintet"))),
            };
            if i == start {
                break;
            }
        }
        components.push(comp);
    }
    if let Some(i) = visited.iter().position(|v| !v) {
        return Err(Error::Validation(format!(
            "quintet of crossing {} lies on no traversed component",
            file.quintets[i].crossing
        )));
    }
    Ok(LinkDiagram { crossings, components, geometry: None })
}

pub fn dq_to_gauss(file: &DuetQuintetFile) -> Result<GaussCode> {
    Ok(from_diagram(&dq_to_diagram(file)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CURL: &str = "1,2\n3,4\n{1,d,1,3,1}\n{1,u,4,2,1}\n";

    fn hopf() -> DuetQuintetFile {
        // two crossings side by side joined by an upper and a lower arc,
        // plus two outer arcs
        parse_dq(
            "1,6\n2,5\n3,8\n4,7\n\
             {1,u,1,3,1}\n{1,d,2,4,2}\n{2,d,8,6,1}\n{2,u,7,5,2}\n",
        )
        .unwrap()
    }

    #[test]
    fn curl_file() {
        let f = parse_dq(CURL).unwrap();
        let m = dq_to_map(&f).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count(), m.trace_faces().unwrap().len()), (1, 2, 3));
        assert_eq!(m.genus().unwrap(), 0);
        assert_eq!(parse_dq(&serialize_dq(&f)).unwrap(), f);
    }

    #[test]
    fn latex_layout_is_accepted() {
        let tex = " 1, 2 &\n 3, 4 \\\\ \\hline\n \\{1,\\text{d},1,3,1\\} & \\{1,\\text{u},4,2,1\\} \\\\\n";
        assert_eq!(parse_dq(tex).unwrap(), parse_dq(CURL).unwrap());
    }

    #[test]
    fn hopf_file_links_once() {
        let f = hopf();
        let d = dq_to_diagram(&f).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.genus().unwrap(), 0);
        assert_eq!(d.linking_number(0, 1).unwrap().abs(), 1);
        let (m, _) = d.to_rotation_map().unwrap();
        assert_eq!(m.trace_faces().unwrap().len(), dq_to_map(&f).unwrap().trace_faces().unwrap().len());
    }

    #[test]
    fn violations() {
        assert!(matches!(parse_dq("1,6\n2,5\n3,5\n4,7\n{1,u,1,3,1}\n{1,d,2,4,2}\n{2,d,8,6,1}\n{2,u,7,5,2}\n"), Err(Error::Validation(_))));
        assert!(matches!(parse_dq("1,2\n3,4\n{1,d,1,3,1}\n{1,d,4,2,1}\n"), Err(Error::Validation(_))));
        assert!(matches!(parse_dq("1,2\n3,4\n{1,d,1,2,1}\n{1,u,4,2,1}\n"), Err(Error::Validation(_))));
        assert!(matches!(parse_dq("1,2\n{1,x,1,3,1}\n"), Err(Error::Format { line: 2, .. })));
        let bad = parse_dq("1,2\n3,4\n{1,d,1,3,1}\n{1,u,2,4,1}\n").unwrap();
        assert!(matches!(dq_to_diagram(&bad), Err(Error::Orientation(_))));
    }

    #[test]
    fn swapped_duet_raises_genus() {
        let mut f = hopf();
        let (a, b) = (f.duets[0], f.duets[1]);
        f.duets[0] = (a.0, b.1);
        f.duets[1] = (b.0, a.1);
        assert!(dq_to_map(&f).unwrap().genus().unwrap() > 0);
    }
}
