//! Line-oriented move-log format.
//!
//! ```text
//! # comment
//! n=12
//! 1 1 a1 1 2 3 4 P1 split=24,23,...,13|12,...,1 newz=1,24
//! ```
//!
//! Fields per move: `m c target u v r s tail_type split=<arc1>|<arc2> newz=<j,...>`.
//! Arcs list axis indices in the counterclockwise star order of the target,
//! starting just after its nervure edge (or after `z3_1` for the untouched
//! root, whose star runs `z3_2n .. z3_1`). `newz` names the two axis vertices
//! the new upper-case vertex joins: either the pair flanking the cut between
//! the arcs, `last(arc1),first(arc2)`, or the pair flanking the nervure side,
//! `last(arc2),first(arc1)`. A root split must take the latter so that the
//! new vertex stays a corner of the outer triangle.

use std::fmt;
use std::str::FromStr;

use super::{init_wings, Label, Side, WingState};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TailKind {
    P,
    B,
    PRefined,
    BRefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TailType {
    pub kind: TailKind,
    pub rank: u32,
}

impl fmt::Display for TailType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            TailKind::P => "P",
            TailKind::B => "B",
            TailKind::PRefined => "P'",
            TailKind::BRefined => "B'",
        };
        write!(f, "{k}{}", self.rank)
    }
}

impl FromStr for TailType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, rest) = if let Some(r) = s.strip_prefix("P'") {
            (TailKind::PRefined, r)
        } else if let Some(r) = s.strip_prefix("B'") {
            (TailKind::BRefined, r)
        } else if let Some(r) = s.strip_prefix('P') {
            (TailKind::P, r)
        } else if let Some(r) = s.strip_prefix('B') {
            (TailKind::B, r)
        } else {
            return Err(format!("bad tail type `{s}`"));
        };
        let rank: u32 = rest.parse().map_err(|_| format!("bad tail rank in `{s}`"))?;
        if rank == 0 {
            return Err("tail rank must be positive".into());
        }
        Ok(TailType { kind, rank })
    }
}

/// One wbp-move. The effect on the target's wing star is carried explicitly
/// by `split` and `new_z`; the engine validates it against the current state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub m: u32,
    pub color: u8,
    pub target: Label,
    /// Odd and even indices of the balloon's head.
    pub head: (u32, u32),
    /// Odd and even indices of the balloon's tail.
    pub tail: (u32, u32),
    pub tail_type: TailType,
    pub split: (Vec<u32>, Vec<u32>),
    pub new_z: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveLog {
    pub n: u32,
    pub moves: Vec<MoveRecord>,
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {} {} {} {} split={}|{} newz={}",
            self.m,
            self.color,
            self.target,
            self.head.0,
            self.head.1,
            self.tail.0,
            self.tail.1,
            self.tail_type,
            join(&self.split.0),
            join(&self.split.1),
            join(&self.new_z)
        )
    }
}

impl fmt::Display for MoveLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for mv in &self.moves {
            writeln!(f, "{mv}")?;
        }
        Ok(())
    }
}

fn parse_list(line: usize, s: &str) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::format(line, format!("bad index `{x}`"))))
        .collect()
}

fn parse_move(line: usize, text: &str) -> Result<MoveRecord> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 10 {
        return Err(Error::format(line, format!("expected 10 fields, found {}", fields.len())));
    }
    let num = |i: usize, name: &str| -> Result<u32> {
        fields[i].parse::<u32>().map_err(|_| Error::format(line, format!("bad {name} `{}`", fields[i])))
    };
    let m = num(0, "move index")?;
    let color = num(1, "color")?;
    if color > 1 {
        return Err(Error::format(line, format!("color must be 0 or 1, got {color}")));
    }
    let target: Label = fields[2].parse().map_err(|e: String| Error::format(line, e))?;
    let (u, v, r, s) = (num(3, "u")?, num(4, "v")?, num(5, "r")?, num(6, "s")?);
    if u % 2 == 0 || r % 2 == 0 || v % 2 == 1 || s % 2 == 1 {
        return Err(Error::format(line, "head/tail indices must be (odd, even) pairs"));
    }
    let tail_type: TailType = fields[7].parse().map_err(|e: String| Error::format(line, e))?;
    let split = fields[8]
        .strip_prefix("split=")
        .ok_or_else(|| Error::format(line, "expected split=<arc1>|<arc2>"))?;
    let (a1, a2) = split
        .split_once('|')
        .ok_or_else(|| Error::format(line, "split needs two arcs separated by `|`"))?;
    let new_z = fields[9].strip_prefix("newz=").ok_or_else(|| Error::format(line, "expected newz=<j,...>"))?;
    Ok(MoveRecord {
        m,
        color: color as u8,
        target,
        head: (u, v),
        tail: (r, s),
        tail_type,
        split: (parse_list(line, a1)?, parse_list(line, a2)?),
        new_z: parse_list(line, new_z)?,
    })
}

fn in_move(e: Error, mv: &MoveRecord) -> Error {
    match e {
        Error::Format { line, msg } => Error::Format { line, msg: format!("move {}: {msg}", mv.m) },
        Error::Structural(msg) => Error::Structural(format!("move {}: {msg}", mv.m)),
        other => other,
    }
}

impl MoveLog {
    pub fn parse(text: &str) -> Result<MoveLog> {
        let mut n = None;
        let mut moves = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            match n {
                None => {
                    let v = body
                        .strip_prefix("n=")
                        .ok_or_else(|| Error::format(line, "expected header `n=<int>`"))?;
                    let v: u32 = v.trim().parse().map_err(|_| Error::format(line, format!("bad order `{v}`")))?;
                    if v == 0 {
                        return Err(Error::InvalidOrder(0));
                    }
                    n = Some(v);
                }
                Some(_) => moves.push(parse_move(line, body)?),
            }
        }
        let n = n.ok_or_else(|| Error::format(0, "missing header `n=<int>`"))?;
        Ok(MoveLog { n, moves })
    }

    /// Replays the log, returning every intermediate state (the initial one
    /// first).
    pub fn replay(&self) -> Result<Vec<WingState>> {
        let mut states = vec![init_wings(self.n)?];
        for mv in &self.moves {
            let next = states.last().unwrap().apply_wbp_move(mv).map_err(|e| in_move(e, mv))?;
            states.push(next);
        }
        Ok(states)
    }

    pub fn final_state(&self) -> Result<WingState> {
        let mut st = init_wings(self.n)?;
        for mv in &self.moves {
            st = st.apply_wbp_move(mv).map_err(|e| in_move(e, mv))?;
        }
        Ok(st)
    }

    pub fn moves_on(&self, side: Side) -> usize {
        self.moves.iter().filter(|m| Side::from_color(m.color) == Some(side)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# two moves\nn=3\n1 1 a1 1 2 3 4 P1 split=6,5,4|3,2,1 newz=1,6\n2 0 b1 5 2 1 6 B'2 split=6,5|4,3,2,1 newz=1,6\n";

    #[test]
    fn parse_and_replay() {
        let log = MoveLog::parse(SAMPLE).unwrap();
        assert_eq!(log.n, 3);
        assert_eq!(log.moves.len(), 2);
        assert_eq!(log.moves[1].tail_type, TailType { kind: TailKind::BRefined, rank: 2 });
        let st = log.final_state().unwrap();
        assert_eq!(st.left.edge_count(), 10);
        assert_eq!(st.right.edge_count(), 10);
    }

    #[test]
    fn canonical_round_trip() {
        let log = MoveLog::parse(SAMPLE).unwrap();
        let canon = log.to_string();
        assert_eq!(MoveLog::parse(&canon).unwrap().to_string(), canon);
        assert!(!canon.contains('#'));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(MoveLog::parse("n=0\n"), Err(Error::InvalidOrder(0))));
        assert!(matches!(MoveLog::parse("1 1 a1\n"), Err(Error::Format { line: 1, .. })));
        let bad = "n=3\n1 1 a1 1 2 3 4 Q1 split=6,5,4|3,2,1 newz=1,6\n";
        assert!(matches!(MoveLog::parse(bad), Err(Error::Format { line: 2, .. })));
        let bad = "n=3\n1 1 a1 2 2 3 4 P1 split=6,5,4|3,2,1 newz=1,6\n";
        assert!(matches!(MoveLog::parse(bad), Err(Error::Format { line: 2, .. })));
        let bad = "n=3\n1 1 a1 1 2 3 4 P1 split=6,5,4,3,2,1 newz=4,3\n";
        assert!(matches!(MoveLog::parse(bad), Err(Error::Format { line: 2, .. })));
    }
}
