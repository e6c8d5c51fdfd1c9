use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linkproj::{Crossing, LinkDiagram, Passage};

/// What the diagonal of a [`LinkingMatrix`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diagonal {
    Writhe,
    Framing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrix {
    pub entries: Vec<Vec<i64>>,
    pub diagonal: Diagonal,
}

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.size();
        (0..k).all(|i| (0..k).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_csv(&self) -> String {
        self.entries
            .iter()
            .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(",") + "\n")
            .collect()
    }

    pub fn from_csv(text: &str, diagonal: Diagonal) -> Result<Self> {
        let entries: Vec<Vec<i64>> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                l.split(',')
                    .map(|t| t.trim().parse().map_err(|_| Error::format(i + 1, format!("bad entry '{t}'"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        if entries.iter().any(|r| r.len() != entries.len()) {
            return Err(Error::Validation("linking matrix is not square".into()));
        }
        Ok(LinkingMatrix { entries, diagonal })
    }
}

/// Pairwise linking numbers off the diagonal; the diagonal holds `framings`
/// when given, otherwise the writhe of each component.
pub fn linking_matrix(d: &LinkDiagram, framings: Option<&[i64]>) -> Result<LinkingMatrix> {
    let k = d.component_count();
    if let Some(f) = framings {
        if f.len() != k {
            return Err(Error::Argument(format!("{} framings for {k} components", f.len())));
        }
    }
    let mut entries = vec![vec![0; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let lk = d.linking_number(i, j)?;
            entries[i][j] = lk;
            entries[j][i] = lk;
        }
        entries[i][i] = match framings {
            Some(f) => f[i],
            None => d.writhe(i)?,
        };
    }
    let diagonal = if framings.is_some() { Diagonal::Framing } else { Diagonal::Writhe };
    Ok(LinkingMatrix { entries, diagonal })
}

/// Adds curls so that each component's writhe equals its target framing.
/// Curls go at the end of each component, labelled after the largest
/// existing label.
pub fn blackboard_frame(d: &LinkDiagram, targets: &[i64]) -> Result<LinkDiagram> {
    if targets.len() != d.component_count() {
        return Err(Error::Argument(format!("{} targets for {} components", targets.len(), d.component_count())));
    }
    let mut out = d.clone();
    let mut label = d.crossings.iter().map(|x| x.label).max().unwrap_or(0);
    for (c, &f) in targets.iter().enumerate() {
        let w = d.writhe(c)?;
        let sign = if f > w { 1 } else { -1 };
        for _ in 0..(f - w).abs() {
            label += 1;
            out.crossings.push(Crossing { label, sign });
            let x = out.crossings.len() - 1;
            out.components[c].push(Passage { crossing: x, over: true });
            out.components[c].push(Passage { crossing: x, over: false });
        }
    }
    out.geometry = None;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::{parse_gauss, to_diagram};

    #[test]
    fn split_diagram_has_zero_matrix() {
        let d = to_diagram(&parse_gauss("((+1,-1),(-2,+2)) [1:+,2:-]").unwrap()).unwrap();
        let m = linking_matrix(&d, None).unwrap();
        assert_eq!(m.entries, vec![vec![1, 0], vec![0, -1]]);
        let f = linking_matrix(&d, Some(&[0, 0])).unwrap();
        assert_eq!(f.entries, vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(f.diagonal, Diagonal::Framing);
        assert_eq!(LinkingMatrix::from_csv(&m.to_csv(), Diagonal::Writhe).unwrap(), m);
    }

    #[test]
    fn curls_reach_targets() {
        let d = to_diagram(&parse_gauss("((-2,+3,-4,+1),(-5,+6,+2,-1),(-3,+4,-7,-6,+5,+7))").unwrap()).unwrap();
        let b = blackboard_frame(&d, &[-3, -3, -3]).unwrap();
        for c in 0..3 {
            assert_eq!(b.writhe(c).unwrap(), -3);
            for e in 0..3 {
                if e != c {
                    assert_eq!(b.linking_number(c, e).unwrap(), d.linking_number(c, e).unwrap());
                }
            }
        }
        let added: i64 = (0..3).map(|c| (-3 - d.writhe(c).unwrap()).abs()).sum();
        assert_eq!(b.crossing_count(), d.crossing_count() + added as usize);
        assert_eq!(b.genus().unwrap(), 0);
        assert_eq!(blackboard_frame(&b, &[-3, -3, -3]).unwrap(), b);
    }
}
