use std::fmt::Write;

use crate::error::{Error, Result};

use super::LinkDiagram;

const PALETTE: [&str; 9] = ["#1b4f9c", "#b03020", "#2a7f3a", "#8a3ca0", "#c07a10", "#147a80", "#6b4a2a", "#c0407a", "#505050"];

/// Gap cut from the under strand at each crossing, as a fraction of the
/// length of the segment carrying it.
pub const UNDER_GAP: f64 = 0.06;

/// Draws the projected curves of a diagram, leaving a gap in the under
/// strand at every crossing.
pub fn diagram_svg(d: &LinkDiagram) -> Result<String> {
    let g = d
        .geometry
        .as_ref()
        .ok_or_else(|| Error::Precondition("diagram has no projected geometry to draw".into()))?;
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in g.curves.iter().flatten() {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = 560.0 / span;
    let tx = |x: f64| 20.0 + (x - x0) * scale;
    let ty = |y: f64| 580.0 - (y - y0) * scale;

    let mut s = String::from(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n",
    );
    for (c, curve) in g.curves.iter().enumerate() {
        let n = curve.len();
        let mut cuts: Vec<Vec<(f64, f64)>> = vec![Vec::new(); n];
        for (p, site) in d.components[c].iter().zip(&g.sites[c]) {
            if !p.over {
                let h = UNDER_GAP / 2.0;
                cuts[site.segment].push((site.t - h, site.t + h));
            }
        }
        let mut path = String::new();
        for k in 0..n {
            let (a, b) = (curve[k], curve[(k + 1) % n]);
            let mut iv = cuts[k].clone();
            iv.sort_by(|u, v| u.0.total_cmp(&v.0));
            let mut t = 0.0;
            for (lo, hi) in iv.into_iter().chain([(1.0, 1.0)]) {
                let lo = lo.clamp(0.0, 1.0);
                if lo > t {
                    let (p, q) = (a.lerp(b, t), a.lerp(b, lo));
                    let _ = write!(path, "M{:.2} {:.2}L{:.2} {:.2}", tx(p.x), ty(p.y), tx(q.x), ty(q.y));
                }
                t = t.max(hi.clamp(0.0, 1.0));
            }
        }
        let _ = writeln!(
            s,
            "  <path d=\"{path}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\" stroke-linecap=\"round\"/>",
            PALETTE[c % PALETTE.len()]
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
