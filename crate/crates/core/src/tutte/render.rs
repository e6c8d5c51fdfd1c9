use std::fmt::Write;

use serde_json::{json, Map, Value};

use super::PlaneEmbedding;
use crate::planar_map::{EdgeClass, RotationMap};

/// `{"coords": {label: [x, y]}, "residual": r}`.
pub fn embedding_json(map: &RotationMap, emb: &PlaneEmbedding) -> Value {
    let mut coords = Map::new();
    for (&v, p) in &emb.coords {
        coords.insert(map.label(v).to_string(), json!([p.x, p.y]));
    }
    json!({ "coords": coords, "residual": emb.residual })
}

/// Draws the embedding with thin wing edges and thick nervure edges.
pub fn embedding_svg(map: &RotationMap, emb: &PlaneEmbedding) -> String {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in emb.coords.values() {
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
    for (_, e) in map.edges() {
        let (a, b) = (emb.coords[&e.ends[0]], emb.coords[&e.ends[1]]);
        let (width, color) = match e.class {
            EdgeClass::Nervure => (3.0, "#b03020"),
            _ => (0.8, "#303030"),
        };
        let _ = writeln!(
            s,
            "  <line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"{color}\" stroke-width=\"{width}\"/>",
            tx(a.x),
            ty(a.y),
            tx(b.x),
            ty(b.y)
        );
    }
    for (&v, p) in &emb.coords {
        let _ = writeln!(
            s,
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"2.5\"><title>{}</title></circle>",
            tx(p.x),
            ty(p.y),
            map.label(v)
        );
    }
    s.push_str("</svg>\n");
    s
}
