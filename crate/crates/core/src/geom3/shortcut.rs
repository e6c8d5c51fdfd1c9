use super::predicates::{collinear3, segment_from_corner_enters_triangle, segment_meets_triangle};
use super::{p3, Point3};
use crate::linkproj::PLLink;

/// Whether removing vertex `i` of component `c` sweeps the triangle
/// `(prev, v, next)` through nothing.
fn removable(link: &PLLink, c: usize, i: usize, obstacles: &[(Point3, Point3)]) -> bool {
    let comp = &link.components[c];
    let n = comp.len();
    let (ip, iq) = ((i + n - 1) % n, (i + 1) % n);
    let (p, v, q) = (comp[ip], comp[i], comp[iq]);

    if collinear3(p, v, q) {
        // only a vertex strictly inside the segment pq can go
        let between = (v - p).dot(q - v) > 0.0;
        if !between {
            return false;
        }
    }
    let lo = p3(p.x.min(v.x).min(q.x), p.y.min(v.y).min(q.y), p.z.min(v.z).min(q.z));
    let hi = p3(p.x.max(v.x).max(q.x), p.y.max(v.y).max(q.y), p.z.max(v.z).max(q.z));
    let apart = |a: Point3, b: Point3| {
        a.x.max(b.x) < lo.x
            || a.x.min(b.x) > hi.x
            || a.y.max(b.y) < lo.y
            || a.y.min(b.y) > hi.y
            || a.z.max(b.z) < lo.z
            || a.z.min(b.z) > hi.z
    };
    let blocked = |a: Point3, b: Point3| -> bool {
        if apart(a, b) {
            return false;
        }
        if collinear3(p, v, q) {
            return segment_meets_triangle(a, b, p, q, q) && segment_meets_triangle(a, b, p, v, q);
        }
        segment_meets_triangle(a, b, p, v, q)
    };

    for (d, other) in link.components.iter().enumerate() {
        let m = other.len();
        for k in 0..m {
            let (ka, kb) = (k, (k + 1) % m);
            if d == c && (ka == i || kb == i) {
                continue;
            }
            let (a, b) = (other[ka], other[kb]);
            if apart(a, b) {
                continue;
            }
            let touches_p = d == c && (ka == ip || kb == ip);
            let touches_q = d == c && (ka == iq || kb == iq);
            let hit = match (touches_p, touches_q) {
                (false, false) => blocked(a, b),
                (true, true) => true,
                (true, false) => {
                    let far = if ka == ip { b } else { a };
                    segment_from_corner_enters_triangle(p, far, v, q)
                }
                (false, true) => {
                    let far = if ka == iq { b } else { a };
                    segment_from_corner_enters_triangle(q, far, p, v)
                }
            };
            if hit {
                return false;
            }
        }
    }
    !obstacles.iter().any(|&(a, b)| blocked(a, b))
}

/// Removes vertices whose elimination triangle is pierced by no segment of
/// the link or of `obstacles`, until no more can go. Components keep at least
/// three vertices. Each component is scanned cyclically, resuming at the
/// removal point, and the components are revisited until a full round
/// removes nothing.
pub fn shortcut(link: &PLLink, obstacles: &[(Point3, Point3)]) -> PLLink {
    let mut out = link.clone();
    loop {
        let mut removed = false;
        for c in 0..out.components.len() {
            let mut i = 0;
            let mut misses = 0;
            while out.components[c].len() > 3 && misses < out.components[c].len() {
                let len = out.components[c].len();
                i %= len;
                if removable(&out, c, i, obstacles) {
                    out.components[c].remove(i);
                    removed = true;
                    misses = 0;
                } else {
                    i += 1;
                    misses += 1;
                }
            }
        }
        if !removed {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3::p3;

    fn hexagon(r: f64, z: f64) -> Vec<Point3> {
        (0..6)
            .map(|k| {
                let t = std::f64::consts::PI * k as f64 / 3.0;
                p3(r * t.cos(), r * t.sin(), z)
            })
            .collect()
    }

    #[test]
    fn convex_hexagon_collapses_to_triangle() {
        let out = shortcut(&PLLink::new(vec![hexagon(1.0, 0.0)]), &[]);
        assert_eq!(out.components[0].len(), 3);
    }

    #[test]
    fn pierced_triangle_blocks_removal() {
        // A square whose every ear is pierced by a vertical pole: removing any
        // vertex would cut through one of them.
        let square = vec![p3(0.0, 0.0, 0.0), p3(2.0, 0.0, 0.0), p3(2.0, 2.0, 0.0), p3(0.0, 2.0, 0.0)];
        let poles: Vec<(Point3, Point3)> = [(0.4, 0.4), (1.6, 0.4), (1.6, 1.6), (0.4, 1.6)]
            .iter()
            .map(|&(x, y)| (p3(x, y, -1.0), p3(x, y, 1.0)))
            .collect();
        let out = shortcut(&PLLink::new(vec![square.clone()]), &poles);
        assert_eq!(out.components[0], square);
    }

    #[test]
    fn collinear_vertex_goes() {
        let sq = vec![p3(0.0, 0.0, 0.0), p3(1.0, 0.0, 0.0), p3(2.0, 0.0, 0.0), p3(2.0, 2.0, 0.0), p3(0.0, 2.0, 0.0)];
        let poles: Vec<(Point3, Point3)> = [(0.4, 0.4), (1.6, 0.4), (1.6, 1.6), (0.4, 1.6)]
            .iter()
            .map(|&(x, y)| (p3(x, y, -1.0), p3(x, y, 1.0)))
            .collect();
        let out = shortcut(&PLLink::new(vec![sq.clone()]), &poles);
        let mut expect = sq;
        expect.remove(1);
        assert_eq!(out.components[0], expect);
    }
}
