use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::diagram::{Crossing, DiagramGeometry, LinkDiagram, Passage, PassageSite};
use super::PLLink;
use crate::error::{Error, Result};
use crate::geom3::{p2, p3, Point2, Point3};

/// Tolerances for accepting a projection direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenericityTolerances {
    /// Minimum |sin| of the angle between two projected segments that meet.
    pub parallel: f64,
    /// Minimum distance of a crossing parameter from a segment end.
    pub endpoint: f64,
    /// Minimum distance between two crossings in the plane.
    pub coincidence: f64,
    /// Minimum depth difference at a crossing.
    pub depth: f64,
}

impl Default for GenericityTolerances {
    fn default() -> Self {
        GenericityTolerances { parallel: 1e-7, endpoint: 1e-9, coincidence: 1e-9, depth: 1e-9 }
    }
}

pub const MAX_PROJECTION_ATTEMPTS: usize = 64;

/// Orthonormal `(u, v)` with `u x v = d`.
pub(crate) fn plane_basis(d: Point3) -> (Point3, Point3) {
    let helper = if d.x.abs() < 0.6 { p3(1.0, 0.0, 0.0) } else { p3(0.0, 1.0, 0.0) };
    let u = helper.cross(d).normalized();
    let v = d.cross(u);
    (u, v)
}

struct RawCrossing {
    /// (component, segment, t) for the two strands
    a: (usize, usize, f64),
    b: (usize, usize, f64),
    a_over: bool,
    sign: i8,
    at: Point2,
}

/// Why a direction was rejected, or the crossings it produces.
fn try_direction(link: &PLLink, d: Point3, tol: &GenericityTolerances) -> Option<(Vec<Vec<Point2>>, Vec<RawCrossing>)> {
    let (u, v) = plane_basis(d);
    let flat: Vec<Vec<Point2>> =
        link.components.iter().map(|c| c.iter().map(|&p| p2(p.dot(u), p.dot(v))).collect()).collect();
    let depth: Vec<Vec<f64>> = link.components.iter().map(|c| c.iter().map(|&p| p.dot(d)).collect()).collect();

    struct Seg {
        comp: usize,
        idx: usize,
        a: Point2,
        b: Point2,
        lo: f64,
        hi: f64,
    }
    let mut segs: Vec<Seg> = Vec::new();
    for (c, f) in flat.iter().enumerate() {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            segs.push(Seg { comp: c, idx: i, a, b, lo: a.x.min(b.x), hi: a.x.max(b.x) });
        }
    }
    segs.sort_by(|s, t| s.lo.partial_cmp(&t.lo).unwrap());
    let scale = segs.iter().map(|s| s.a.x.abs().max(s.a.y.abs())).fold(1.0, f64::max);
    let slack = tol.coincidence * scale;

    let mut out = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    for j in 0..segs.len() {
        active.retain(|&i| segs[i].hi + slack >= segs[j].lo);
        for &i in &active {
            let (s, t) = (&segs[i], &segs[j]);
            let n = link.components[s.comp].len();
            let adjacent = s.comp == t.comp && ((s.idx + 1) % n == t.idx || (t.idx + 1) % n == s.idx);
            let r = s.b - s.a;
            let q = t.b - t.a;
            let den = r.cross(q);
            let w = t.a - s.a;
            let (lr, lq) = (r.norm(), q.norm());
            if lr == 0.0 || lq == 0.0 {
                return None;
            }
            if adjacent {
                // only reject a fold-back onto the neighbour
                if (den / (lr * lq)).abs() < tol.parallel && r.dot(q) < 0.0 {
                    return None;
                }
                continue;
            }
            if (den / (lr * lq)).abs() < tol.parallel {
                // parallel: reject only if they come close
                let dist = |p: Point2, a: Point2, b: Point2| {
                    let ab = b - a;
                    let h = ((p - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
                    (a + ab * h - p).norm()
                };
                let m = dist(s.a, t.a, t.b).min(dist(s.b, t.a, t.b)).min(dist(t.a, s.a, s.b)).min(dist(t.b, s.a, s.b));
                if m <= slack {
                    return None;
                }
                continue;
            }
            let ts = w.cross(q) / den;
            let tt = w.cross(r) / den;
            let et = tol.endpoint;
            let near = |x: f64| x > -et && x < 1.0 + et;
            if !(near(ts) && near(tt)) {
                continue;
            }
            if ts < et || ts > 1.0 - et || tt < et || tt > 1.0 - et {
                return None;
            }
            let ds = depth[s.comp][s.idx] * (1.0 - ts) + depth[s.comp][(s.idx + 1) % n] * ts;
            let nt = link.components[t.comp].len();
            let dt = depth[t.comp][t.idx] * (1.0 - tt) + depth[t.comp][(t.idx + 1) % nt] * tt;
            if (ds - dt).abs() < tol.depth {
                return None;
            }
            let s_over = ds > dt;
            let (over_dir, under_dir) = if s_over { (r, q) } else { (q, r) };
            let sign = if over_dir.cross(under_dir) > 0.0 { 1 } else { -1 };
            out.push(RawCrossing {
                a: (s.comp, s.idx, ts),
                b: (t.comp, t.idx, tt),
                a_over: s_over,
                sign,
                at: s.a + r * ts,
            });
        }
        active.push(j);
    }

    let mut pts: Vec<(Point2, usize)> = out.iter().enumerate().map(|(i, c)| (c.at, i)).collect();
    pts.sort_by(|a, b| a.0.x.partial_cmp(&b.0.x).unwrap());
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[j].0.x - pts[i].0.x > slack {
                break;
            }
            if (pts[j].0 - pts[i].0).norm() <= slack {
                return None;
            }
        }
    }
    Some((flat, out))
}

fn assemble(flat: Vec<Vec<Point2>>, raw: Vec<RawCrossing>, k: usize) -> LinkDiagram {
    // order passages along each component
    let mut per_comp: Vec<Vec<(usize, f64, usize, bool)>> = vec![Vec::new(); k];
    for (x, c) in raw.iter().enumerate() {
        per_comp[c.a.0].push((c.a.1, c.a.2, x, c.a_over));
        per_comp[c.b.0].push((c.b.1, c.b.2, x, !c.a_over));
    }
    let mut components = Vec::with_capacity(k);
    let mut sites = Vec::with_capacity(k);
    for list in per_comp.iter_mut() {
        list.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap());
        components.push(list.iter().map(|&(_, _, x, over)| Passage { crossing: x, over }).collect());
        sites.push(list.iter().map(|&(segment, t, _, _)| PassageSite { segment, t }).collect());
    }
    let crossings = raw.iter().map(|c| Crossing { label: 0, sign: c.sign }).collect();
    let d = LinkDiagram { crossings, components, geometry: Some(DiagramGeometry { curves: flat, sites }) };
    d.canonical_labels()
}

/// Projects `link` along `direction` (the viewer sits at `+direction`, so
/// larger depth is over). When the direction is not generic, nearby
/// directions are drawn from a seeded generator until one is.
pub fn project(link: &PLLink, direction: Point3, seed: u64) -> Result<LinkDiagram> {
    project_with(link, direction, seed, &GenericityTolerances::default()).map(|(d, _)| d)
}

/// As [`project`], also returning the direction actually used.
pub fn project_with(
    link: &PLLink,
    direction: Point3,
    seed: u64,
    tol: &GenericityTolerances,
) -> Result<(LinkDiagram, Point3)> {
    link.check_structure()?;
    if !(direction.norm() > 0.0) || !direction.is_finite() {
        return Err(Error::Argument("projection direction must be a nonzero finite vector".into()));
    }
    let base = direction.normalized();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_PROJECTION_ATTEMPTS {
        let d = if attempt == 0 {
            base
        } else {
            let spread = 1e-3 * (1.5f64).powi(attempt as i32);
            let jitter = p3(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            (base + jitter * spread).normalized()
        };
        if let Some((flat, raw)) = try_direction(link, d, tol) {
            return Ok((assemble(flat, raw, link.components.len()), d));
        }
    }
    Err(Error::Projection { attempts: MAX_PROJECTION_ATTEMPTS })
}

/// Pairwise linking numbers and per-component writhes from one projection.
pub fn linking_numbers(link: &PLLink, direction: Point3, seed: u64) -> Result<Vec<Vec<i64>>> {
    let d = project(link, direction, seed)?;
    let k = link.components.len();
    let mut m = vec![vec![0; k]; k];
    for i in 0..k {
        m[i][i] = d.writhe(i)?;
        for j in i + 1..k {
            let l = d.linking_number(i, j)?;
            m[i][j] = l;
            m[j][i] = l;
        }
    }
    Ok(m)
}
