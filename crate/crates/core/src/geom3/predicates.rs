//! Orientation predicates with an exact rational fallback, and the closed
//! segment/triangle intersection tests built on them.
//!
//! Each predicate evaluates the determinant in double precision first. When
//! its magnitude is below `max(1e-12, forward error bound)` the sign is
//! recomputed exactly from the rational values of the inputs, so the returned
//! sign is always the sign of the exact determinant.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::point::{Point2, Point3};

const ABS_FILTER: f64 = 1e-12;
const EPS: f64 = f64::EPSILON;

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite coordinate")
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_f(x: f64) -> i8 {
    match x.partial_cmp(&0.0) {
        Some(Ordering::Greater) => 1,
        Some(Ordering::Less) => -1,
        _ => 0,
    }
}

/// Sign of `(b - a) x (c - a)`: +1 when `a, b, c` turn counterclockwise.
pub fn orient2d(a: Point2, b: Point2, c: Point2) -> i8 {
    let l = (b.x - a.x) * (c.y - a.y);
    let r = (b.y - a.y) * (c.x - a.x);
    let det = l - r;
    let bound = 4.0 * EPS * (l.abs() + r.abs());
    if det.abs() > ABS_FILTER.max(bound) {
        return sign_f(det);
    }
    let (ax, ay, bx, by, cx, cy) = (exact(a.x), exact(a.y), exact(b.x), exact(b.y), exact(c.x), exact(c.y));
    let d = (&bx - &ax) * (&cy - &ay) - (&by - &ay) * (&cx - &ax);
    sign_of(&d)
}

/// Sign of `det[b - a, c - a, d - a]`: +1 when `d` lies on the side of the
/// plane `abc` that `(b - a) x (c - a)` points to.
pub fn orient3d(a: Point3, b: Point3, c: Point3, d: Point3) -> i8 {
    let u = b - a;
    let v = c - a;
    let w = d - a;
    let t1 = u.x * (v.y * w.z - v.z * w.y);
    let t2 = u.y * (v.z * w.x - v.x * w.z);
    let t3 = u.z * (v.x * w.y - v.y * w.x);
    let det = t1 + t2 + t3;
    let perm = u.x.abs() * ((v.y * w.z).abs() + (v.z * w.y).abs())
        + u.y.abs() * ((v.z * w.x).abs() + (v.x * w.z).abs())
        + u.z.abs() * ((v.x * w.y).abs() + (v.y * w.x).abs());
    let bound = 8.0 * EPS * perm;
    if det.abs() > ABS_FILTER.max(bound) {
        return sign_f(det);
    }
    let ex = |p: Point3| [exact(p.x), exact(p.y), exact(p.z)];
    let (a, b, c, d) = (ex(a), ex(b), ex(c), ex(d));
    let u: Vec<BigRational> = (0..3).map(|i| &b[i] - &a[i]).collect();
    let v: Vec<BigRational> = (0..3).map(|i| &c[i] - &a[i]).collect();
    let w: Vec<BigRational> = (0..3).map(|i| &d[i] - &a[i]).collect();
    let det = &u[0] * (&v[1] * &w[2] - &v[2] * &w[1]) + &u[1] * (&v[2] * &w[0] - &v[0] * &w[2])
        + &u[2] * (&v[0] * &w[1] - &v[1] * &w[0]);
    sign_of(&det)
}

/// The three points lie on one line (exact).
pub fn collinear3(a: Point3, b: Point3, c: Point3) -> bool {
    let xy = |p: Point3| Point2 { x: p.x, y: p.y };
    let yz = |p: Point3| Point2 { x: p.y, y: p.z };
    let zx = |p: Point3| Point2 { x: p.z, y: p.x };
    orient2d(xy(a), xy(b), xy(c)) == 0 && orient2d(yz(a), yz(b), yz(c)) == 0 && orient2d(zx(a), zx(b), zx(c)) == 0
}

/// `c` lies on the closed segment `ab`, assuming the three points are collinear.
fn on_collinear_segment(a: Point2, b: Point2, c: Point2) -> bool {
    c.x >= a.x.min(b.x) && c.x <= a.x.max(b.x) && c.y >= a.y.min(b.y) && c.y <= a.y.max(b.y)
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect_2d(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let o1 = orient2d(a, b, c);
    let o2 = orient2d(a, b, d);
    let o3 = orient2d(c, d, a);
    let o4 = orient2d(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_collinear_segment(a, b, c))
        || (o2 == 0 && on_collinear_segment(a, b, d))
        || (o3 == 0 && on_collinear_segment(c, d, a))
        || (o4 == 0 && on_collinear_segment(c, d, b))
}

/// Closed triangle `abc` (2D, either orientation) contains `p`.
pub fn triangle_contains_2d(a: Point2, b: Point2, c: Point2, p: Point2) -> bool {
    let o = orient2d(a, b, c);
    if o == 0 {
        return segments_intersect_2d(a, b, p, p)
            || segments_intersect_2d(b, c, p, p)
            || segments_intersect_2d(a, c, p, p);
    }
    orient2d(a, b, p) * o >= 0 && orient2d(b, c, p) * o >= 0 && orient2d(c, a, p) * o >= 0
}

/// Index of the coordinate to drop when projecting the plane of `abc` to 2D.
fn drop_axis(a: Point3, b: Point3, c: Point3) -> usize {
    let n = (b - a).cross(c - a);
    let (x, y, z) = (n.x.abs(), n.y.abs(), n.z.abs());
    if x >= y && x >= z {
        0
    } else if y >= z {
        1
    } else {
        2
    }
}

fn flatten(p: Point3, axis: usize) -> Point2 {
    match axis {
        0 => Point2 { x: p.y, y: p.z },
        1 => Point2 { x: p.z, y: p.x },
        _ => Point2 { x: p.x, y: p.y },
    }
}

/// Closed segment `pq` meets closed triangle `abc` (non-degenerate).
pub fn segment_meets_triangle(p: Point3, q: Point3, a: Point3, b: Point3, c: Point3) -> bool {
    let s1 = orient3d(a, b, c, p);
    let s2 = orient3d(a, b, c, q);
    if s1 == s2 && s1 != 0 {
        return false;
    }
    if s1 == 0 && s2 == 0 {
        let ax = drop_axis(a, b, c);
        let (p, q, a, b, c) = (flatten(p, ax), flatten(q, ax), flatten(a, ax), flatten(b, ax), flatten(c, ax));
        return triangle_contains_2d(a, b, c, p)
            || triangle_contains_2d(a, b, c, q)
            || segments_intersect_2d(p, q, a, b)
            || segments_intersect_2d(p, q, b, c)
            || segments_intersect_2d(p, q, c, a);
    }
    let t1 = orient3d(p, q, a, b);
    let t2 = orient3d(p, q, b, c);
    let t3 = orient3d(p, q, c, a);
    !((t1 > 0 || t2 > 0 || t3 > 0) && (t1 < 0 || t2 < 0 || t3 < 0))
}

/// Segment `vq`, starting at the triangle corner `v` of `(v, b, c)`, meets the
/// closed triangle at some point other than `v`.
pub fn segment_from_corner_enters_triangle(v: Point3, q: Point3, b: Point3, c: Point3) -> bool {
    if q == v || orient3d(v, b, c, q) != 0 {
        return false;
    }
    let ax = drop_axis(v, b, c);
    let (v, q, b, c) = (flatten(v, ax), flatten(q, ax), flatten(b, ax), flatten(c, ax));
    let o = orient2d(v, b, c);
    if o == 0 {
        return false;
    }
    orient2d(v, b, q) * o >= 0 && orient2d(v, q, c) * o >= 0
}

/// Two triangles, given by corner ids and coordinates, intersect in something
/// other than their common face (shared corners are recognised by id).
pub fn triangles_improper(ids1: [usize; 3], t1: [Point3; 3], ids2: [usize; 3], t2: [Point3; 3]) -> bool {
    let shared: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|&(i, j)| ids1[i] == ids2[j])
        .collect();
    match shared.len() {
        0 => {
            (0..3).any(|i| segment_meets_triangle(t1[i], t1[(i + 1) % 3], t2[0], t2[1], t2[2]))
                || (0..3).any(|i| segment_meets_triangle(t2[i], t2[(i + 1) % 3], t1[0], t1[1], t1[2]))
        }
        1 => {
            let (i, j) = shared[0];
            let v = t1[i];
            let (a1, b1) = (t1[(i + 1) % 3], t1[(i + 2) % 3]);
            let (a2, b2) = (t2[(j + 1) % 3], t2[(j + 2) % 3]);
            segment_meets_triangle(a1, b1, t2[0], t2[1], t2[2])
                || segment_meets_triangle(a2, b2, t1[0], t1[1], t1[2])
                || segment_from_corner_enters_triangle(v, a1, a2, b2)
                || segment_from_corner_enters_triangle(v, b1, a2, b2)
                || segment_from_corner_enters_triangle(v, a2, a1, b1)
                || segment_from_corner_enters_triangle(v, b2, a1, b1)
        }
        2 => {
            let (i0, j0) = shared[0];
            let (i1, _) = shared[1];
            let k1 = 3 - i0 - i1;
            let k2 = (0..3).find(|&j| !shared.iter().any(|&(_, s)| s == j)).unwrap();
            let (u, v) = (t1[i0], t1[i1]);
            debug_assert_eq!(t2[j0], u);
            let (w1, w2) = (t1[k1], t2[k2]);
            if orient3d(u, v, w1, w2) != 0 {
                return false;
            }
            let ax = drop_axis(u, v, w1);
            let (u, v, w1, w2) = (flatten(u, ax), flatten(v, ax), flatten(w1, ax), flatten(w2, ax));
            orient2d(u, v, w1) * orient2d(u, v, w2) >= 0
        }
        _ => true,
    }
}
