use super::pllink::segment_distance;
use crate::error::{Error, Result};
use crate::geom3::Point3;

/// Signed solid-angle contribution of segment pair `(p1 p2, p3 p4)` divided
/// by 4π, in closed form.
fn segment_pair(p1: Point3, p2: Point3, p3: Point3, p4: Point3) -> f64 {
    let r13 = p3 - p1;
    let r14 = p4 - p1;
    let r23 = p3 - p2;
    let r24 = p4 - p2;
    let r12 = p2 - p1;
    let r34 = p4 - p3;
    let unit = |a: Point3, b: Point3| {
        let c = a.cross(b);
        let n = c.norm();
        if n == 0.0 {
            None
        } else {
            Some(c / n)
        }
    };
    let (Some(n1), Some(n2), Some(n3), Some(n4)) = (unit(r13, r14), unit(r14, r24), unit(r24, r23), unit(r23, r13)) else {
        return 0.0;
    };
    let asin = |x: f64| x.clamp(-1.0, 1.0).asin();
    let omega = asin(n1.dot(n2)) + asin(n2.dot(n3)) + asin(n3.dot(n4)) + asin(n4.dot(n1));
    let s = r34.cross(r12).dot(r13);
    if s == 0.0 {
        return 0.0;
    }
    omega * s.signum() / (4.0 * std::f64::consts::PI)
}

/// Gauss linking integral of two closed polylines, evaluated exactly per
/// segment pair. Fails if the curves come within `clearance` of each other.
pub fn gauss_linking_integral(c1: &[Point3], c2: &[Point3], clearance: f64) -> Result<f64> {
    let seg = |c: &[Point3], i: usize| (c[i], c[(i + 1) % c.len()]);
    let mut total = 0.0;
    for i in 0..c1.len() {
        let (a, b) = seg(c1, i);
        for j in 0..c2.len() {
            let (c, d) = seg(c2, j);
            if segment_distance(a, b, c, d) <= clearance {
                return Err(Error::Proximity(format!("segment {i} of the first curve touches segment {j} of the second")));
            }
            total += segment_pair(a, b, c, d);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3::p3;
    use crate::linkproj::project::tests::{circle, hopf_link};
    use crate::linkproj::{project, PLLink};

    #[test]
    fn split_is_zero() {
        let a = circle(p3(0.0, 0.0, 0.0), 1.0, 10, 0);
        let b = circle(p3(4.0, 0.0, 0.0), 1.0, 10, 1);
        let g = gauss_linking_integral(&a, &b, 1e-9).unwrap();
        assert!(g.abs() < 1e-6, "{g}");
    }

    #[test]
    fn hopf_matches_projection_sign() {
        let link = hopf_link();
        let g = gauss_linking_integral(&link.components[0], &link.components[1], 1e-9).unwrap();
        assert!((g.abs() - 1.0).abs() < 1e-6, "{g}");
        let lk = project(&link, p3(0.2, 0.1, 1.0), 0).unwrap().linking_number(0, 1).unwrap();
        assert_eq!(g.round() as i64, lk);
        let rev = link.reversed(1);
        let g2 = gauss_linking_integral(&rev.components[0], &rev.components[1], 1e-9).unwrap();
        assert!((g + g2).abs() < 1e-6);
    }

    #[test]
    fn quadrature_agrees() {
        // midpoint-rule double integral of the Gauss kernel on finely split segments
        let link = PLLink::new(vec![circle(p3(0.0, 0.0, 0.0), 1.0, 6, 0), circle(p3(0.9, 0.1, 0.0), 1.1, 7, 1)]);
        let fine = |c: &[Point3], k: usize| -> Vec<(Point3, Point3)> {
            (0..c.len())
                .flat_map(|i| {
                    let (a, b) = (c[i], c[(i + 1) % c.len()]);
                    (0..k).map(move |s| (a.lerp(b, (s as f64 + 0.5) / k as f64), (b - a) / k as f64))
                })
                .collect()
        };
        let (f1, f2) = (fine(&link.components[0], 200), fine(&link.components[1], 200));
        let mut q = 0.0;
        for &(x, dx) in &f1 {
            for &(y, dy) in &f2 {
                let r = x - y;
                q += r.dot(dx.cross(dy)) / r.norm().powi(3);
            }
        }
        q /= 4.0 * std::f64::consts::PI;
        let g = gauss_linking_integral(&link.components[0], &link.components[1], 1e-9).unwrap();
        assert!((q - g).abs() < 1e-3, "quadrature {q} vs closed form {g}");
    }

    #[test]
    fn touching_is_proximity_error() {
        let a = circle(p3(0.0, 0.0, 0.0), 1.0, 8, 0);
        let b = circle(p3(2.0, 0.0, 0.0), 1.0, 8, 0);
        assert!(matches!(gauss_linking_integral(&a, &b, 1e-9), Err(Error::Proximity(_))));
    }
}
