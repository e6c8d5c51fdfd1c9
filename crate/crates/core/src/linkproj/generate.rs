use rand::Rng;

use crate::geom3::{p3, Point3};

use super::PLLink;

/// Noise-free distance kept between components of a [`random_link`].
pub const RANDOM_LINK_CLEARANCE: f64 = 0.05;

fn rotate(p: Point3, (a, b, c): (f64, f64, f64)) -> Point3 {
    let (sa, ca) = a.sin_cos();
    let (sb, cb) = b.sin_cos();
    let (sc, cc) = c.sin_cos();
    let p = p3(p.x, ca * p.y - sa * p.z, sa * p.y + ca * p.z);
    let p = p3(cb * p.x + sb * p.z, p.y, -sb * p.x + cb * p.z);
    p3(cc * p.x - sc * p.y, sc * p.x + cc * p.y, p.z)
}

/// Random link with `components` (2 or more) polygons of at most
/// `max_vertices` vertices each. The first is a noisy circle; every other
/// one is a noisy torus curve winding a random number of times (between -2
/// and 2) around it on its own tube, so the pairwise linking numbers vary.
/// The whole link is rigidly rotated at random. Noise is kept well below
/// the tube spacing, so components stay at least
/// [`RANDOM_LINK_CLEARANCE`] apart.
pub fn random_link<R: Rng>(rng: &mut R, components: usize, max_vertices: usize) -> PLLink {
    assert!(components >= 2 && max_vertices >= 12);
    let tau = std::f64::consts::TAU;
    let tubes = components - 1;
    let noise = 0.08 / tubes as f64;
    let jitter = |rng: &mut R, p: Point3| {
        p + p3(rng.gen_range(-noise..noise), rng.gen_range(-noise..noise), rng.gen_range(-noise..noise))
    };
    let mut comps = Vec::new();
    let n0 = rng.gen_range(12..=max_vertices);
    comps.push(
        (0..n0)
            .map(|i| {
                let t = tau * i as f64 / n0 as f64;
                jitter(rng, p3(2.0 * t.cos(), 2.0 * t.sin(), 0.0))
            })
            .collect(),
    );
    for k in 0..tubes {
        let r = 0.8 * (k + 1) as f64 / tubes as f64;
        let w: i32 = rng.gen_range(-2..=2);
        // enough vertices per meridian turn to keep the tube clear of the core
        let n = rng.gen_range((12 + 6 * w.unsigned_abs() as usize).min(max_vertices)..=max_vertices);
        let phase = rng.gen_range(0.0..tau);
        comps.push(
            (0..n)
                .map(|i| {
                    let t = tau * i as f64 / n as f64;
                    let s = w as f64 * t + phase;
                    let rho = 2.0 + r * s.cos();
                    jitter(rng, p3(rho * t.cos(), rho * t.sin(), r * s.sin()))
                })
                .collect(),
        );
    }
    let angles = (rng.gen_range(0.0..tau), rng.gen_range(0.0..tau), rng.gen_range(0.0..tau));
    let comps = comps.into_iter().map(|c: Vec<Point3>| c.into_iter().map(|p| rotate(p, angles)).collect()).collect();
    PLLink::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_links_are_separated() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let link = random_link(&mut rng, 3, 40);
            assert!(link.components.iter().all(|c| c.len() <= 40));
            link.validate(RANDOM_LINK_CLEARANCE).unwrap();
        }
    }
}
