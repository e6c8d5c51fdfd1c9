use gemlink::codecs::{from_diagram, serialize_gauss};
use gemlink::geom3::{p3, Point3};
use gemlink::linkproj::{
    diagram_svg, gauss_linking_integral, linking_numbers, project, random_link, realize, Cylinder, PLLink,
    RANDOM_LINK_CLEARANCE,
};
use gemlink::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn circle(center: Point3, r: f64, plane: usize, n: usize) -> Vec<Point3> {
    (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            let (a, b) = (r * t.cos(), r * t.sin());
            match plane {
                0 => p3(center.x + a, center.y + b, center.z),
                _ => p3(center.x + a, center.y, center.z + b),
            }
        })
        .collect()
}

fn hopf() -> PLLink {
    PLLink::new(vec![circle(p3(0.0, 0.0, 0.0), 1.0, 0, 16), circle(p3(1.0, 0.0, 0.0), 1.0, 1, 16)])
}

#[test]
fn hopf_link() {
    let link = hopf();
    link.validate(0.05).unwrap();
    let g = gauss_linking_integral(&link.components[0], &link.components[1], 0.05).unwrap();
    assert!((g.abs() - 1.0).abs() < 1e-6, "{g}");
    let d = project(&link, p3(0.1, 0.2, 1.0), 0).unwrap();
    assert_eq!(d.crossing_count(), 2);
    assert_eq!(d.linking_number(0, 1).unwrap() as f64, g.round());
    let svg = diagram_svg(&d).unwrap();
    assert!(svg.starts_with("<svg") && svg.matches("<path").count() >= 2);
}

#[test]
fn touching_curves_are_rejected() {
    let a = circle(p3(0.0, 0.0, 0.0), 1.0, 0, 12);
    let b = circle(p3(2.0, 0.0, 0.0), 1.0, 0, 12);
    let link = PLLink::new(vec![a, b]);
    assert!(matches!(link.validate(0.01), Err(Error::Proximity(_))));
}

#[test]
fn cylinder_band_frames_its_core() {
    let core = circle(p3(0.0, 0.0, 0.0), 2.0, 0, 24);
    let cyl = Cylinder::band(&core, p3(0.0, 0.0, 0.1));
    assert_eq!(cyl.framing(0).unwrap(), 0);
    let curves = cyl.curves().unwrap();
    assert_eq!(curves.medial.len(), 48);
    assert!(curves.boundary.iter().all(|b| b.len() == 24));
}

fn direction(rng: &mut ChaCha8Rng) -> Point3 {
    p3(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(0.3..1.0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn linking_matrix_is_symmetric(seed in any::<u64>(), k in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let link = random_link(&mut rng, k, 30);
        let m = linking_numbers(&link, direction(&mut rng), seed).unwrap();
        for i in 0..k {
            for j in 0..k {
                prop_assert_eq!(m[i][j], m[j][i]);
            }
        }
    }

    #[test]
    fn reversing_a_component_negates_its_row(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let link = random_link(&mut rng, 3, 30);
        let dir = direction(&mut rng);
        let m = linking_numbers(&link, dir, seed).unwrap();
        let r = linking_numbers(&link.reversed(1), dir, seed).unwrap();
        prop_assert_eq!(r[0][1], -m[0][1]);
        prop_assert_eq!(r[1][2], -m[1][2]);
        prop_assert_eq!(r[0][2], m[0][2]);
        let d = project(&link, dir, seed).unwrap();
        prop_assert_eq!(d.reversed(1).unwrap().linking_number(0, 1).unwrap(), -m[0][1]);
    }

    #[test]
    fn projection_direction_does_not_matter(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let link = random_link(&mut rng, 2, 40);
        let g = gauss_linking_integral(&link.components[0], &link.components[1], RANDOM_LINK_CLEARANCE).unwrap();
        for k in 0..10 {
            let lk = project(&link, direction(&mut rng), k).unwrap().linking_number(0, 1).unwrap();
            prop_assert_eq!(lk as f64, g.round());
        }
    }

    #[test]
    fn realized_diagrams_project_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let link = random_link(&mut rng, 2, 24);
        let d = project(&link, direction(&mut rng), seed).unwrap();
        let r = realize(&d).unwrap();
        let back = project(&r, p3(0.013, -0.007, 1.0), 0).unwrap();
        prop_assert_eq!(back.crossing_count(), d.crossing_count());
        prop_assert_eq!(back.linking_number(0, 1).unwrap(), d.linking_number(0, 1).unwrap());
        for c in 0..2 {
            prop_assert_eq!(back.writhe(c).unwrap(), d.writhe(c).unwrap());
        }
        prop_assert_eq!(serialize_gauss(&from_diagram(&back)).len(), serialize_gauss(&from_diagram(&d)).len());
    }
}
