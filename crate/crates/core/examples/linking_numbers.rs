//! Linking numbers of random two-component links by diagram sign sums in
//! several projection directions, against the Gauss integral.

use gemlink::geom3::p3;
use gemlink::linkproj::{gauss_linking_integral, project, random_link, RANDOM_LINK_CLEARANCE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> gemlink::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..8 {
        let link = random_link(&mut rng, 2, 40);
        let integral = gauss_linking_integral(&link.components[0], &link.components[1], RANDOM_LINK_CLEARANCE)?;
        let mut by_direction = Vec::new();
        for k in 0..5 {
            let dir = p3(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            by_direction.push(project(&link, dir, k)?.linking_number(0, 1)?);
        }
        println!("integral {integral:+.6}  diagrams {by_direction:?}");
    }
    Ok(())
}
