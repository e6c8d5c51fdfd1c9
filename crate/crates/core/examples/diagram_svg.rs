//! Projects a random three-component link and prints its diagram as SVG,
//! under strands broken at each crossing.
//!
//! cargo run --example diagram_svg > diagram.svg

use gemlink::geom3::p3;
use gemlink::linkproj::{diagram_svg, project, random_link};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gemlink::Result<()> {
    let link = random_link(&mut ChaCha8Rng::seed_from_u64(5), 3, 40);
    let d = project(&link, p3(0.1, -0.2, 1.0), 0)?;
    eprintln!("{} crossings", d.crossing_count());
    print!("{}", diagram_svg(&d)?);
    Ok(())
}
