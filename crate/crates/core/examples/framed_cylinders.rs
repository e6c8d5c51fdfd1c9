//! Framings from cylinders. Reads the shipped cylinders and measures each
//! one; with `--regenerate` rebuilds them from the Gauss code by framing it
//! with curls, realizing it in 3-space and banding each component
//! vertically, printing the JSON instead.

use gemlink::codecs::{blackboard_frame, linking_matrix, parse_gauss, to_diagram};
use gemlink::linkproj::{framings_from_cylinders, realize, Cylinder};
use gemlink::pipeline::vertical_cylinders;
use serde::Deserialize;

#[derive(Deserialize)]
struct Fixture {
    cylinders: Vec<Cylinder>,
}

fn main() -> gemlink::Result<()> {
    if std::env::args().any(|a| a == "--regenerate") {
        let d = to_diagram(&parse_gauss(include_str!("../data/r524.gauss"))?)?;
        let link = realize(&blackboard_frame(&d, &[-3, -3, -3])?)?;
        let json = serde_json::json!({ "cylinders": vertical_cylinders(&link) });
        println!("{}", serde_json::to_string_pretty(&json)?);
        return Ok(());
    }
    let fx: Fixture = serde_json::from_str(include_str!("../data/r524_cylinders.json"))?;
    let link = framings_from_cylinders(&fx.cylinders, 0)?;
    println!("framings: {:?}", link.framing);
    let d = gemlink::linkproj::project(&link, gemlink::geom3::p3(0.2, 0.1, 1.0), 0)?;
    let f: Vec<i64> = link.framing.iter().map(|f| f.unwrap()).collect();
    print!("{}", linking_matrix(&d, Some(&f))?.to_csv());
    Ok(())
}
