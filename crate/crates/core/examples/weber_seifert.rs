//! Reads the duet/quintet description of the 142-crossing link, traces the
//! faces of its projection and prints its Gauss code and linking matrix.

use std::time::Instant;

use gemlink::codecs::{dq_to_diagram, dq_to_gauss, dq_to_map, linking_matrix, parse_dq, serialize_gauss};

fn main() -> gemlink::Result<()> {
    let t = Instant::now();
    let file = parse_dq(include_str!("../data/weber_seifert.dq"))?;
    let map = dq_to_map(&file)?;
    let faces = map.trace_faces()?.len();
    println!(
        "{} crossings, {} components: V = {}, E = {}, F = {faces}, genus {} ({:?})",
        file.crossing_count(),
        file.component_count(),
        map.vertex_count(),
        map.edge_count(),
        map.genus()?,
        t.elapsed()
    );
    let d = dq_to_diagram(&file)?;
    print!("{}", linking_matrix(&d, None)?.to_csv());
    println!("{}", serialize_gauss(&dq_to_gauss(&file)?));
    Ok(())
}
