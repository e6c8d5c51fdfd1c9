//! Realizes the 142-crossing diagram as a PL link, shortcuts it and checks
//! that the linking matrix survives and the segment count stays below 12n^2.

use gemlink::codecs::{dq_to_diagram, linking_matrix, parse_dq};
use gemlink::geom3::{p3, shortcut};
use gemlink::linkproj::{check_size_bound, project, realize};

fn main() -> gemlink::Result<()> {
    let d = dq_to_diagram(&parse_dq(include_str!("../data/weber_seifert.dq"))?)?;
    let before = linking_matrix(&d, None)?;
    let link = realize(&d)?;
    let short = shortcut(&link, &[]);
    let after = project(&short, p3(0.3, -0.1, 1.0), 1)?;
    let k = d.component_count();
    let same = (0..k).all(|i| (0..k).all(|j| i == j || after.linking_number(i, j).unwrap() == before.entries[i][j]));
    println!("segments {} -> {}, linking numbers preserved: {same}", link.segment_count(), short.segment_count());
    println!("within 12n^2 for n = 25: {}", check_size_bound(&short, 25));
    Ok(())
}
