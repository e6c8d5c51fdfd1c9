//! Parses a Gauss code, decides planarity, frames it with curls and
//! compares codes up to relabeling.

use gemlink::codecs::{
    blackboard_frame, equivalent_up_to_relabeling, from_diagram, linking_matrix, parse_gauss, realizable,
    serialize_gauss, to_diagram,
};

fn main() -> gemlink::Result<()> {
    let code = parse_gauss(include_str!("../data/r524.gauss"))?;
    println!("{} components, {} crossings", code.components.len(), code.crossing_count());
    println!("realizable: {}", realizable(&code)?);

    let d = to_diagram(&code)?;
    let m = linking_matrix(&d, None)?;
    print!("linking matrix, writhes on the diagonal:\n{}", m.to_csv());

    let framed = blackboard_frame(&d, &[-3, -3, -3])?;
    println!("framed: {}", serialize_gauss(&from_diagram(&framed)));

    let renamed = parse_gauss("((-3,+2,+6,-7),(-1,-2,+3,+1,-5,+4),(+5,-4,+7,-6))")?;
    println!("same up to relabeling: {}", equivalent_up_to_relabeling(&code, &renamed));

    for text in ["((+1,-1))", "((+1,+2,-1,-2))", "((+1,+2,+3,+4,+5,-1,-4,-5,-2,-3))"] {
        println!("{text}: realizable {}", realizable(&parse_gauss(text)?)?);
    }
    Ok(())
}
