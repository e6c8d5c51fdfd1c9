//! Replays the shipped move log, draws both wings with nervure weights and
//! writes the SVGs next to the build output.

use gemlink::planar_map::{MoveLog, Side};
use gemlink::tutte::{embed_wing, embedding_svg, verify_rectilinear, TutteOptions};

fn main() -> gemlink::Result<()> {
    let text = include_str!("../data/synthetic_n12.movelog");
    let log = MoveLog::parse(text)?;
    let states = log.replay()?;
    for (step, st) in states.iter().enumerate() {
        let edges: Vec<usize> = [Side::Left, Side::Right].iter().map(|&s| st.side(s).edge_count()).collect();
        println!("after {step:>2} moves: left {} edges, right {} edges", edges[0], edges[1]);
    }
    let last = states.last().unwrap();
    let out = std::env::temp_dir();
    for (side, name) in [(Side::Left, "left"), (Side::Right, "right")] {
        let emb = embed_wing(last, side, 2, TutteOptions::default())?;
        let ok = verify_rectilinear(last.side(side), &emb).ok;
        let path = out.join(format!("wing_{name}.svg"));
        std::fs::write(&path, embedding_svg(last.side(side), &emb))?;
        println!("{name}: rectilinear {ok}, residual {:.1e}, {}", emb.residual, path.display());
    }
    Ok(())
}
