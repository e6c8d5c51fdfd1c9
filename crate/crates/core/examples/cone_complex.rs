//! Cones over wing edges: a single fan, then the full complex over both
//! lifted wings of the shipped move log, checked for improper intersections.

use gemlink::geom3::{blowup_points, build_h1_diamond, cone, p3, AxisFrame, BlowupVariant};
use gemlink::planar_map::{MoveLog, Side};
use gemlink::tutte::{embed_wing, lift_to_halfplane, TutteOptions};

fn main() -> gemlink::Result<()> {
    let fan = cone(p3(0.0, 0.0, 1.0), &[p3(-1.0, 0.0, 0.0), p3(0.0, 1.0, 0.0), p3(1.0, 0.0, 0.0)])?;
    println!("fan: {} triangles", fan.len());

    let z2 = p3(0.0, -2.0, 0.0);
    let chi = [p3(1.0, 0.0, 1.0), p3(1.0, 0.0, 2.0), p3(1.0, 0.0, 3.0)];
    let omega = [p3(2.0, 0.0, 1.0), p3(2.0, 0.0, 2.0), p3(2.0, 0.0, 3.0)];
    for variant in [BlowupVariant::Plain, BlowupVariant::Refined, BlowupVariant::Bump] {
        let pts = blowup_points(z2, &chi, &omega, variant)?;
        let alphas: Vec<String> = pts.iter().map(|b| format!("({:.2},{:.2},{:.2})", b.alpha.x, b.alpha.y, b.alpha.z)).collect();
        println!("{variant:?} alphas: {}", alphas.join(" "));
    }

    let log = MoveLog::parse(include_str!("../data/synthetic_n12.movelog"))?;
    let st = log.final_state()?;
    let mut lifts = Vec::new();
    for side in [Side::Left, Side::Right] {
        let emb = embed_wing(&st, side, 1, TutteOptions::default())?;
        lifts.push(lift_to_halfplane(st.side(side), &emb, side)?);
    }
    let frame = AxisFrame::standard(st.n, lifts[0][&st.root(Side::Left)], lifts[1][&st.root(Side::Right)]);
    let cx = build_h1_diamond(&st, &lifts[0], &lifts[1], &frame)?;
    println!("complex over n = {}: {} triangles, no improper pairs", st.n, cx.simplices2.len());
    Ok(())
}
