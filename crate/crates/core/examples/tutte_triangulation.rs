//! Tutte drawing of a random planar triangulation with its outer triangle
//! pinned, solved both directly and by relaxation.

use std::collections::BTreeMap;
use std::time::Instant;

use gemlink::geom3::p2;
use gemlink::planar_map::random_triangulation;
use gemlink::tutte::{tutte_embed, verify_rectilinear, EdgeWeights, Solver, TutteOptions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gemlink::Result<()> {
    let v: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(500);
    let map = random_triangulation(v, &mut ChaCha8Rng::seed_from_u64(7));
    let fixed = BTreeMap::from([(0, p2(0.0, 0.0)), (1, p2(1.0, 0.0)), (2, p2(0.5, 0.9))]);
    for solver in [Solver::Direct, Solver::Iterative] {
        let t = Instant::now();
        let opts = TutteOptions { solver, tol: 1e-9, max_iters: Some(200 * v) };
        match tutte_embed(&map, &EdgeWeights::unit(), &fixed, opts) {
            Ok(emb) => {
                let report = verify_rectilinear(&map, &emb);
                println!(
                    "{solver:?}: {} vertices, residual {:.2e}, rectilinear {}, {:?}",
                    map.vertex_count(),
                    emb.residual,
                    report.ok,
                    t.elapsed()
                );
            }
            Err(e) => println!("{solver:?}: {e}"),
        }
    }
    Ok(())
}
