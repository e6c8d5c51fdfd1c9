//! Prints a seeded random move log and checks it replays cleanly.
//!
//! cargo run --example move_log -- [n] [seed]

use gemlink::planar_map::{random_move_log, Side};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gemlink::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(12) as u32;
    let seed = args.get(1).copied().unwrap_or(524);
    let log = random_move_log(n, &mut ChaCha8Rng::seed_from_u64(seed))?;
    print!("{log}");
    let states = log.replay()?;
    let last = states.last().unwrap();
    for side in [Side::Left, Side::Right] {
        last.check_nervure_tree(side)?;
        eprintln!(
            "{side:?}: {} moves, {} edges (bound {})",
            log.moves_on(side),
            last.side(side).edge_count(),
            6 * n - 4
        );
    }
    Ok(())
}
