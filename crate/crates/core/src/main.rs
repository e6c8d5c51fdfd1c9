use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gemlink::pipeline::{self, GaussOptions, PipelineConfig};
use gemlink::tutte::Solver;

#[derive(Parser)]
#[command(name = "gemlink", version, about = "Wings, cones and framed links from gem move logs and link diagrams")]
struct Cli {
    /// Convergence tolerance for the Tutte solver.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tolerance: f64,
    /// Iteration cap for the iterative solver (default 50 per vertex).
    #[arg(long, global = true)]
    max_iters: Option<usize>,
    /// Multiplier applied to nervure edge weights.
    #[arg(long, global = true, default_value_t = 1)]
    weight_multiplier: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = SolverArg::Direct)]
    solver: SolverArg,
    #[arg(short, long, global = true, default_value = "out")]
    output_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Direct,
    Iterative,
}

#[derive(Subcommand)]
enum Command {
    /// Draw both wings of a move log and build the cone complex over them.
    Wings { movelog: PathBuf },
    /// Cone an apex over a polyline given as JSON.
    Cone { input: PathBuf },
    /// Midpoint placements for a tail blow-up given as JSON.
    BlowupPoints { input: PathBuf },
    /// Project a link (polylines or cylinders JSON) to a Gauss code, linking matrix and SVG.
    Link { input: PathBuf },
    /// Validate a duet/quintet file and report its invariants.
    Dq { input: PathBuf },
    /// Check a Gauss code for planarity; optionally frame and realize it.
    Gauss {
        input: PathBuf,
        /// Comma-separated target framings, one per component.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        frame: Option<Vec<i64>>,
        /// Write a 3D realization and its vertical cylinders.
        #[arg(long)]
        realize: bool,
    },
    /// Shortcut a link's vertices without changing its linking numbers.
    Simplify { input: PathBuf },
    /// Check a link's segment count against 12 n^2.
    CheckBounds {
        input: PathBuf,
        #[arg(short)]
        n: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = PipelineConfig {
        tolerance: cli.tolerance,
        max_iters: cli.max_iters,
        weight_multiplier: cli.weight_multiplier,
        seed: cli.seed,
        solver: match cli.solver {
            SolverArg::Direct => Solver::Direct,
            SolverArg::Iterative => Solver::Iterative,
        },
        output_dir: cli.output_dir,
    };
    let mut within_bound = true;
    let result = cfg.validate().and_then(|()| match &cli.command {
        Command::Wings { movelog } => pipeline::cmd_wings(movelog, &cfg),
        Command::Cone { input } => pipeline::cmd_cone(input, &cfg),
        Command::BlowupPoints { input } => pipeline::cmd_blowup_points(input, &cfg),
        Command::Link { input } => pipeline::cmd_link(input, &cfg),
        Command::Dq { input } => pipeline::cmd_dq(input, &cfg),
        Command::Gauss { input, frame, realize } => {
            pipeline::cmd_gauss(input, &GaussOptions { frame: frame.clone(), realize: *realize }, &cfg)
        }
        Command::Simplify { input } => pipeline::cmd_simplify(input, &cfg),
        Command::CheckBounds { input, n } => pipeline::cmd_check_bounds(input, *n).map(|(ok, rep)| {
            within_bound = ok;
            rep
        }),
    });
    match result {
        Ok(rep) => {
            print!("{rep}");
            if within_bound {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 3 })
        }
    }
}
