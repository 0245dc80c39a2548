//! The `graphgeom` command line: loaders, generators, per-vertex geometry
//! tables, and the theorem verifiers, with text or JSON reports.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a verification failed,
//! 2 = input error (malformed file, bad flag, unmet precondition).

use clap::{Parser, Subcommand};

mod commands;
pub mod report;

pub use report::{Entry, Report, Value, Verdict};

#[derive(Parser, Debug)]
#[command(
    name = "graphgeom",
    version,
    about = "Exact discrete differential geometry on finite simple graphs",
    long_about = "Computes clique complexes, curvature, Poincaré-Hopf indices, inductive \
                  dimension, orientations, Betti numbers, and discrete-form calculus with \
                  exact rational arithmetic, and mechanically verifies the Gauss-Bonnet, \
                  Poincaré-Hopf, and Green-Stokes identities.\n\nGraph files: `p <n>` then \
                  `e <u> <v>` lines; `#` comments; `-` reads standard input."
)]
pub struct Cli {
    /// Emit reports as JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, size, f-vector, Euler characteristic, and dimension.
    Info {
        /// Graph file (`-` for standard input).
        file: String,
    },
    /// Per-vertex curvature and the Gauss-Bonnet identity Σ K(v) = χ.
    Curvature {
        /// Graph file (`-` for standard input).
        file: String,
        /// Corrupt one curvature before checking (failure-path hook).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Poincaré-Hopf indices of an injective function, Σ i_f(v) = χ.
    Index {
        /// Graph file (`-` for standard input).
        file: String,
        /// Function file: one `<vertex> <integer or p/q>` line per vertex.
        #[arg(long, conflicts_with = "seed")]
        values: Option<String>,
        /// Draw a seeded random injective function instead.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Betti numbers and the Euler-Poincaré identity Σ(−1)^k b_k = χ.
    Betti {
        /// Graph file (`-` for standard input).
        file: String,
    },
    /// Classify vertices as interior or boundary points at dimension k.
    Boundary {
        /// Graph file (`-` for standard input).
        file: String,
        /// Dimension to classify at (default: dimension(g) if integral).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Find an orientation of the top-level simplices, or a witness cycle
    /// proving none exists.
    Orient {
        /// Graph file (`-` for standard input).
        file: String,
        /// Top dimension (default: dimension(g) if integral).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Verify Green-Stokes ⟨df, G⟩ = ⟨f, ∂G⟩ on the oriented volume chain.
    Stokes {
        /// Graph file (`-` for standard input).
        file: String,
        /// Form file: `<v0> ... <vk> <p/q>` lines at level dim−1.
        #[arg(long, conflicts_with = "random")]
        form: Option<String>,
        /// Seed for a random integer form instead of a file.
        #[arg(long, default_value_t = 0)]
        random: u64,
        /// Volume dimension (default: dimension(g) if integral).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Decide whether the graph is sphere-like in the Reeb sense, by
    /// exhausting injective orderings (small graphs only).
    Spherelike {
        /// Graph file (`-` for standard input).
        file: String,
        /// Refuse graphs (or spheres) larger than this order.
        #[arg(long, default_value_t = 8)]
        limit: usize,
    },
    /// Generate a named family member as a graph file on standard output.
    Gen {
        /// Family name; run with an unknown name to list the registry.
        name: String,
        /// Integer parameters, e.g. `cycle 7` or `erdos_renyi 12 1 2`.
        params: Vec<usize>,
        /// Seed (random families only).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run every identity verifier on one graph and aggregate the verdict.
    Verify {
        /// Graph file (`-` for standard input).
        file: String,
        /// How many random functions to test Poincaré-Hopf with.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
    },
}

/// Execute a parsed invocation; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match commands::execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
