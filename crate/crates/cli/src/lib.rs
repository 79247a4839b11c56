//! The `sgtool` command line: argument parsing, dispatch and exit codes.
//!
//! [`run`] does all the work and returns the bytes to print, so tests can
//! drive the tool without spawning a process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sgraph::Limits;

mod report;
mod verbs;

pub use report::{Report, SCHEMA};

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    /// Tab-separated values; `matrix` only.
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "sgtool", version, about = "Analyses of signed graphs in the `sg 1` text format")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub caps: Caps,
    #[command(subcommand)]
    pub verb: Verb,
}

/// Overrides for the exponential-algorithm caps.
#[derive(Debug, Args)]
pub struct Caps {
    #[arg(long, global = true, env = "SGTOOL_MAX_EDGES")]
    pub max_edges: Option<usize>,
    #[arg(long, global = true)]
    pub max_lattice_edges: Option<usize>,
    #[arg(long, global = true)]
    pub max_matrix_tree_order: Option<usize>,
    #[arg(long, global = true)]
    pub max_ends: Option<usize>,
    #[arg(long, global = true)]
    pub max_oracle_order: Option<usize>,
    #[arg(long, global = true)]
    pub max_colorations: Option<u64>,
    #[arg(long, global = true)]
    pub max_iso_order: Option<usize>,
    #[arg(long, global = true)]
    pub max_frame_order: Option<usize>,
    #[arg(long, global = true)]
    pub max_stable_order: Option<usize>,
}

impl Caps {
    /// The limits to use, plus one warning per changed cap.
    fn limits(&self) -> (Limits, Vec<String>) {
        let mut lim = Limits::default();
        let mut warnings = Vec::new();
        let mut set = |name: &str, slot: &mut u64, value: Option<u64>| {
            if let Some(v) = value {
                if v != *slot {
                    warnings.push(format!(
                        "warning: cap --{name} changed from {} to {v}; exponential algorithms are bounded by it",
                        *slot
                    ));
                }
                *slot = v;
            }
        };
        macro_rules! cap {
            ($field:ident, $name:literal) => {{
                let mut slot = lim.$field as u64;
                set($name, &mut slot, self.$field.map(|v| v as u64));
                lim.$field = slot as _;
            }};
        }
        cap!(max_edges, "max-edges");
        cap!(max_lattice_edges, "max-lattice-edges");
        cap!(max_matrix_tree_order, "max-matrix-tree-order");
        cap!(max_ends, "max-ends");
        cap!(max_oracle_order, "max-oracle-order");
        cap!(max_colorations, "max-colorations");
        cap!(max_iso_order, "max-iso-order");
        cap!(max_frame_order, "max-frame-order");
        cap!(max_stable_order, "max-stable-order");
        (lim, warnings)
    }
}

/// A graph file; `-` reads standard input.
#[derive(Debug, Args)]
pub struct Input {
    pub file: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Order, size, edge kinds, circles, blocks and a spanning forest.
    Info {
        #[command(flatten)]
        input: Input,
        /// List every circle with its sign.
        #[arg(long)]
        circles: bool,
        /// Show a spanning forest and its fundamental circles.
        #[arg(long)]
        forest: bool,
        /// List the blocks.
        #[arg(long)]
        blocks: bool,
    },
    /// Balance, `b`, `V0` and the balanced components.
    Balance {
        #[command(flatten)]
        input: Input,
        /// Edge ids of a subset to analyse instead of all of `E`.
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<String>>,
    },
    /// Switch a vertex set, or compare with another graph up to switching.
    Switch {
        #[command(flatten)]
        input: Input,
        /// 1-based vertices to switch.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        /// Compare with this graph instead of switching.
        #[arg(long, conflicts_with = "set")]
        to: Option<PathBuf>,
        /// With `--to`, also allow relabelling vertices.
        #[arg(long, requires = "to")]
        iso: bool,
    },
    /// Total, partial and non-balancing edges; balancing vertices.
    BalancingEdges {
        #[command(flatten)]
        input: Input,
        /// Also search for a minimum balancing set.
        #[arg(long)]
        minimum: bool,
    },
    /// Delete edges.
    Delete {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
    },
    /// Contract edges (after deleting `--delete`).
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        /// Contract one edge at a time by the single-edge rules.
        #[arg(long)]
        stepwise: bool,
    },
    /// Every frame circuit.
    FrameCircuits {
        #[command(flatten)]
        input: Input,
    },
    /// Closure and balance-closure of an edge set, or the lattice of flats.
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
        /// List all closed sets instead.
        #[arg(long)]
        lattice: bool,
    },
    /// Frame-matroid rank of an edge set (all of `E` by default).
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<String>>,
    },
    /// Incidence, adjacency, degree or Laplacian matrix.
    Matrix {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "incidence")]
        which: WhichMatrix,
        /// Reduce the graph first.
        #[arg(long)]
        reduced: bool,
    },
    /// `det L` against the weighted count of independent `n`-sets.
    MatrixTree {
        #[command(flatten)]
        input: Input,
    },
    /// Eigenvalues of the adjacency or Laplacian matrix.
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "adjacency")]
        which: WhichMatrix,
    },
    /// Regions of the signed-graphic arrangement.
    Regions {
        #[command(flatten)]
        input: Input,
        /// Cross-check with the sign-vector oracle and acyclic orientations.
        #[arg(long)]
        oracle: bool,
    },
    /// Acyclic orientations.
    Acyclic {
        #[command(flatten)]
        input: Input,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Characteristic polynomial of the arrangement and its hyperplanes.
    Charpoly {
        #[command(flatten)]
        input: Input,
    },
    /// Chromatic polynomials, numbers and coloration counts.
    Chromatic {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        zero_free: bool,
        #[arg(long, value_enum, default_value = "delcon")]
        algorithm: Algorithm,
        /// Colors `-k..k`; required by `--algorithm count`.
        #[arg(long)]
        k: Option<u32>,
        /// Also report the chromatic numbers.
        #[arg(long)]
        numbers: bool,
        /// Check one coloration, given as comma-separated colors.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coloration: Option<Vec<i64>>,
        /// List the stable sets.
        #[arg(long)]
        stable_sets: bool,
    },
    /// Named graph families with their closed forms.
    Catalog {
        /// full, fullloops, allpos, allposfull, allneg, expansion,
        /// expansionfull, pmkn or pmknfull.
        #[arg(long)]
        family: String,
        /// Base graph: p3, c4, k4 or k4-e.
        #[arg(long, conflicts_with_all = ["n", "file"])]
        base: Option<String>,
        /// Order, for the families built from `K_n`.
        #[arg(long, conflicts_with = "file")]
        n: Option<usize>,
        /// Base graph from a file.
        file: Option<PathBuf>,
    },
    /// Line graph of the canonical orientation.
    Linegraph {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        reduced: bool,
        /// Print the Harary–Norman line graph of an all-positive graph.
        #[arg(long)]
        harary_norman: bool,
    },
    /// Generalized line graph `Λ(Γ; m)` and the digon-extended `−Γ(m)`.
    Glinegraph {
        /// Base graph: p3, c4, k4 or k4-e.
        #[arg(long, conflicts_with = "file")]
        base: Option<String>,
        /// Digon counts per vertex.
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        file: Option<PathBuf>,
    },
    /// Root systems, and membership of a graph's edge vectors.
    Roots {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        /// Print every vector.
        #[arg(long)]
        list: bool,
        /// Check that the edge vectors of this graph lie in the system.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Gramian angle representation from an eigendecomposition.
    Gramian {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2.0)]
        nu: f64,
        #[arg(long)]
        anti: bool,
    },
    /// A seeded random graph in `sg 1` format.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        order: usize,
        /// Upper bound on the number of edges.
        #[arg(long, default_value_t = 8)]
        edges: usize,
        #[arg(long, value_enum, default_value = "any")]
        kinds: Kinds,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WhichMatrix {
    Incidence,
    Adjacency,
    Degree,
    Laplacian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Delcon,
    Subset,
    Expansion,
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kinds {
    Any,
    Links,
    Simple,
}

/// Every verb, in help order.
pub const VERBS: &[&str] = &[
    "info",
    "balance",
    "switch",
    "balancing-edges",
    "delete",
    "contract",
    "frame-circuits",
    "closure",
    "rank",
    "matrix",
    "matrix-tree",
    "spectrum",
    "regions",
    "acyclic",
    "charpoly",
    "chromatic",
    "catalog",
    "linegraph",
    "glinegraph",
    "roots",
    "gramian",
    "random",
];

/// Library operations and the verb that reaches each.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("graph::parse", "info"),
    ("graph::serialize", "random"),
    ("balance::b", "info"),
    ("balance::is_balanced_graph", "info"),
    ("circles::enumerate_circles", "info"),
    ("circles::spanning_forest", "info"),
    ("circles::fundamental_system", "info"),
    ("circles::blocks", "info"),
    ("balance::balance_partition", "balance"),
    ("balance::is_balanced", "balance"),
    ("balance::harary_bipartition", "balance"),
    ("balance::switch", "switch"),
    ("balance::switching_equivalent", "switch"),
    ("iso::switching_isomorphism", "switch"),
    ("balance::classify_balancing_edges", "balancing-edges"),
    ("balance::balancing_vertices", "balancing-edges"),
    ("balance::min_balancing_set", "balancing-edges"),
    ("balance::has_two_disjoint_negative_circles", "balancing-edges"),
    ("minors::delete_edges", "delete"),
    ("minors::contract_set", "contract"),
    ("minors::contract_edge", "contract"),
    ("minors::minor", "contract"),
    ("frame::enumerate_frame_circuits", "frame-circuits"),
    ("frame::closure", "closure"),
    ("frame::balance_closure", "closure"),
    ("frame::closed_sets", "closure"),
    ("frame::rank", "rank"),
    ("frame::is_independent", "rank"),
    ("matrices::incidence_rank", "rank"),
    ("matrices::incidence_matrix", "matrix"),
    ("matrices::adjacency_matrix", "matrix"),
    ("matrices::degree_matrix", "matrix"),
    ("matrices::laplacian", "matrix"),
    ("matrices::reduce", "matrix"),
    ("matrices::matrix_tree", "matrix-tree"),
    ("matrices::spectrum", "spectrum"),
    ("orientation::region_count", "regions"),
    ("orientation::enumerate_acyclic", "acyclic"),
    ("orientation::all_orientations", "acyclic"),
    ("orientation::is_acyclic", "acyclic"),
    ("orientation::region_witness", "acyclic"),
    ("orientation::arrangement", "charpoly"),
    ("orientation::characteristic_polynomial", "charpoly"),
    ("coloring::chromatic_poly_delcon", "chromatic"),
    ("coloring::chromatic_poly_subset", "chromatic"),
    ("coloring::chromatic_via_expansion", "chromatic"),
    ("coloring::count_proper", "chromatic"),
    ("coloring::chromatic_numbers", "chromatic"),
    ("coloring::is_proper", "chromatic"),
    ("coloring::stable_sets", "chromatic"),
    ("catalog::catalog", "catalog"),
    ("linegraph::line_graph", "linegraph"),
    ("linegraph::reduced_line_graph", "linegraph"),
    ("linegraph::line_adjacency_identity", "linegraph"),
    ("linegraph::harary_norman", "linegraph"),
    ("linegraph::generalized_line_graph", "glinegraph"),
    ("angle::root_system", "roots"),
    ("angle::pairwise_dots", "roots"),
    ("angle::edge_vector_representation", "roots"),
    ("angle::membership_in_root_system", "roots"),
    ("matrices::min_eigenvalue", "gramian"),
    ("matrices::max_eigenvalue", "gramian"),
    ("angle::construct_gramian", "gramian"),
    ("angle::gram_error", "gramian"),
    ("angle::verify_representation", "gramian"),
    ("angle::normalize", "gramian"),
];

/// Run `sgtool` with `args` (including the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let (lim, warnings) = cli.caps.limits();
    let mut stderr: String = warnings.iter().map(|w| format!("{w}\n")).collect();
    let pool = match cli.threads {
        Some(0) => {
            stderr.push_str("error: --threads must be at least 1\n");
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr,
            };
        }
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    }
    .expect("thread pool");
    let result = pool.install(|| verbs::dispatch(&cli.verb, cli.format, &lim));
    match result {
        Ok(report) => match report.render(cli.format) {
            Ok(stdout) => Outcome {
                code: 0,
                stdout,
                stderr,
            },
            Err(e) => {
                stderr.push_str(&format!("error: {e}\n"));
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr,
                }
            }
        },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr,
            }
        }
    }
}
