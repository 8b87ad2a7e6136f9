//! Argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "lcsplit", version, about = "LC orbits and split decompositions of simple graphs")]
pub struct Cli {
    /// Output format; each command picks a natural default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Orbit member budget.
    #[arg(long, global = true, env = "LCSPLIT_BUDGET", default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: u64,

    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

/// Where a graph comes from: a named family, a JSON file, or stdin.
#[derive(Debug, Args, Clone)]
pub struct GraphSource {
    /// Graph JSON file; `-` or absent reads stdin.
    #[arg(long, short)]
    pub input: Option<PathBuf>,

    /// Build a named family instead of reading JSON.
    #[arg(long)]
    pub family: Option<String>,

    /// Family parameters, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<usize>,

    /// Clique-star center block.
    #[arg(long)]
    pub center: Option<usize>,
}

/// A family with its parameters, for the formula commands.
#[derive(Debug, Args, Clone)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: String,

    #[arg(long, value_delimiter = ',', required = true)]
    pub params: Vec<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family graph, or `random-dh` with `--params n`.
    Gen {
        family: String,
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
        #[arg(long)]
        center: Option<usize>,
    },
    /// Apply local complements (left to right) or an edge pivot.
    Lc {
        #[command(flatten)]
        source: GraphSource,
        /// Vertices to complement at, in order.
        #[arg(long, value_delimiter = ',')]
        sequence: Vec<usize>,
        /// JSON array script, as emitted by `orbit transform` or `sym transform`.
        #[arg(long)]
        script: Option<PathBuf>,
        /// Edge pivot `i,j`.
        #[arg(long, value_delimiter = ',', num_args = 2)]
        pivot: Vec<usize>,
    },
    /// Brute-force LC orbit queries.
    Orbit {
        #[command(subcommand)]
        action: OrbitAction,
    },
    /// Graph to QASST JSON.
    Decompose {
        #[command(flatten)]
        source: GraphSource,
    },
    /// QASST JSON to graph.
    Reconstruct {
        /// QASST JSON file; `-` or absent reads stdin.
        #[arg(long, short)]
        input: Option<PathBuf>,
    },
    /// Operations acting directly on a QASST.
    Qasst {
        #[command(subcommand)]
        action: QasstAction,
    },
    /// Closed-form counts.
    Count {
        #[command(subcommand)]
        action: CountAction,
    },
    /// Extremal representatives predicted by the closed forms.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// Symmetry classes of the k-partite and clique-star orbits.
    Sym {
        #[command(subcommand)]
        action: SymAction,
    },
    /// Cross-check the formulas against the orbit oracle.
    Verify {
        #[arg(long, default_value = "desk")]
        suite: String,
        /// Run only these checks.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        /// Include wall-clock times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrbitAction {
    Size {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Members sorted by canonical key.
    List {
        #[command(flatten)]
        source: GraphSource,
    },
    MinEdge {
        #[command(flatten)]
        source: GraphSource,
    },
    MinDegree {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Isomorphism classes of the members.
    IsoClasses {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Shortest LC sequence from the source graph to `--to`.
    Transform {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        to: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum QasstAction {
    Lc {
        #[arg(long, short)]
        input: Option<PathBuf>,
        #[arg(long)]
        vertex: usize,
    },
    Induce {
        #[arg(long, short)]
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
    },
    Extend {
        #[arg(long, short)]
        input: Option<PathBuf>,
        /// pendant, false_twin or true_twin.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        anchor: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CountAction {
    /// Orbit size of a bipartite, k-partite or clique-star graph.
    Orbit {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// QASST-equivalence class size of a distance-hereditary graph, with the
    /// product bound and the number of rejected assignments.
    Phi {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Isomorphism classes in the orbit (equal part sizes).
    IsoClasses {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Bouchet's path or cycle formula.
    Bouchet {
        /// path or cycle.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum RepAction {
    MinEdge {
        #[command(flatten)]
        family: FamilyArgs,
    },
    MinDegree {
        #[command(flatten)]
        family: FamilyArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SymAction {
    /// Every (case, spoke set) class with its multiplicity.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// LC sequence taking the base graph to the class representative.
    Transform {
        /// Part sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
        /// 1, 2 or 3.
        #[arg(long)]
        case: u8,
        /// Case pointer for cases 2 and 3.
        #[arg(long)]
        j: Option<usize>,
        /// Star-spoke blocks.
        #[arg(long = "I", alias = "spokes", value_delimiter = ',')]
        spokes: Vec<usize>,
        /// Clique-star base center block.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
}
