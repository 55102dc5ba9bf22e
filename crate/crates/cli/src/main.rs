use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod outcome;
mod suites;

use outcome::{from_error, Outcome};

#[derive(Parser)]
#[command(
    name = "altdimap",
    version,
    about = "Alternating dimaps, reductions, triality and Tutte-like invariants"
)]
struct Cli {
    /// Print machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Op {
    #[value(name = "1")]
    One,
    #[value(name = "w")]
    Omega,
    #[value(name = "w2")]
    Omega2,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Fresh {
    Append,
    Inherit,
    Anywhere,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Semiloop {
    Refuse,
    Precedence,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Eti,
    Triality,
    Ctutte,
    Minors,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that an adm-v1 file describes an alternating dimap.
    Validate { file: PathBuf },
    /// Component, in-star and face counts, and genus per component.
    Stats { file: PathBuf },
    /// The type of every edge.
    Classify { file: PathBuf },
    /// Clockwise and anticlockwise faces.
    Faces { file: PathBuf },
    /// Apply one reduction and print the result.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        edge: String,
        #[arg(long, value_enum)]
        op: Op,
    },
    /// The trial of a dimap, or its square.
    Trial {
        file: PathBuf,
        #[arg(long)]
        square: bool,
    },
    /// Extended Tutte invariant.
    Eti {
        file: PathBuf,
        /// Comma-separated edge ordering.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        /// Every ordering; the default when no ordering is given.
        #[arg(long, conflicts_with = "order")]
        all_orders: bool,
        /// params-v1 file; parameters default to free symbols.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Print each distinct value once.
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum, default_value = "append")]
        fresh: Fresh,
        #[arg(long, value_enum, default_value = "refuse")]
        semiloop: Semiloop,
    },
    /// c-Tutte invariant.
    Ctutte {
        file: PathBuf,
        #[arg(long)]
        all_orders: bool,
        /// Evaluate at x = ζ, y = ζ̄ (plus) or the conjugate point (minus).
        #[arg(long, value_enum)]
        zeta: Option<Sign>,
    },
    /// a-Tutte invariant.
    Atutte {
        file: PathBuf,
        #[arg(long)]
        all_orders: bool,
        #[arg(long, value_enum)]
        zeta: Option<Sign>,
    },
    /// Tutte polynomial of a pg-v1 plane graph.
    Tutte { file: PathBuf },
    /// The c-digon dimap of a plane graph.
    Altc { file: PathBuf },
    /// The a-digon dimap of a plane graph.
    Alta { file: PathBuf },
    /// Compare T(G) with the c-Tutte invariant of a dimap by both routes.
    Match { graph: PathBuf, dimap: PathBuf },
    /// Structural recognisers.
    Recognize { file: PathBuf },
    /// Search for a minor: g13, g23a, g23c, g24, g351 or an adm-v1 file.
    Minor {
        file: PathBuf,
        #[arg(long)]
        target: String,
    },
    /// Enumerate dimaps with a given number of edges into a corpus-v1 file.
    Enumerate {
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replay the self-checks over the census.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cmd: Cmd) -> Outcome {
    let res = match cmd {
        Cmd::Validate { file } => commands::validate(&file),
        Cmd::Stats { file } => commands::stats(&file),
        Cmd::Classify { file } => commands::classify(&file),
        Cmd::Faces { file } => commands::faces(&file),
        Cmd::Reduce { file, edge, op } => commands::reduce(&file, &edge, op),
        Cmd::Trial { file, square } => commands::trial(&file, square),
        Cmd::Eti {
            file,
            order,
            all_orders: _,
            params,
            distinct,
            fresh,
            semiloop,
        } => commands::eti(&file, order, params.as_deref(), distinct, fresh, semiloop),
        Cmd::Ctutte {
            file,
            all_orders,
            zeta,
        } => commands::tutte_invariant(&file, true, all_orders, zeta),
        Cmd::Atutte {
            file,
            all_orders,
            zeta,
        } => commands::tutte_invariant(&file, false, all_orders, zeta),
        Cmd::Tutte { file } => commands::tutte(&file),
        Cmd::Altc { file } => commands::alt(&file, true),
        Cmd::Alta { file } => commands::alt(&file, false),
        Cmd::Match { graph, dimap } => commands::tutte_match(&graph, &dimap),
        Cmd::Recognize { file } => commands::recognize(&file),
        Cmd::Minor { file, target } => commands::minor(&file, &target),
        Cmd::Enumerate {
            edges,
            connected,
            planar,
            out,
        } => commands::enumerate(edges, connected, planar, &out),
        Cmd::Verify {
            suite,
            max_edges,
            seed,
        } => Ok(suites::verify(suite, max_edges, seed)),
    };
    res.unwrap_or_else(|e| from_error(&e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(cli.cmd);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("serializable")
        );
    } else if out.stderr {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.code)
}
