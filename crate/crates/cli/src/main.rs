use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orthoscalar::catalog::Parity;
use orthoscalar_cli::{
    cmd_construct, cmd_decompose, cmd_functor, cmd_graphs, cmd_reduce, cmd_roots, cmd_verify, finish,
    render_table, ConstructRequest,
};

#[derive(Parser)]
#[command(name = "orthoscalar", version, about = "Orthoscalar representations of star and extended Dynkin quivers")]
struct Cli {
    /// Numerical tolerance for orthoscalarity, Schur and splitting checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Seed for every random choice; equal seeds give equal output.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog graphs, or describe one.
    Graphs {
        #[arg(long)]
        graph: Option<String>,
    },
    /// Enumerate positive roots up to a bound, or classify one vector.
    Roots {
        #[arg(long)]
        graph: String,
        /// `delta`, `k*delta`, an integer box size or a comma vector.
        #[arg(long)]
        bound: Option<String>,
        /// Comma vector to classify instead of enumerating.
        #[arg(long)]
        classify: Option<String>,
    },
    /// Reflection path of a real root.
    Reduce {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        vector: String,
    },
    /// Build a family member or a real-root representation.
    Construct {
        #[arg(long, conflicts_with_all = ["graph", "root"])]
        family: Option<String>,
        /// Parameter JSON, inline or as a file path.
        #[arg(long, requires = "family")]
        params: Option<String>,
        #[arg(long, requires = "root")]
        graph: Option<String>,
        #[arg(long, requires = "graph")]
        root: Option<String>,
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Check orthoscalarity and the Schur property of a stored representation.
    Verify {
        /// Representation JSON file.
        rep: PathBuf,
    },
    /// Apply alternating reflection functors.
    Functor {
        /// Representation JSON file.
        rep: PathBuf,
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        check_inverse: bool,
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Split a representation into indecomposable summands.
    Decompose {
        /// Representation JSON file.
        rep: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli.tol;
    let result = finish(match &cli.command {
        Command::Graphs { graph } => cmd_graphs(graph.as_deref()),
        Command::Roots { graph, bound, classify } => cmd_roots(graph, bound.as_deref(), classify.as_deref()),
        Command::Reduce { graph, vector } => cmd_reduce(graph, vector),
        Command::Construct { family, params, graph, root, out } => cmd_construct(&ConstructRequest {
            family: family.as_deref(),
            params: params.as_deref(),
            graph: graph.as_deref(),
            root: root.as_deref(),
            seed: cli.seed,
            out: out.as_deref(),
            tol,
        }),
        Command::Verify { rep } => cmd_verify(rep, tol),
        Command::Functor { rep, parity, k, check_inverse, out } => {
            let p = match parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            cmd_functor(rep, p, *k, *check_inverse, out.as_deref())
        }
        Command::Decompose { rep } => cmd_decompose(rep, tol),
    });
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&result.to_json()).expect("serializable") + "\n",
        Format::Table => render_table(&result),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().write_all(text.as_bytes());
    for d in &result.diagnostics {
        eprintln!("{d}");
    }
    ExitCode::from(result.exit_code as u8)
}
