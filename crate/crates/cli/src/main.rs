mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::report::Outcome;

#[derive(Parser, Debug)]
#[command(
    name = "grpact",
    version,
    about = "Split extension classifiers for finite groups, reflexive graphs and internal groupoids"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Directory of `*.grp` files to use instead of the bundled catalog.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Largest base order used by oracle checks.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    max_base_order: u64,
    /// Worker threads; 0 lets the runtime decide.
    #[arg(long, global = true, env = "GRPACT_THREADS", default_value_t = 0)]
    threads: usize,
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Record wall-clock time in the report (makes it non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a group, reflexive graph or crossed module file.
    Validate { file: PathBuf },
    /// The generic split extension Aut(X) ⋉ X of a group.
    Generic {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// The split extension classifier of a reflexive graph.
    RgClassifier {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// The split extension classifier of an internal groupoid, given as a
    /// cat¹-group or a crossed module.
    Actor {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Huq commutator of two subgroups.
    Commutator {
        group: PathBuf,
        /// Generators of the left subgroup, comma separated, or `all`.
        #[arg(long, default_value = "all")]
        left: String,
        #[arg(long, default_value = "all")]
        right: String,
    },
    /// Centralizer of a subgroup, or of a homomorphism into the group.
    Centralizer {
        group: PathBuf,
        /// Generators of the subgroup, comma separated, or `all`.
        #[arg(long, default_value = "all", conflicts_with = "hom")]
        sub: String,
        /// A homomorphism file; requires `--domain`.
        #[arg(long, requires = "domain")]
        hom: Option<PathBuf>,
        /// Group file for the domain of `--hom`.
        #[arg(long)]
        domain: Option<PathBuf>,
    },
    /// Normalizer of a subgroup.
    Normalizer {
        group: PathBuf,
        #[arg(long, default_value = "all")]
        sub: String,
    },
    /// Commutator and extension law checks over the catalog.
    Laws {
        #[command(subcommand)]
        action: LawsCommand,
    },
    /// Bundled catalog utilities.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
enum LawsCommand {
    Run {
        /// A law name or `all`.
        #[arg(long, default_value = "all")]
        law: String,
        /// Kernel and base bound for the lift lemma.
        #[arg(long, default_value_t = 6)]
        split_max_order: usize,
        /// Carrier bound for reflexive-graph extensions.
        #[arg(long, default_value_t = 4)]
        graph_max_order: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Write every bundled group as a `.grp` file into a directory.
    Export { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.threads)
            .build_global()
            .expect("thread pool configured once");
    }
    let start = std::time::Instant::now();
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(o) => *o,
    };
    let elapsed = cli.global.timing.then(|| start.elapsed().as_millis() as u64);
    match report::emit(&cli.global, outcome, elapsed) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Box<Outcome>> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { file } => commands::validate(file),
        Command::Generic { file, verify } => commands::generic(g, file, *verify),
        Command::RgClassifier { file, verify } => commands::rg_classifier(g, file, *verify),
        Command::Actor { file, verify } => commands::actor(g, file, *verify),
        Command::Commutator { group, left, right } => commands::commutator(group, left, right),
        Command::Centralizer { group, sub, hom, domain } => {
            commands::centralizer(group, sub, hom.as_deref(), domain.as_deref())
        }
        Command::Normalizer { group, sub } => commands::normalizer(group, sub),
        Command::Laws { action: LawsCommand::Run { law, split_max_order, graph_max_order } } => {
            commands::laws(g, law, *split_max_order, *graph_max_order)
        }
        Command::Catalog { action: CatalogCommand::Export { dir } } => commands::export_catalog(dir),
    }
}
