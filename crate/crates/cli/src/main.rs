use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lpl_cli::{run, CliError, Command, FamilySpec, GraphSource, OutputFormat, RotationChoice, RunConfig, VerifyTarget};
use lpl_core::connectivity::LambdaPrimeOptions;

#[derive(Parser)]
#[command(name = "lpl", version, about = "Connectivity of replacement products and semidirect-product Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Output format; dot and edge-list apply to `construct` only.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "LPL_JOBS", global = true)]
    jobs: Option<usize>,
    /// Increase log detail on stderr (repeatable).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    /// Only log warnings and errors.
    #[arg(short, long, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    EdgeList,
}

#[derive(Subcommand)]
enum Sub {
    /// Build a graph and print it.
    Construct(GraphArgs),
    /// Compute κ, λ and λ′ with certificates.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        lp: LpArgs,
        /// Re-derive λ′ by exhaustive subset search.
        #[arg(long)]
        brute_force_check: bool,
    },
    /// Report a λ′-atom and the subgraph it induces.
    Atom {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        lp: LpArgs,
    },
    /// Run a verification suite or construction.
    Verify {
        /// Suite to run: `reference` (alias `paper`) or `random`.
        #[arg(long, value_parser = ["reference", "paper", "random"], conflicts_with = "degree_gap")]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random products for `--suite random`.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Build the odd-degree Cayley graph with λ = d and λ′ = d + s.
        #[arg(long, alias = "problem-1-4", requires_all = ["d", "s"])]
        degree_gap: bool,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        lp: LpArgs,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Family: circulant, hypercube, complete, cycle, star, random-regular,
    /// ccc or cayley-sdp.
    #[arg(long, conflicts_with_all = ["input", "replacement"])]
    family: Option<String>,
    /// Order, or dimension for hypercube and ccc.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated generators for circulant and cayley-sdp.
    #[arg(long)]
    gens: Option<String>,
    /// Degree for random-regular.
    #[arg(long)]
    d: Option<usize>,
    /// Seed for random-regular.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge-list file.
    #[arg(long, conflicts_with = "replacement")]
    input: Option<PathBuf>,
    /// Build G₁ ® G₂ from `--g1` and `--g2`.
    #[arg(long, requires_all = ["g1", "g2"])]
    replacement: bool,
    /// First factor as `kind:args`, e.g. `hypercube:3` or `file:g.txt`.
    #[arg(long)]
    g1: Option<String>,
    /// Second factor, same syntax as `--g1`.
    #[arg(long)]
    g2: Option<String>,
    /// Port assignment on G₁: sorted, dims, gens or attached.
    #[arg(long, default_value = "sorted")]
    rotation: String,
}

#[derive(Args)]
struct LpArgs {
    /// Contract only edges at vertex 0; exact for vertex-transitive graphs.
    #[arg(long)]
    transitive: bool,
    /// Search only cuts of at most this size.
    #[arg(long)]
    prune_at: Option<usize>,
    /// Largest order accepted by the brute-force check.
    #[arg(long, default_value_t = 16)]
    brute_force_threshold: usize,
}

impl LpArgs {
    fn options(&self) -> LambdaPrimeOptions {
        LambdaPrimeOptions {
            use_vertex_transitivity: self.transitive,
            prune_at: self.prune_at,
            brute_force_threshold: self.brute_force_threshold,
        }
    }
}

impl GraphArgs {
    fn source(&self) -> Result<GraphSource, CliError> {
        if self.replacement {
            let g1 = FamilySpec::parse(self.g1.as_deref().unwrap_or_default())?;
            let g2 = FamilySpec::parse(self.g2.as_deref().unwrap_or_default())?;
            return Ok(GraphSource::Replacement {
                g1,
                g2,
                rotation: RotationChoice::parse(&self.rotation)?,
            });
        }
        let graph = match (&self.family, &self.input) {
            (Some(kind), None) => FamilySpec::from_flags(kind, self.n, self.gens.as_deref(), self.d, self.seed)?,
            (None, Some(path)) => FamilySpec::File { path: path.clone() },
            _ => return Err(CliError::Usage("give exactly one of --family, --input or --replacement".into())),
        };
        Ok(GraphSource::Single { graph })
    }
}

fn config(cli: &Cli) -> Result<RunConfig, CliError> {
    let format = match cli.format {
        Format::Json => OutputFormat::Json,
        Format::Dot => OutputFormat::Dot,
        Format::EdgeList => OutputFormat::EdgeList,
    };
    let (command, options) = match &cli.command {
        Sub::Construct(g) => (Command::Construct { source: g.source()? }, LambdaPrimeOptions::default()),
        Sub::Analyze {
            graph,
            lp,
            brute_force_check,
        } => (
            Command::Analyze {
                source: graph.source()?,
                brute_force_check: *brute_force_check,
            },
            lp.options(),
        ),
        Sub::Atom { graph, lp } => (Command::Atom { source: graph.source()? }, lp.options()),
        Sub::Verify {
            suite,
            seed,
            count,
            degree_gap,
            d,
            s,
            lp,
        } => {
            let target = match (suite.as_deref(), degree_gap) {
                (_, true) => VerifyTarget::DegreeGap {
                    d: d.unwrap_or_default(),
                    s: s.unwrap_or_default(),
                },
                (Some("random"), _) => VerifyTarget::RandomProducts {
                    seed: *seed,
                    count: *count,
                },
                (Some(_), _) => VerifyTarget::Reference { seed: *seed },
                (None, false) => return Err(CliError::Usage("verify needs --suite or --degree-gap".into())),
            };
            (Command::Verify(target), lp.options())
        }
    };
    Ok(RunConfig {
        command,
        options,
        format,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match (cli.quiet, cli.verbose) {
        (true, _) => "warn",
        (false, 0) => "info",
        (false, 1) => "debug",
        _ => "trace",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();

    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }

    let outcome = config(&cli).and_then(|c| run(&c));
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => std::io::stdout().write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if outcome.all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
