use clap::{Parser, Subcommand};
use multalg_cli::{run, Command as LibCommand, GlobalOpts, OutputFormat};
use std::path::PathBuf;
use std::process::ExitCode;

/// Computer algebra for finite multirings, hyperfields and superrings.
#[derive(Parser)]
#[command(name = "multalg", version, about)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_parser = ["text", "json"], default_value = "text")]
    format: String,

    /// Seed for sampled validations
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Clause cap for disjunctive normal forms during elimination
    #[arg(long, global = true, default_value_t = 4096)]
    max_clauses: usize,

    /// Write the elimination trace (JSON) to this path
    #[arg(long, global = true)]
    trace: Option<PathBuf>,

    /// Definition files providing structures and named bindings
    #[arg(long, global = true)]
    defs: Vec<PathBuf>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Check an axiom profile exhaustively
    Check {
        structure: String,
        /// multigroup|multiring|superring|hyperring|multifield|multidomain
        profile: String,
    },
    /// Print the canonical table serialization
    Tables { structure: String },
    /// Compute the characteristic
    Char { structure: String },
    /// Evaluate a polynomial at an element (set-valued)
    Eval { structure: String, poly: String, elem: String },
    /// List the roots of a polynomial
    Roots { structure: String, poly: String },
    /// Euclidean division with a replayable certificate
    Divide { structure: String, a: String, b: String },
    /// Probe algebraic closedness up to a degree bound
    Closed { structure: String, max_deg: usize },
    /// Check a formula over all valuations
    Modelcheck { structure: String, formula: String },
    /// Eliminate quantifiers symbolically
    Qe {
        structure: String,
        formula: String,
        /// Compare input and output on the structure afterwards
        #[arg(long)]
        validate: bool,
    },
    /// Evaluate the closure/infinitude axiom schemas up to a bound
    Axioms { structure: String, n: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = GlobalOpts {
        format: if cli.format == "json" { OutputFormat::Json } else { OutputFormat::Text },
        seed: cli.seed,
        max_clauses: cli.max_clauses,
        trace_path: cli.trace,
        defs: cli.defs,
    };
    let cmd = match cli.command {
        Commands::Check { structure, profile } => LibCommand::Check { structure, profile },
        Commands::Tables { structure } => LibCommand::Tables { structure },
        Commands::Char { structure } => LibCommand::Char { structure },
        Commands::Eval { structure, poly, elem } => LibCommand::Eval { structure, poly, elem },
        Commands::Roots { structure, poly } => LibCommand::Roots { structure, poly },
        Commands::Divide { structure, a, b } => LibCommand::Divide { structure, a, b },
        Commands::Closed { structure, max_deg } => LibCommand::Closed { structure, max_deg },
        Commands::Modelcheck { structure, formula } => {
            LibCommand::Modelcheck { structure, formula }
        }
        Commands::Qe { structure, formula, validate } => {
            LibCommand::Qe { structure, formula, validate }
        }
        Commands::Axioms { structure, n } => LibCommand::Axioms { structure, n },
    };
    let result = run(&opts, &cmd);
    print!("{}", result.render(opts.format));
    if opts.format == OutputFormat::Json {
        println!();
    }
    ExitCode::from(result.exit_code())
}
