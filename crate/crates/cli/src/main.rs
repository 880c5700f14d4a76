//! `rsfan`: command-line front end.

mod commands;

use clap::{Args, Parser, Subcommand};
use rsfan::harness::DEFAULT_SEED;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "rsfan", version, about = "Ternary semigroups, real semigroups and fans")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

/// A structure file, or `example:<name>` for a built-in example.
#[derive(Args, Debug)]
struct Input {
    structure: String,
}

/// Restricts the model to a subset of the characters (`h1,h3` or `1,3`).
#[derive(Args, Debug)]
struct CharsArg {
    #[arg(long, value_name = "SUBSET")]
    chars: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a structure and summarize its ideals, units and condition [Z].
    CheckTs {
        #[command(flatten)]
        input: Input,
    },
    /// Print the character table.
    Chars {
        #[command(flatten)]
        input: Input,
        /// Emit the specialization order in DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Print the closed-form D and Dᵗ tables.
    MakeFan {
        #[command(flatten)]
        input: Input,
    },
    /// Compare the two dual descriptions of a fan.
    IsFan {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        chars: CharsArg,
    },
    /// Check the real-semigroup axioms; exit status 0 iff all pass.
    VerifyRs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        chars: CharsArg,
    },
    /// Print the representation order (or the specialization order).
    Order {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        chars: CharsArg,
        /// Write the Hasse diagram in DOT to this file (`-` for stdout).
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
        /// Use the specialization order of the characters.
        #[arg(long)]
        spec: bool,
    },
    /// Quotient by a proper ideal or by a 3-closed set of characters.
    Quotient {
        #[command(flatten)]
        input: Input,
        /// Elements of a proper ideal, comma separated.
        #[arg(long, value_name = "ELEMENTS", conflicts_with = "chars", required_unless_present = "chars")]
        ideal: Option<String>,
        /// Characters to keep (`h1,h3` or `1,3`).
        #[arg(long, value_name = "SUBSET")]
        chars: Option<String>,
    },
    /// Check the characterization of fans among real semigroups.
    Characterize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        chars: CharsArg,
    },
    /// Show a built-in example.
    Examples {
        /// three, f1, f1-idem, f2, f3 or f4.
        name: String,
        /// Emit the representation order in DOT.
        #[arg(long)]
        dot: bool,
        /// With --dot, emit the specialization order instead.
        #[arg(long, requires = "dot")]
        spec: bool,
        /// Print the example as a structure file.
        #[arg(long, conflicts_with = "dot")]
        structure: bool,
    },
    /// Search separating character subsets for an [RS3] failure.
    Rs3Search {
        /// Structure to search; without one, the seeded random corpus is searched.
        structure: Option<String>,
        /// Largest subset size.
        #[arg(long, default_value_t = 6)]
        max: usize,
        /// Number of random structures when searching the corpus.
        #[arg(long, default_value_t = 24)]
        count: usize,
    },
    /// Preordered-ring checks on samples of ℚ[X]/(X²).
    Pring {
        #[command(subcommand)]
        action: PringAction,
    },
    /// Run the acceptance suite and print a pass/fail table.
    Reproduce {
        /// Run only these criteria (1–11).
        #[arg(long = "criterion", value_name = "ID")]
        criteria: Vec<u32>,
        /// Also write reproduce.txt and reproduce.json into this directory.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum PringAction {
    /// Verify that a preorder is total and inspect its support.
    Check {
        /// lex, sos, const-nonneg or lex+X.
        #[arg(long, default_value = "lex")]
        preorder: String,
        /// Sample every aX+b with |a|, |b| ≤ N.
        #[arg(long, default_value_t = 5)]
        range: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::CheckTs { input } => commands::check_ts(&input.structure),
        Command::Chars { input, dot } => commands::chars(&input.structure, dot),
        Command::MakeFan { input } => commands::make_fan(&input.structure),
        Command::IsFan { input, chars } => commands::is_fan(&input.structure, chars.chars.as_deref()),
        Command::VerifyRs { input, chars } => commands::verify_rs(&input.structure, chars.chars.as_deref()),
        Command::Order { input, chars, dot, spec } => {
            commands::order(&input.structure, chars.chars.as_deref(), dot.as_deref(), spec)
        }
        Command::Quotient { input, ideal, chars } => {
            commands::quotient(&input.structure, ideal.as_deref(), chars.as_deref())
        }
        Command::Characterize { input, chars } => commands::characterize(&input.structure, chars.chars.as_deref()),
        Command::Examples { name, dot, spec, structure } => commands::examples(&name, dot, spec, structure),
        Command::Rs3Search { structure, max, count } => {
            commands::rs3_search(structure.as_deref(), max, count, cli.seed)
        }
        Command::Pring { action: PringAction::Check { preorder, range } } => commands::pring_check(&preorder, range),
        Command::Reproduce { criteria, out } => commands::reproduce(&criteria, out.as_deref(), cli.seed),
    };
    match result {
        Ok(out) => {
            if cli.json && !out.raw {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("reports serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
