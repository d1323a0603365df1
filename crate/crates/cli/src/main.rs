use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CmdError, Outcome};

/// Build and check braided algebras, U_q(g) actions and FRT bialgebras.
///
/// Exit status: 0 when every requested check passes, 1 when a check fails,
/// 2 for usage or input errors.
#[derive(Debug, Parser)]
#[command(name = "braidalg", version)]
struct Cli {
    /// Also write the machine-readable report here.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SpaceSource {
    /// Built-in space: `sl:N` or `adjoint:sl2`.
    #[arg(long)]
    builtin: Option<String>,
    /// Fixture file.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SubCheck {
    Relations,
    Admissible,
    Ideal,
    Measuring,
    Antipode,
    Faithful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RSourceArg {
    Braiding,
    Rtt,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the braid equation and report the minimal polynomial.
    ValidateR {
        #[command(flatten)]
        source: SpaceSource,
        #[arg(long)]
        show_minimal_poly: bool,
    },
    /// Build χ_{f,R} = TV / ⟨f(Ψ)(V⊗V)⟩.
    Chi {
        #[command(flatten)]
        source: SpaceSource,
        /// Polynomial in x with coefficients in Q(q); ignored for relation fixtures.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        show_relations: bool,
        #[arg(long)]
        hilbert: bool,
    },
    /// Verify a representation and its measuring action.
    Check {
        /// Representation: `sl:N`, `adjoint:sl2` or a fixture file.
        #[arg(long)]
        rep: String,
        #[arg(value_enum, required = true)]
        checks: Vec<SubCheck>,
        /// Polynomial defining the quotient for `ideal` and `measuring`.
        #[arg(long, default_value = "x - q")]
        poly: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// The FRT bialgebra A(R) and its pairing with a representation.
    Frt {
        #[command(flatten)]
        source: SpaceSource,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Representation to pair with: `sl:N` or a fixture file.
        #[arg(long)]
        pair_with: Option<String>,
        /// Matrix used for α and β.
        #[arg(long, value_enum, default_value_t = RSourceArg::Braiding)]
        r_source: RSourceArg,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CmdError> {
    match &cli.command {
        Command::ValidateR {
            source,
            show_minimal_poly,
        } => commands::validate_r(&commands::resolve_space(source)?, *show_minimal_poly),
        Command::Chi {
            source,
            poly,
            max_degree,
            show_relations,
            hilbert,
        } => commands::chi(
            &commands::resolve_space(source)?,
            poly.as_deref(),
            *max_degree,
            *show_relations,
            *hilbert,
        ),
        Command::Check {
            rep,
            checks,
            poly,
            samples,
            seed,
            max_degree,
        } => commands::check(
            &commands::resolve_rep(rep)?,
            checks,
            poly,
            *samples,
            *seed,
            *max_degree,
        ),
        Command::Frt {
            source,
            max_degree,
            pair_with,
            r_source,
        } => {
            let rep = pair_with.as_deref().map(commands::resolve_rep).transpose()?;
            commands::frt(
                &commands::resolve_space(source)?,
                *max_degree,
                rep.as_ref(),
                *r_source,
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if let Some(path) = &cli.json_out {
                let body = serde_json::to_string_pretty(&outcome.json).expect("report serializes");
                if let Err(e) = std::fs::write(path, body + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
