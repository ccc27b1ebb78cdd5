mod commands;
mod modarg;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use monoquiver::qv1;

use commands::{Input, Outcome};

/// Global dimension, resolutions and ideal constructions for quivers with
/// zero relations. Exit status: 0 success, 1 negative answer, 2 bad input.
#[derive(Parser)]
#[command(name = "monoquiver", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// QV1 file, or `-` for standard input.
    file: PathBuf,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Projective dimensions of the simples and the global dimension.
    Gldim {
        #[command(flatten)]
        common: Common,
    },
    /// Minimal projective resolution of a module.
    Resolve {
        #[command(flatten)]
        common: Common,
        /// S:i, P:i, Delta:i, Gamma:i[:m] or M:i:a,b
        #[arg(long)]
        module: String,
        /// Stop after this degree.
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Build relations on the quiver giving the target global dimension.
    Construct {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        target: usize,
    },
    /// Decide whether some admissible ideal gives global dimension 2.
    Corollary {
        #[command(flatten)]
        common: Common,
    },
    /// Strongly quasi-hereditary check in the given vertex order.
    CheckSqh {
        #[command(flatten)]
        common: Common,
    },
    /// Euler identities, closed forms and (with --m) the sequence identities.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Length of the linear subquiver on 1..=m for the sequence identities.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Diagram of a module on its path basis.
    Render {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Compare the combinatorial resolutions with linear algebra over F_p.
    OracleCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = monoquiver::linalg::DEFAULT_MODULUS)]
        field: u64,
        #[arg(long, default_value_t = 8)]
        max_deg: usize,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Gldim { common }
            | Command::Resolve { common, .. }
            | Command::Construct { common, .. }
            | Command::Corollary { common }
            | Command::CheckSqh { common }
            | Command::Verify { common, .. }
            | Command::Render { common, .. }
            | Command::OracleCheck { common, .. } => common,
        }
    }
}

fn load(path: &PathBuf) -> Result<Input> {
    let bytes = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    let text = std::str::from_utf8(&bytes).context("input is not UTF-8")?;
    let file = qv1::parse(text).with_context(|| format!("{}", path.display()))?;
    Ok(Input { file, bytes })
}

fn run(command: &Command) -> Result<Outcome> {
    let input = load(&command.common().file)?;
    match command {
        Command::Gldim { .. } => commands::gldim(&input),
        Command::Resolve { module, max_deg, .. } => commands::resolve(&input, module, *max_deg),
        Command::Construct { target, .. } => commands::construct(&input, *target),
        Command::Corollary { .. } => commands::corollary(&input),
        Command::CheckSqh { .. } => commands::check_sqh(&input),
        Command::Verify { m, .. } => commands::verify(&input, *m),
        Command::Render {
            module,
            format: Format::Dot,
            ..
        } => commands::render(&input, module),
        Command::OracleCheck { field, max_deg, .. } => commands::oracle_check(&input, *field, *max_deg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            if cli.command.common().json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("report serializes")
                );
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(if outcome.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
