use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matalg::{input_error, parse_job, run, Command, Overrides};

#[derive(Parser)]
#[command(name = "matalg", version, about = "Exact structure analysis of matrix algebras and semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Field: Q, H, GF(p), GF(p)[c0,c1,...] or a JSON descriptor.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Matrix size.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Job file; `-` reads standard input.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_name = "K")]
    trials: Option<usize>,
    #[arg(long, global = true, value_name = "K")]
    cap: Option<usize>,
    /// Adjoin the identity before closing.
    #[arg(long, global = true)]
    unital: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Sub {
    /// Algebra generated by the generators.
    Close,
    /// Irreducibility with a witness or certificate.
    Irr,
    /// Simultaneous triangularization.
    Tri,
    /// Commutant of the generators.
    Comm,
    /// Nilpotency of the generated algebra.
    Nil,
    /// Density certification for triangularizable irreducible algebras.
    Burnside,
    /// The five field conditions with a counterexample algebra.
    AuditField,
    /// Proper irreducible algebra from an irreducible polynomial of degree k.
    Counterexample,
    /// Nilpotency of algebras spanned by nilpotents.
    Wedderburn,
    /// The six conditions on a semigroup ideal.
    AuditIdeal,
    /// Hyperinvariant subspaces of a single matrix.
    Hyper,
}

impl Sub {
    fn command(self) -> Command {
        match self {
            Sub::Close => Command::Closure,
            Sub::Irr => Command::Irreducible,
            Sub::Tri => Command::Triangularize,
            Sub::Comm => Command::Commutant,
            Sub::Nil => Command::Nilpotency,
            Sub::Burnside => Command::Burnside,
            Sub::AuditField => Command::FieldAudit,
            Sub::Counterexample => Command::Counterexample,
            Sub::Wedderburn => Command::Wedderburn,
            Sub::AuditIdeal => Command::IdealAudit,
            Sub::Hyper => Command::Hyperinvariant,
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        None => Ok(String::new()),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("standard input: {e}"))?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let overrides = Overrides {
        field: cli.field.clone(),
        n: cli.n,
        seed: cli.seed,
        trials: cli.trials,
        cap: cli.cap,
        unital: cli.unital,
    };
    let outcome = match read_input(&cli.input) {
        Err(e) => input_error(&e),
        Ok(text) => match parse_job(&text, Some(cli.command.command()), &overrides) {
            Ok(job) => run(&job),
            Err(e) => input_error(&e.to_string()),
        },
    };
    // a closed pipe on either stream is not worth a panic
    let _ = writeln!(std::io::stdout(), "{}", outcome.render());
    let _ = writeln!(std::io::stderr(), "{}", outcome.summary);
    ExitCode::from(outcome.exit as u8)
}
