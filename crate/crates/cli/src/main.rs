use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mtc_core::cyclo::set_order_cap;
use mtc_core::{Error, ErrorClass};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "mtc", version, about = "Exact computations on modular data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the modular relations and print derived invariants.
    Validate(Common),
    /// Fusion rules from the Verlinde formula.
    Fusion {
        #[command(flatten)]
        common: Common,
        /// Left factor; all products are listed when omitted.
        #[arg(long)]
        object: Option<String>,
        /// Right factor; every simple when omitted.
        #[arg(long)]
        with: Option<String>,
    },
    /// Generalized Frobenius-Schur indicators nu^b_{n,k}(a) of the center.
    Indicators {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
        /// Restrict to one base simple.
        #[arg(long)]
        object: Option<String>,
    },
    /// Eigenvalues of the rotation on Hom(b, a^n) for every center simple b.
    Rotation {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        object: String,
        #[arg(long)]
        n: u32,
    },
    /// Eigenvalues of the Jucys-Murphy braid A^n_{l,m} on a^n.
    Braid {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        object: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Use the mirror braid (reversed braiding).
        #[arg(long)]
        under: bool,
    },
    /// Decompose a (x) a and list the braid-generator spectrum on each summand.
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        object: String,
        /// Spectrum of sigma_i on a (x) a.
        #[arg(long, conflicts_with = "braid_sss")]
        braid_sigma: bool,
        /// Spectrum of sigma_1 sigma_2 sigma_1 on a (x) a (x) a.
        #[arg(long)]
        braid_sss: bool,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// A `.mtc` file, or `catalog:<name>`.
    input: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Table,
    Structured,
}

/// Result of one command: the rendered text and whether the input passed
/// (only `validate` can report a non-error failure).
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e.class() {
        ErrorClass::Validation => 1,
        ErrorClass::Usage => 2,
        ErrorClass::Consistency => 3,
    }
}

fn apply_order_cap() -> Result<(), Error> {
    let Ok(raw) = std::env::var("MTC_ORDER_CAP") else {
        return Ok(());
    };
    let cap: u64 = raw
        .trim()
        .parse()
        .ok()
        .filter(|&c| c > 0)
        .ok_or_else(|| Error::Domain(format!("MTC_ORDER_CAP must be a positive integer, got `{raw}`")))?;
    set_order_cap(cap);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    // The arithmetic operators panic when a result would pass the order cap;
    // turn that into an ordinary error instead of a backtrace.
    std::panic::set_hook(Box::new(|_| {}));
    let result = match std::panic::catch_unwind(|| apply_order_cap().and_then(|()| commands::dispatch(&cli.command))) {
        Ok(r) => r,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            if msg.contains("configured cap") {
                eprintln!("mtc: {msg}");
                return ExitCode::from(2);
            }
            eprintln!("mtc: internal error: {msg}");
            return ExitCode::from(3);
        }
    };
    match result {
        Ok((outcome, out)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(path, &outcome.text) {
                    eprintln!("mtc: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("mtc: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
