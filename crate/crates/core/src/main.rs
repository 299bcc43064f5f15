use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use isp_workbench::commands::{
    cmd_check, cmd_check_corpus, cmd_classify, cmd_classify_corpus, cmd_factor, cmd_ideals, cmd_spec, read_corpus,
    CommandOutput, Options, EXIT_SEMANTIC,
};

/// Finite commutative rings: ideal lattices, factorization classes and
/// theorem checks.
#[derive(Parser)]
#[command(name = "ispw", version)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse rings with more elements than this.
    #[arg(long, global = true, default_value_t = 4096)]
    max_size: usize,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Newline-separated ring expressions for batch runs.
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide every ring class for a ring.
    Classify { expr: Option<String> },
    /// List all ideals with their flags.
    Ideals { expr: String },
    /// Factor an ideal: modes isp, strong, sp, ssp, zpi, zpui.
    Factor { expr: String, ideal: String, mode: String },
    /// Check a theorem on an instance (ring, then optional ideal or module).
    Check {
        theorem: Option<String>,
        instance: Vec<String>,
    },
    /// List the prime spectrum.
    Spec { expr: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        json: cli.json,
        max_size: cli.max_size,
        threads: cli.threads,
    };
    let corpus = match &cli.corpus {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => Some(read_corpus(&text)),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(EXIT_SEMANTIC as u8);
            }
        },
        None => None,
    };
    let missing = |what: &str| CommandOutput {
        text: format!("error: {what}\n"),
        code: EXIT_SEMANTIC,
    };
    let out = match (cli.command, corpus) {
        (Command::Classify { expr: Some(e) }, _) => cmd_classify(&e, &opts),
        (Command::Classify { expr: None }, Some(c)) => cmd_classify_corpus(&c, &opts),
        (Command::Classify { expr: None }, None) => missing("classify needs an expression or --corpus"),
        (Command::Check { theorem, instance }, Some(c)) if instance.is_empty() => {
            cmd_check_corpus(theorem.as_deref(), &c, &opts)
        }
        (Command::Check { theorem: Some(t), instance }, _) => cmd_check(&t, &instance, &opts),
        (Command::Check { theorem: None, .. }, _) => missing("check needs a theorem id or --corpus"),
        (Command::Ideals { expr }, _) => cmd_ideals(&expr, &opts),
        (Command::Factor { expr, ideal, mode }, _) => cmd_factor(&expr, &ideal, &mode, &opts),
        (Command::Spec { expr }, _) => cmd_spec(&expr, &opts),
    };
    if out.code >= 2 {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
