mod catalog;
mod commands;

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use relfield::Error;

use commands::{Body, ChainArgs, ChargeArgs, Outcome, ProfileArgs, TransformArgs, VerifyArgs};

/// Builds, transforms and numerically checks Dirac solutions generated
/// from Klein-Gordon potentials.
#[derive(Debug, Parser)]
#[command(name = "relfield", version)]
struct Cli {
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Residual report of a catalog solution.
    Verify(VerifyArgs),
    /// Follow the chain of solutions generated from one component of `b`.
    Chain(ChainArgs),
    /// Apply a transformation law and re-verify.
    Transform(TransformArgs),
    /// Field charge of the localized stationary solution.
    Charge(ChargeArgs),
    /// Radial profile of a density as CSV.
    Profile(ProfileArgs),
    /// Run one command per input line, printing one JSON object per line.
    Batch {
        /// Input file, `-` for standard input. Each line holds the
        /// whitespace-separated arguments of one command.
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
}

const EXIT_TOLERANCE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SAMPLING: u8 = 3;
const EXIT_DIVERGENT: u8 = 4;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SamplingBudget { .. } => EXIT_SAMPLING,
        Error::Divergent(_) => EXIT_DIVERGENT,
        Error::NonConvergence { .. } => EXIT_TOLERANCE,
        _ => EXIT_USAGE,
    }
}

fn run(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Verify(a) => commands::verify(a),
        Command::Chain(a) => commands::chain(a),
        Command::Transform(a) => commands::transform(a),
        Command::Charge(a) => commands::charge(a),
        Command::Profile(a) => commands::profile(a),
        Command::Batch { .. } => Err(Error::InvalidConfig("batch cannot be nested".into())),
    }
}

fn render(body: &Body) -> String {
    match body {
        Body::Json(v) => serde_json::to_string_pretty(v).expect("report serializes") + "\n",
        Body::Csv(s) => s.clone(),
    }
}

fn batch(input: &PathBuf) -> Result<(String, u8), Error> {
    let reader: Box<dyn BufRead> = if input.as_os_str() == "-" {
        Box::new(std::io::stdin().lock())
    } else {
        let file = std::fs::File::open(input)
            .map_err(|e| Error::InvalidConfig(format!("cannot open {}: {e}", input.display())))?;
        Box::new(std::io::BufReader::new(file))
    };
    let mut out = String::new();
    let mut worst = 0u8;
    for line in reader.lines() {
        let line = line.map_err(|e| Error::InvalidConfig(format!("cannot read input: {e}")))?;
        let args: Vec<&str> = line.split_whitespace().collect();
        if args.is_empty() {
            continue;
        }
        let (code, output, error) = match Cli::try_parse_from(std::iter::once("relfield").chain(args.iter().copied())) {
            Err(e) => (EXIT_USAGE, json!(null), Some(e.to_string())),
            Ok(cli) => match run(&cli.command) {
                Ok(o) => {
                    let output = match o.body {
                        Body::Json(v) => v,
                        Body::Csv(s) => json!(s),
                    };
                    (if o.pass { 0 } else { EXIT_TOLERANCE }, output, None)
                }
                Err(e) => (exit_code(&e), json!(null), Some(e.to_string())),
            },
        };
        worst = worst.max(code);
        let record = json!({"args": args, "exit_code": code, "output": output, "error": error});
        out.push_str(&serde_json::to_string(&record).expect("record serializes"));
        out.push('\n');
    }
    Ok((out, worst))
}

fn configure_threads() {
    if let Some(n) = std::env::var("RELFIELD_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            // Fails only if a pool already exists, in which case it is kept.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::InvalidConfig(format!("cannot write output: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match &cli.command {
        Command::Batch { input } => batch(input),
        command => run(command).map(|o| (render(&o.body), if o.pass { 0 } else { EXIT_TOLERANCE })),
    };
    let code = match result.and_then(|(text, code)| emit(&text, &cli.output).map(|_| code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::UnknownId(_) = e {
                eprintln!("known ids: {}", catalog::IDS.join(", "));
            }
            exit_code(&e)
        }
    };
    ExitCode::from(code)
}
