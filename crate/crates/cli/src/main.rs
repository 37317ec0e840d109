use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use fpf5_cli::cache::Cache;
use fpf5_cli::{resolve, run, RunOptions};

/// Recompute the group-theoretic claims and report pass/fail per check.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Check ids, or `all`.
    #[arg(required = true)]
    checks: Vec<String>,
    /// Restrict prime sweeps to these primes (repeatable).
    #[arg(long = "prime", value_name = "R")]
    primes: Vec<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Directory for stored stabilizer chains.
    #[arg(long, value_name = "DIR", default_value = ".verify-cache")]
    cache: PathBuf,
    /// Rebuild every chain instead of reading stored ones.
    #[arg(long)]
    no_cache: bool,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let checks = match resolve(&args.checks) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions {
        seed: args.seed,
        primes: args.primes,
        cache: Some(Cache::new(&args.cache, !args.no_cache)),
    };
    let report = run(&checks, &opts, |r| {
        println!("{:<6} {:<14} {}", r.status.label(), r.check_id, r.computed);
        if !r.status.is_pass() && !r.expected.is_empty() {
            println!("{:<21} expected: {}", "", r.expected);
        }
    });
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
