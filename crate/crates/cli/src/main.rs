use std::io::Write;
use std::process::ExitCode;

use bezout_gw_cli::{run, Query, DEFAULT_OUTPUTS, EXIT_INPUT};
use clap::error::ErrorKind;
use clap::Parser;

/// Exact Bezout, Hankel, Newton and Vandermonde forms of a rational function.
#[derive(Parser, Debug)]
#[command(name = "bezout-gw", version)]
struct Args {
    /// Rational function in x, e.g. "(x^2-1)/2".
    #[arg(allow_hyphen_values = true)]
    expr: String,

    /// Field: Q, F<p>, Q[t]/(m), F<p>[t]/(m), optionally Q[t]/(m)@[lo,hi] to order an extension.
    #[arg(long, default_value = "Q")]
    field: String,

    /// Comma-separated: bez, s, new, van, transitions, gram:<basis>, invariants,
    /// degree, a1, unstable, verify, cauchy, all.
    #[arg(long, default_value = DEFAULT_OUTPUTS)]
    outputs: String,

    /// Roots of f with multiplicities, "r1:m1,r2:m2,...", as polynomials in t.
    #[arg(long)]
    roots: Option<String>,

    /// Emit a single JSON object.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INPUT as u8),
            };
        }
    };
    let outcome = run(&Query {
        expression: args.expr,
        field: args.field,
        outputs: args.outputs,
        roots: args.roots,
        json: args.json,
    });
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
