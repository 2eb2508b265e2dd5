//! Command-line front end.

use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use crate::generator::{generate, Theorem, TheoremRecord, F};
use crate::oracle::{check_theorem, find_entry, CheckReport};
use crate::term::{render_func, render_term};
use crate::types::{parse_type, render_type, TypeExpr};

pub const PROMPT: &str = "function type (or Enter for default): ";
pub const SEPARATOR_WIDTH: usize = 66;
pub const GENERALITY_NOTE: &str =
    "note: equation may lose generality (precondition-requiring type)";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE_ERROR: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Print the free theorem of a polymorphic function type.
#[derive(Debug, Parser)]
#[command(name = "freethm", version)]
struct Args {
    /// Type to analyse, e.g. "(a -> Bool) -> [a] -> [a]". Prompts on stdin when absent.
    #[arg(long = "type", value_name = "TYPE")]
    ty: Option<String>,
    /// Do not print the eta-reduced theorem.
    #[arg(long)]
    no_eta: bool,
    /// Check the theorem on N random instances if the type is catalogued.
    #[arg(long, value_name = "N", num_args = 0..=1, default_missing_value = "1000")]
    check: Option<usize>,
    /// Seed for --check.
    #[arg(long, value_name = "INT", default_value_t = 0)]
    seed: u64,
    /// Emit one JSON record instead of the text report.
    #[arg(long)]
    json: bool,
}

/// The type used when the prompt is answered with an empty line.
pub fn default_type() -> TypeExpr {
    use TypeExpr::*;
    TypeExpr::arrow(
        TypeExpr::arrow(Var, Bool),
        TypeExpr::arrow(
            TypeExpr::arrow(Bool, Var),
            TypeExpr::arrow(TypeExpr::list(Var), Var),
        ),
    )
}

fn separator() -> String {
    "-".repeat(SEPARATOR_WIDTH)
}

/// Text report in the session format.
pub fn render_session(thm: &Theorem, eta: bool) -> String {
    let mut out = String::new();
    let sep = separator();
    out.push_str(&format!("f :: {}\n", render_type(&thm.sigma)));
    out.push_str(&format!("{sep}\n"));
    out.push_str(&format!("e = {} {F}\n", render_func(&thm.e_term)));
    out.push_str(&format!("{sep}\n"));
    out.push_str("free theorem:\n");
    out.push_str(&format!(" {}\n  =\n {}\n", render_term(&thm.lhs), render_term(&thm.rhs)));
    if eta {
        out.push_str(&format!("{sep}\n"));
        out.push_str("free theorem, eta-reduced:\n");
        out.push_str(&format!(
            " {}\n  =\n {}\n",
            render_term(&thm.lhs_eta),
            render_term(&thm.rhs_eta)
        ));
    }
    if !thm.fully_general {
        out.push_str(GENERALITY_NOTE);
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonOutput {
    #[serde(flatten)]
    theorem: TheoremRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<CheckReport>,
}

fn report_parse_error<E: Write>(err: &mut E, text: &str, e: &crate::types::TypeParseError) {
    let _ = writeln!(err, "parse error: {e}");
    let _ = writeln!(err, "  {text}");
    let col = text[..e.position().min(text.len())].chars().count();
    let _ = writeln!(err, "  {}^", " ".repeat(col));
}

/// Runs the tool; returns the process exit code.
pub fn run<R, W, E>(args: &[String], mut input: R, out: &mut W, err: &mut E) -> i32
where
    R: BufRead,
    W: Write,
    E: Write,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };

    let (text, interactive) = match &args.ty {
        Some(t) => (t.clone(), false),
        None => {
            if !args.json {
                let _ = write!(out, "{PROMPT}");
                let _ = out.flush();
            }
            let mut line = String::new();
            if let Err(e) = input.read_line(&mut line) {
                let _ = writeln!(err, "error: failed to read type: {e}");
                return EXIT_USAGE;
            }
            (line.trim_end_matches(['\n', '\r']).to_string(), true)
        }
    };

    let sigma = if interactive && text.trim().is_empty() {
        default_type()
    } else {
        match parse_type(&text) {
            Ok(t) => t,
            Err(e) => {
                report_parse_error(err, &text, &e);
                return EXIT_PARSE_ERROR;
            }
        }
    };

    let thm = generate(&sigma);
    let report = args.check.and_then(|n| {
        find_entry(&sigma).map(|entry| check_theorem(&entry, n, args.seed))
    });
    let code = match &report {
        Some(r) if !r.all_as_expected() => EXIT_CHECK_FAILED,
        _ => EXIT_OK,
    };

    if args.json {
        let record = JsonOutput {
            theorem: thm.record(),
            check: report,
        };
        let json = serde_json::to_string(&record).expect("record serializes");
        let _ = writeln!(out, "{json}");
        return code;
    }

    if interactive {
        let _ = writeln!(out);
    }
    let _ = write!(out, "{}", render_session(&thm, !args.no_eta));
    if args.check.is_some() {
        let _ = writeln!(out, "{}", separator());
        match &report {
            Some(r) => {
                let _ = write!(out, "{r}");
            }
            None => {
                let _ = writeln!(
                    out,
                    "no catalogued instances for {}; check skipped",
                    render_type(&sigma)
                );
            }
        }
    }
    if interactive {
        let _ = writeln!(out);
    }
    let _ = out.flush();
    code
}
