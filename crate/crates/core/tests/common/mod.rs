#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Stdio};

use freethm::{Term, TypeExpr};
use proptest::prelude::*;

/// Collapses every whitespace run (including line breaks) to one space.
pub fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

/// Runs the binary; returns (exit code, stdout, stderr).
pub fn run_bin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freethm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn freethm");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Interactive output as a terminal would show it, with the typed line
/// echoed after the prompt.
pub fn with_echo(output: &str, typed: &str) -> String {
    let prompt = freethm::cli::PROMPT;
    output.replacen(prompt, &format!("{prompt}{typed}\n"), 1)
}

pub fn arb_type() -> impl Strategy<Value = TypeExpr> {
    let leaf = prop_oneof![
        3 => Just(TypeExpr::Var),
        1 => Just(TypeExpr::Bool),
        1 => Just(TypeExpr::Int),
    ];
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            1 => inner.clone().prop_map(TypeExpr::list),
            1 => inner.clone().prop_map(TypeExpr::maybe),
            3 => (inner.clone(), inner).prop_map(|(a, r)| TypeExpr::arrow(a, r)),
        ]
    })
}

pub fn type_depth(t: &TypeExpr) -> usize {
    match t {
        TypeExpr::Var | TypeExpr::Bool | TypeExpr::Int => 0,
        TypeExpr::List(e) | TypeExpr::Maybe(e) => 1 + type_depth(e),
        TypeExpr::Arrow(a, r) => 1 + type_depth(a).max(type_depth(r)),
    }
}

fn is_simple_chain(t: &Term) -> bool {
    match t {
        Term::Var(_) => true,
        Term::App(h, a) => {
            matches!(&**h, Term::Const(c) if c == "map" || c == "fmap") && is_simple_chain(a)
        }
        _ => false,
    }
}

/// No `id`, no composition, and every `map`/`fmap` gets either a simple
/// chain or an explicit abstraction as its function argument.
pub fn check_simplified(t: &Term) -> Result<(), String> {
    match t {
        Term::Const(c) if c == "id" || c == "." => Err(format!("leftover constant `{c}`")),
        Term::Var(freethm::Ident::Named(n)) if n == "id" || n == "pre" || n == "post" => {
            Err(format!("leftover name `{n}`"))
        }
        Term::Const(_) | Term::Var(_) => Ok(()),
        Term::App(h, a) => {
            if let Term::Const(c) = &**h {
                if (c == "map" || c == "fmap") && !(is_simple_chain(a) || matches!(**a, Term::Lam(..))) {
                    return Err(format!("`{c}` applied to {}", freethm::render_term(a)));
                }
            }
            check_simplified(h)?;
            check_simplified(a)
        }
        Term::Lam(_, b) => check_simplified(b),
    }
}

/// Numeric suffixes of `x<n>` binders, in order of appearance after `\`.
pub fn binder_numbers(rendered: &str) -> Vec<u32> {
    let mut out = Vec::new();
    let mut in_binders = false;
    for tok in rendered
        .replace('\\', " \\ ")
        .replace(['(', ')'], " ")
        .split_whitespace()
    {
        match tok {
            "\\" => in_binders = true,
            "->" => in_binders = false,
            t if in_binders => out.push(t.trim_start_matches('x').parse().unwrap()),
            _ => {}
        }
    }
    out
}
