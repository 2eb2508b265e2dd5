use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{env_of, eval, CatalogueEntry, EvalError, Value};
use crate::generator::{generate, Theorem, F, G};
use crate::term::Term;
use crate::types::render_type;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    /// `x1 = ...` style bindings for the theorem's arguments.
    pub args: Vec<String>,
    /// Which pair of sides disagreed, e.g. `lhs = rhs`.
    pub comparison: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplReport {
    pub name: String,
    pub parametric: bool,
    pub trials: usize,
    pub failures: usize,
    pub counterexample: Option<Counterexample>,
    pub error: Option<String>,
}

impl ImplReport {
    /// Parametric implementations must never fail; plants must be caught.
    pub fn as_expected(&self) -> bool {
        if self.parametric {
            self.failures == 0 && self.error.is_none()
        } else {
            self.failures > 0 && self.error.is_none()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub entry: String,
    pub sigma: String,
    pub trials: usize,
    pub seed: u64,
    pub impls: Vec<ImplReport>,
}

impl CheckReport {
    pub fn all_as_expected(&self) -> bool {
        self.impls.iter().all(ImplReport::as_expected)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "check {} :: {} ({} trials, seed {})",
            self.entry, self.sigma, self.trials, self.seed
        )?;
        for r in &self.impls {
            let kind = if r.parametric { "parametric" } else { "plant" };
            let verdict = match (r.parametric, r.as_expected()) {
                (true, true) => "holds",
                (true, false) => "FAILED",
                (false, true) => "caught",
                (false, false) => "MISSED",
            };
            write!(
                f,
                "  {:<20} {:<10} {:<6} {}/{} failing trials",
                r.name, kind, verdict, r.failures, r.trials
            )?;
            if let Some(e) = &r.error {
                write!(f, "; error: {e}")?;
            }
            writeln!(f)?;
            if let Some(c) = &r.counterexample {
                writeln!(
                    f,
                    "      first counterexample (trial {}): {}",
                    c.trial,
                    c.args.join(", ")
                )?;
                writeln!(f, "      {}: {} vs {}", c.comparison, c.left, c.right)?;
            }
        }
        Ok(())
    }
}

/// Random number generator for one trial; independent of the implementation
/// under test so every implementation sees the same inputs.
fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn eval_applied(t: &Term, f: &Value, g: &Value, args: &[Value]) -> Result<Value, EvalError> {
    let env = env_of([(F, f.clone()), (G, g.clone())]);
    eval(t, &env)?.apply_all(args.iter().cloned())
}

/// One trial. `Ok(None)` when every comparison agrees.
fn run_trial(
    thm: &Theorem,
    entry: &CatalogueEntry,
    f: &Value,
    trial: usize,
    args: &[Value],
) -> Result<Option<Counterexample>, EvalError> {
    let g = &entry.g;
    let lhs = eval_applied(&thm.lhs, f, g, args)?;
    let rhs = eval_applied(&thm.rhs, f, g, args)?;
    let lhs_eta = eval_applied(&thm.lhs_eta, f, g, args)?;
    let rhs_eta = eval_applied(&thm.rhs_eta, f, g, args)?;
    let pairs = [
        ("lhs = rhs", &lhs, &rhs),
        ("lhs_eta = rhs_eta", &lhs_eta, &rhs_eta),
        ("lhs = lhs_eta", &lhs, &lhs_eta),
        ("rhs = rhs_eta", &rhs, &rhs_eta),
    ];
    for (what, a, b) in pairs {
        if !a.structural_eq(b)? {
            return Ok(Some(Counterexample {
                trial,
                args: args
                    .iter()
                    .enumerate()
                    .map(|(i, v)| format!("x{} = {v}", i + 1))
                    .collect(),
                comparison: what.to_string(),
                left: a.to_string(),
                right: b.to_string(),
            }));
        }
    }
    Ok(None)
}

/// Evaluates both sides of the generated theorem (and their eta-reduced
/// forms) on `trials` seeded random argument tuples, per implementation.
pub fn check_theorem(entry: &CatalogueEntry, trials: usize, seed: u64) -> CheckReport {
    let thm = generate(&entry.sigma);
    let inputs: Vec<Vec<Value>> = (0..trials)
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            entry.inputs.iter().map(|g| g.generate(&mut rng)).collect()
        })
        .collect();

    let impls = entry
        .impls
        .iter()
        .map(|imp| {
            let mut report = ImplReport {
                name: imp.name.to_string(),
                parametric: imp.parametric,
                trials,
                failures: 0,
                counterexample: None,
                error: None,
            };
            for (i, args) in inputs.iter().enumerate() {
                match run_trial(&thm, entry, &imp.value, i, args) {
                    Ok(None) => {}
                    Ok(Some(cx)) => {
                        report.failures += 1;
                        report.counterexample.get_or_insert(cx);
                    }
                    Err(e) => {
                        report.failures += 1;
                        report.error = Some(format!("trial {i}: {e}"));
                        break;
                    }
                }
            }
            report
        })
        .collect();

    CheckReport {
        entry: entry.name.to_string(),
        sigma: render_type(&entry.sigma),
        trials,
        seed,
        impls,
    }
}
