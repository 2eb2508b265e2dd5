use std::collections::HashMap;

use thiserror::Error;

use super::Value;
use crate::term::{render_term, Ident, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound name `{name}` in `{term}`")]
    Unbound { name: String, term: String },
    #[error("cannot apply non-function {found}{}", context(.term))]
    NotAFunction { found: String, term: Option<String> },
    #[error("expected {expected}, found {found}{}", context(.term))]
    Shape {
        expected: &'static str,
        found: String,
        term: Option<String>,
    },
    #[error("cannot compare function values")]
    ClosureComparison,
}

fn context(term: &Option<String>) -> String {
    term.as_ref()
        .map(|t| format!(" in `{t}`"))
        .unwrap_or_default()
}

impl EvalError {
    pub fn shape(expected: &'static str, found: &Value) -> Self {
        EvalError::Shape {
            expected,
            found: found.to_string(),
            term: None,
        }
    }

    fn at(self, t: &Term) -> Self {
        match self {
            EvalError::NotAFunction { found, term: None } => EvalError::NotAFunction {
                found,
                term: Some(render_term(t)),
            },
            EvalError::Shape {
                expected,
                found,
                term: None,
            } => EvalError::Shape {
                expected,
                found,
                term: Some(render_term(t)),
            },
            other => other,
        }
    }
}

pub type Env = HashMap<Ident, Value>;

/// Environment binding the named globals, e.g. `f` and `g`.
pub fn env_of<'a>(bindings: impl IntoIterator<Item = (&'a str, Value)>) -> Env {
    bindings
        .into_iter()
        .map(|(k, v)| (Ident::named(k), v))
        .collect()
}

fn builtin(name: &str) -> Option<Value> {
    match name {
        "map" => Some(Value::func2("map", |fun, xs| {
            let out = xs
                .as_list()?
                .iter()
                .map(|x| fun.apply(x.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Value::List(out))
        })),
        "fmap" => Some(Value::func2("fmap", |fun, m| {
            Ok(Value::Maybe(match m.as_maybe()? {
                Some(x) => Some(Box::new(fun.apply(x.clone())?)),
                None => None,
            }))
        })),
        _ => None,
    }
}

/// Call-by-value evaluation. Constants `map` and `fmap` are built in; every
/// other free name must be bound by `env`.
pub fn eval(t: &Term, env: &Env) -> Result<Value, EvalError> {
    match t {
        Term::Const(c) => env
            .get(&Ident::named(c.as_str()))
            .cloned()
            .or_else(|| builtin(c))
            .ok_or_else(|| EvalError::Unbound {
                name: c.clone(),
                term: render_term(t),
            }),
        Term::Var(v) => env.get(v).cloned().ok_or_else(|| EvalError::Unbound {
            name: v.to_string(),
            term: render_term(t),
        }),
        Term::App(f, a) => {
            let fun = eval(f, env)?;
            let arg = eval(a, env)?;
            fun.apply(arg).map_err(|e| e.at(t))
        }
        Term::Lam(v, body) => {
            let env = env.clone();
            let v = v.clone();
            let body = (**body).clone();
            let label = render_term(t);
            Ok(Value::func(label, move |arg| {
                let mut inner = env.clone();
                inner.insert(v.clone(), arg);
                eval(&body, &inner)
            }))
        }
    }
}
