//! Semantic validation of generated theorems by direct evaluation on
//! concrete instances.

mod catalogue;
mod check;
mod eval;
mod reader;
mod value;

pub use catalogue::{
    catalogue, find_entry, plus_three, CatalogueEntry, FImpl, ValueGen, INT_RANGE, MAX_LIST_LEN,
};
pub use check::{check_theorem, CheckReport, Counterexample, ImplReport};
pub use eval::{env_of, eval, Env, EvalError};
pub use reader::{parse_term, TermParseError};
pub use value::{Closure, Value};
