//! Free theorems for types polymorphic in one variable.
//!
//! For `f :: forall alpha. sigma` the generator produces the equation
//! `mono_{id,g}(sigma) f = mono_{g,id}(sigma) f`, simplified into plain lambda
//! terms, plus an optional eta-reduced form and a flag saying whether the
//! equation may be weaker than the general free theorem.
//!
//! ```
//! use freethm::{generate, parse_type, render_term};
//!
//! let thm = generate(&parse_type("[a] -> [a]").unwrap());
//! assert_eq!(render_term(&thm.lhs), "\\x1 -> map g (f x1)");
//! assert_eq!(render_term(&thm.rhs), "\\x1 -> f (map g x1)");
//! ```

pub mod cli;
pub mod eta;
pub mod generator;
pub mod oracle;
pub mod polarity;
pub mod term;
pub mod types;

pub use eta::eta_reduce;
pub use generator::{generate, is_id, is_simple, mono, simplify_apply, skeleton, Theorem};
pub use polarity::{annotate, requires_precondition, PolType, Sign};
pub use term::{alpha_eq, free_in, render_func, render_term, FuncExpr, Ident, Term};
pub use types::{parse_type, render_type, TypeExpr, TypeParseError};
