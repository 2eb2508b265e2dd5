//! Eta-reduction of output terms.
//!
//! Only sound where `\x -> t x` and `t` are indistinguishable, so it is kept
//! as a separate pass instead of being part of simplification.

use crate::term::{free_in, Term};

fn pass(t: &Term) -> Term {
    match t {
        Term::Const(_) | Term::Var(_) => t.clone(),
        Term::App(f, a) => Term::app(pass(f), pass(a)),
        Term::Lam(v, body) => {
            let body = pass(body);
            match body {
                Term::App(u, arg) if matches!(&*arg, Term::Var(w) if w == v) && !free_in(v, &u) => {
                    *u
                }
                body => Term::lam(v.clone(), body),
            }
        }
    }
}

/// Bottom-up eta-reduction. One pass removes every redex; the second pass
/// only confirms that.
pub fn eta_reduce(t: &Term) -> Term {
    let mut cur = pass(t);
    loop {
        let next = pass(&cur);
        debug_assert_eq!(next, cur, "eta reduction needed a second pass");
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Whether `t` still contains a subterm `\v -> u v` with `v` not free in `u`.
pub fn has_eta_redex(t: &Term) -> bool {
    match t {
        Term::Const(_) | Term::Var(_) => false,
        Term::App(f, a) => has_eta_redex(f) || has_eta_redex(a),
        Term::Lam(v, body) => {
            let here = matches!(&**body, Term::App(u, arg)
                if matches!(&**arg, Term::Var(w) if w == v) && !free_in(v, u));
            here || has_eta_redex(body)
        }
    }
}
