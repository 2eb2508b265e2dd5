//! Free theorem generation: `mono` builds the mediating function expression
//! for a type, and [`simplify_apply`] turns `mono(σ) f` into a plain lambda
//! term with all compositions inlined and identities removed.
//!
//! Supporting another datatype only needs a new `mono` case naming its
//! functorial map; the simplifier treats every `Map` node uniformly.

use serde::Serialize;

use crate::eta::eta_reduce;
use crate::polarity::requires_precondition;
use crate::term::{render_func, render_term, FuncExpr, NameSupply, Term};
use crate::types::{render_type, TypeExpr};

/// Name of the function the theorem is about.
pub const F: &str = "f";
/// Name of the function relating the two instantiations.
pub const G: &str = "g";

/// Builds `mono_{pre,post}(sigma)`. Argument positions swap `pre` and `post`.
pub fn mono(sigma: &TypeExpr, pre: &FuncExpr, post: &FuncExpr) -> FuncExpr {
    let mut supply = NameSupply::starting_at(0);
    supply.bump_above(pre.max_fresh().max(post.max_fresh()));
    mono_with(sigma, pre, post, &mut supply)
}

fn mono_with(
    sigma: &TypeExpr,
    pre: &FuncExpr,
    post: &FuncExpr,
    supply: &mut NameSupply,
) -> FuncExpr {
    match sigma {
        TypeExpr::Var => post.clone(),
        TypeExpr::Bool | TypeExpr::Int => FuncExpr::Id,
        TypeExpr::List(s) => FuncExpr::map("map", mono_with(s, pre, post, supply)),
        TypeExpr::Maybe(s) => FuncExpr::map("fmap", mono_with(s, pre, post, supply)),
        TypeExpr::Arrow(s, t) => {
            let h = supply.fresh();
            let result_side = mono_with(t, pre, post, supply);
            let arg_side = mono_with(s, post, pre, supply);
            FuncExpr::lambda(
                h.clone(),
                FuncExpr::compose(
                    result_side,
                    FuncExpr::compose(FuncExpr::Embed(Term::Var(h)), arg_side),
                ),
            )
        }
    }
}

/// `Id = id | map Id | fmap Id | Id . Id`
pub fn is_id(f: &FuncExpr) -> bool {
    match f {
        FuncExpr::Id => true,
        FuncExpr::Map(_, inner) => is_id(inner),
        FuncExpr::Compose(l, r) => is_id(l) && is_id(r),
        _ => false,
    }
}

/// `Simple = v | map Simple | fmap Simple`, returned as the equivalent term.
pub fn is_simple(f: &FuncExpr) -> Option<Term> {
    match f {
        FuncExpr::Embed(t @ Term::Var(_)) => Some(t.clone()),
        FuncExpr::Map(name, inner) => {
            is_simple(inner).map(|t| Term::app(Term::Const(name.clone()), t))
        }
        _ => None,
    }
}

/// Computes the simplified form of applying `f` to `t`.
pub fn simplify_apply(f: &FuncExpr, t: &Term) -> Term {
    let mut supply = NameSupply::above([t]);
    supply.bump_above(f.max_fresh());
    apply(f, t.clone(), &mut supply)
}

fn apply(f: &FuncExpr, t: Term, supply: &mut NameSupply) -> Term {
    if is_id(f) {
        return t;
    }
    if let Some(head) = is_simple(f) {
        return Term::app(head, t);
    }
    match f {
        FuncExpr::Map(name, inner) => {
            let v = supply.fresh();
            let body = apply(inner, Term::Var(v.clone()), supply);
            Term::app(Term::app(Term::Const(name.clone()), Term::lam(v, body)), t)
        }
        FuncExpr::Lambda(h, body) => {
            let v = supply.fresh();
            let body = body.subst(h, &t, supply);
            Term::lam(v.clone(), apply(&body, Term::Var(v), supply))
        }
        FuncExpr::Compose(l, r) => {
            let inner = apply(r, t, supply);
            apply(l, inner, supply)
        }
        FuncExpr::Embed(head) => Term::app(head.clone(), t),
        FuncExpr::Id => unreachable!("identity handled above"),
    }
}

/// Everything produced for one type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem {
    pub sigma: TypeExpr,
    /// `mono_{pre,post}(sigma)`; the conjured term is this applied to `f`.
    pub e_term: FuncExpr,
    pub lhs: Term,
    pub rhs: Term,
    pub lhs_eta: Term,
    pub rhs_eta: Term,
    pub fully_general: bool,
}

/// Rendered form of a [`Theorem`], as emitted by `--json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct TheoremRecord {
    pub sigma: String,
    pub e_term: String,
    pub lhs: String,
    pub rhs: String,
    pub lhs_eta: String,
    pub rhs_eta: String,
    pub fully_general: bool,
}

impl Theorem {
    pub fn record(&self) -> TheoremRecord {
        TheoremRecord {
            sigma: render_type(&self.sigma),
            e_term: format!("{} {F}", render_func(&self.e_term)),
            lhs: render_term(&self.lhs),
            rhs: render_term(&self.rhs),
            lhs_eta: render_term(&self.lhs_eta),
            rhs_eta: render_term(&self.rhs_eta),
            fully_general: self.fully_general,
        }
    }
}

pub fn generate(sigma: &TypeExpr) -> Theorem {
    let e_term = mono(sigma, &FuncExpr::named("pre"), &FuncExpr::named("post"));
    let f = Term::constant(F);
    let g = FuncExpr::named(G);
    let lhs = simplify_apply(&mono(sigma, &FuncExpr::Id, &g), &f);
    let rhs = simplify_apply(&mono(sigma, &g, &FuncExpr::Id), &f);
    Theorem {
        sigma: sigma.clone(),
        e_term,
        lhs_eta: eta_reduce(&lhs),
        rhs_eta: eta_reduce(&rhs),
        lhs,
        rhs,
        fully_general: !requires_precondition(sigma),
    }
}

/// True for heads built only from `g` and `map`/`fmap` chains over it.
fn is_g_like(t: &Term) -> bool {
    match t {
        Term::Var(v) => *v == crate::term::Ident::named(G),
        Term::App(head, arg) => {
            matches!(&**head, Term::Const(c) if c == "map" || c == "fmap") && is_g_like(arg)
        }
        _ => false,
    }
}

/// Erases every application of a `g`-like head, leaving the type-shaped
/// skeleton that both sides of a theorem share.
pub fn skeleton(t: &Term) -> Term {
    match t {
        Term::App(head, arg) if is_g_like(head) => skeleton(arg),
        Term::App(head, arg) => Term::app(skeleton(head), skeleton(arg)),
        Term::Lam(v, body) => Term::lam(v.clone(), skeleton(body)),
        Term::Const(_) | Term::Var(_) => t.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{alpha_eq, Ident};
    use crate::types::parse_type;

    fn ty(s: &str) -> TypeExpr {
        parse_type(s).unwrap()
    }

    fn pre_post(s: &str) -> String {
        render_func(&mono(
            &ty(s),
            &FuncExpr::named("pre"),
            &FuncExpr::named("post"),
        ))
    }

    #[test]
    fn mono_base_cases() {
        let (pre, post) = (FuncExpr::named("pre"), FuncExpr::named("post"));
        assert_eq!(mono(&TypeExpr::Var, &pre, &post), post);
        assert_eq!(mono(&TypeExpr::Bool, &pre, &post), FuncExpr::Id);
        assert_eq!(mono(&TypeExpr::Int, &pre, &post), FuncExpr::Id);
        assert_eq!(
            mono(&TypeExpr::list(TypeExpr::Var), &pre, &post),
            FuncExpr::map("map", post.clone())
        );
        assert_eq!(
            mono(&TypeExpr::maybe(TypeExpr::Var), &pre, &post),
            FuncExpr::map("fmap", post)
        );
    }

    #[test]
    fn mono_worked_example() {
        assert_eq!(
            pre_post("(a -> Bool) -> [a] -> Maybe a"),
            "(\\h1 -> (\\h2 -> fmap post . h2 . map pre) . h1 . (\\h3 -> id . h3 . post))"
        );
    }

    #[test]
    fn mono_session_terms() {
        assert_eq!(
            pre_post("(a -> Bool) -> (Bool -> a) -> [a] -> a"),
            "(\\h1 -> (\\h2 -> (\\h3 -> post . h3 . map pre) . h2 . (\\h4 -> pre . h4 . id)) . h1 . (\\h5 -> id . h5 . post))"
        );
        assert_eq!(
            pre_post("(a -> a -> Bool) -> [a] -> [a]"),
            "(\\h1 -> (\\h2 -> map post . h2 . map pre) . h1 . (\\h3 -> (\\h4 -> id . h4 . post) . h3 . post))"
        );
    }

    #[test]
    fn mono_is_linear() {
        let f = mono(
            &ty("((a -> a) -> [Maybe a]) -> a -> [a -> Int]"),
            &FuncExpr::named("pre"),
            &FuncExpr::named("post"),
        );
        assert!(f.is_linear());
    }

    #[test]
    fn id_grammar() {
        assert!(is_id(&FuncExpr::Id));
        assert!(is_id(&FuncExpr::map("map", FuncExpr::Id)));
        assert!(is_id(&FuncExpr::compose(
            FuncExpr::map("fmap", FuncExpr::Id),
            FuncExpr::Id
        )));
        assert!(!is_id(&FuncExpr::lambda(Ident::Fresh(0), FuncExpr::Id)));
        assert!(!is_id(&FuncExpr::named("g")));
    }

    #[test]
    fn simple_grammar() {
        assert_eq!(is_simple(&FuncExpr::named("g")), Some(Term::var("g")));
        assert_eq!(
            is_simple(&FuncExpr::map("fmap", FuncExpr::named("g"))),
            Some(Term::app(Term::constant("fmap"), Term::var("g")))
        );
        assert_eq!(
            is_simple(&FuncExpr::compose(FuncExpr::named("g"), FuncExpr::named("g"))),
            None
        );
        // constants are not variables
        assert_eq!(is_simple(&FuncExpr::Embed(Term::constant("f"))), None);
    }

    #[test]
    fn apply_rules() {
        let v2 = Term::var("v2");
        assert_eq!(
            simplify_apply(&FuncExpr::map("map", FuncExpr::Id), &v2),
            v2
        );
        assert_eq!(
            simplify_apply(&FuncExpr::Embed(Term::constant("f")), &Term::var("v1")),
            Term::app(Term::constant("f"), Term::var("v1"))
        );
        // map over a non-simple, non-identity function is eta-expanded
        let h = Ident::Fresh(0);
        let lam = FuncExpr::lambda(
            h.clone(),
            FuncExpr::compose(
                FuncExpr::named("g"),
                FuncExpr::compose(FuncExpr::Embed(Term::Var(h)), FuncExpr::Id),
            ),
        );
        let out = simplify_apply(&FuncExpr::map("map", lam), &Term::var("xs"));
        assert_eq!(render_term(&out), "map (\\x1 x2 -> g (x1 x2)) xs");
    }

    #[test]
    fn fig1_calculation_with_extra_rules() {
        let sigma = ty("(a -> Bool) -> [a] -> Maybe a");
        let lhs = simplify_apply(
            &mono(&sigma, &FuncExpr::Id, &FuncExpr::named("g")),
            &Term::constant("f"),
        );
        assert_eq!(render_term(&lhs), "\\x1 x2 -> fmap g (f (\\x3 -> x1 (g x3)) x2)");
    }

    #[test]
    fn list_endomorphism() {
        let t = generate(&ty("[a] -> [a]"));
        assert_eq!(render_term(&t.lhs), "\\x1 -> map g (f x1)");
        assert_eq!(render_term(&t.rhs), "\\x1 -> f (map g x1)");
        assert!(t.fully_general);
    }

    #[test]
    fn session_theorems() {
        let t = generate(&ty("(alpha -> Bool) -> (Bool -> alpha) -> [alpha] -> alpha"));
        assert_eq!(
            render_term(&t.lhs),
            "\\x1 x2 x3 -> g (f (\\x4 -> x1 (g x4)) (\\x5 -> x2 x5) x3)"
        );
        assert_eq!(
            render_term(&t.rhs),
            "\\x1 x2 x3 -> f (\\x4 -> x1 x4) (\\x5 -> g (x2 x5)) (map g x3)"
        );
        let t = generate(&ty("(a -> a -> Bool) -> [a] -> [a]"));
        assert_eq!(
            render_term(&t.lhs),
            "\\x1 x2 -> map g (f (\\x3 x4 -> x1 (g x3) (g x4)) x2)"
        );
        assert_eq!(render_term(&t.rhs), "\\x1 x2 -> f (\\x3 x4 -> x1 x3 x4) (map g x2)");
    }

    #[test]
    fn base_and_variable_types() {
        let t = generate(&TypeExpr::Var);
        assert_eq!(render_term(&t.lhs), "g f");
        assert_eq!(render_term(&t.rhs), "f");
        let t = generate(&TypeExpr::Int);
        assert_eq!(t.lhs, t.rhs);
    }

    #[test]
    fn skeleton_erases_g() {
        let t = generate(&ty("(a -> Bool) -> (Bool -> a) -> [a] -> a"));
        assert!(alpha_eq(&skeleton(&t.lhs), &skeleton(&t.rhs)));
        let expected = Term::constant("f");
        assert_eq!(skeleton(&Term::app(Term::var("g"), expected.clone())), expected);
        let mapped = Term::constant("map").apply_all([
            Term::app(Term::constant("fmap"), Term::var("g")),
            Term::var("xs"),
        ]);
        assert_eq!(skeleton(&mapped), Term::var("xs"));
    }

    #[test]
    fn generate_is_deterministic() {
        let s = ty("((a -> Int) -> a) -> Maybe [a]");
        assert_eq!(generate(&s), generate(&s));
    }
}
