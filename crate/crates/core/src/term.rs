//! The two term languages: [`FuncExpr`], the function-level language built by
//! `mono`, and [`Term`], the lambda terms theorems are stated in.
//!
//! Binders use globally fresh names. Every binder introduced by the generator
//! is an [`Ident::Fresh`] drawn from a [`NameSupply`] that starts above every
//! fresh id already present in its inputs, so substitution of generator terms
//! never captures. Printable names (`x1`, `h1`, ...) are assigned only when
//! rendering.

use std::collections::{HashMap, HashSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ident {
    Named(String),
    Fresh(u32),
}

impl Ident {
    pub fn named(s: impl Into<String>) -> Self {
        Ident::Named(s.into())
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ident::Named(s) => f.write_str(s),
            Ident::Fresh(n) => write!(f, "*{n}"),
        }
    }
}

/// Monotone supply of fresh binder ids.
#[derive(Clone, Debug, Default)]
pub struct NameSupply {
    next: u32,
}

impl NameSupply {
    pub fn starting_at(next: u32) -> Self {
        NameSupply { next }
    }

    /// A supply whose ids are all larger than any fresh id in `terms`.
    pub fn above<'a>(terms: impl IntoIterator<Item = &'a Term>) -> Self {
        let next = terms
            .into_iter()
            .filter_map(Term::max_fresh)
            .max()
            .map_or(0, |m| m + 1);
        NameSupply { next }
    }

    pub fn fresh(&mut self) -> Ident {
        let id = self.next;
        self.next += 1;
        Ident::Fresh(id)
    }

    pub(crate) fn bump_above(&mut self, max: Option<u32>) {
        if let Some(m) = max {
            self.next = self.next.max(m + 1);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Const(String),
    Var(Ident),
    App(Box<Term>, Box<Term>),
    Lam(Ident, Box<Term>),
}

impl Term {
    pub fn constant(name: impl Into<String>) -> Self {
        Term::Const(name.into())
    }

    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(Ident::Named(name.into()))
    }

    pub fn app(fun: Term, arg: Term) -> Self {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn lam(var: Ident, body: Term) -> Self {
        Term::Lam(var, Box::new(body))
    }

    /// Applies `self` to each argument in turn.
    pub fn apply_all(self, args: impl IntoIterator<Item = Term>) -> Self {
        args.into_iter().fold(self, Term::app)
    }

    /// Number of leading abstractions.
    pub fn leading_lambdas(&self) -> usize {
        let mut n = 0;
        let mut cur = self;
        while let Term::Lam(_, body) = cur {
            n += 1;
            cur = body;
        }
        n
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Lam(_, b) => 1 + b.size(),
        }
    }

    pub fn max_fresh(&self) -> Option<u32> {
        match self {
            Term::Const(_) | Term::Var(Ident::Named(_)) => None,
            Term::Var(Ident::Fresh(n)) => Some(*n),
            Term::App(f, a) => f.max_fresh().max(a.max_fresh()),
            Term::Lam(v, b) => {
                let own = match v {
                    Ident::Fresh(n) => Some(*n),
                    Ident::Named(_) => None,
                };
                own.max(b.max_fresh())
            }
        }
    }

    /// Free variables, in order of first occurrence.
    pub fn free_vars(&self) -> Vec<Ident> {
        fn go(t: &Term, bound: &mut Vec<Ident>, out: &mut Vec<Ident>) {
            match t {
                Term::Const(_) => {}
                Term::Var(v) => {
                    if !bound.contains(v) && !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Term::App(f, a) => {
                    go(f, bound, out);
                    go(a, bound, out);
                }
                Term::Lam(v, b) => {
                    bound.push(v.clone());
                    go(b, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Names of constants occurring anywhere in the term.
    pub fn constants(&self) -> Vec<&str> {
        fn go<'a>(t: &'a Term, out: &mut Vec<&'a str>) {
            match t {
                Term::Const(c) => {
                    if !out.contains(&c.as_str()) {
                        out.push(c);
                    }
                }
                Term::Var(_) => {}
                Term::App(f, a) => {
                    go(f, out);
                    go(a, out);
                }
                Term::Lam(_, b) => go(b, out),
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Capture-avoiding substitution of `replacement` for free occurrences of `var`.
    pub fn subst(&self, var: &Ident, replacement: &Term, supply: &mut NameSupply) -> Term {
        match self {
            Term::Const(_) => self.clone(),
            Term::Var(v) if v == var => replacement.clone(),
            Term::Var(_) => self.clone(),
            Term::App(f, a) => Term::app(
                f.subst(var, replacement, supply),
                a.subst(var, replacement, supply),
            ),
            Term::Lam(v, _) if v == var => self.clone(),
            Term::Lam(v, body) => {
                if !free_in(var, body) {
                    return self.clone();
                }
                if free_in(v, replacement) {
                    supply.bump_above(replacement.max_fresh().max(body.max_fresh()));
                    let renamed = supply.fresh();
                    let body = body.subst(v, &Term::Var(renamed.clone()), supply);
                    Term::lam(renamed, body.subst(var, replacement, supply))
                } else {
                    Term::lam(v.clone(), body.subst(var, replacement, supply))
                }
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_term(self))
    }
}

/// True iff `v` occurs free in `t`.
pub fn free_in(v: &Ident, t: &Term) -> bool {
    match t {
        Term::Const(_) => false,
        Term::Var(w) => w == v,
        Term::App(f, a) => free_in(v, f) || free_in(v, a),
        Term::Lam(w, b) => w != v && free_in(v, b),
    }
}

/// Structural equality up to renaming of bound variables.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    fn lookup(stack: &[Ident], v: &Ident) -> Option<usize> {
        stack.iter().rev().position(|w| w == v)
    }
    fn go(a: &Term, b: &Term, sa: &mut Vec<Ident>, sb: &mut Vec<Ident>) -> bool {
        match (a, b) {
            (Term::Const(x), Term::Const(y)) => x == y,
            (Term::Var(x), Term::Var(y)) => match (lookup(sa, x), lookup(sb, y)) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            },
            (Term::App(f1, a1), Term::App(f2, a2)) => go(f1, f2, sa, sb) && go(a1, a2, sa, sb),
            (Term::Lam(x, b1), Term::Lam(y, b2)) => {
                sa.push(x.clone());
                sb.push(y.clone());
                let r = go(b1, b2, sa, sb);
                sa.pop();
                sb.pop();
                r
            }
            _ => false,
        }
    }
    go(a, b, &mut Vec::new(), &mut Vec::new())
}

/// Function-level expressions produced by `mono`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FuncExpr {
    Id,
    /// Functorial action, e.g. `map` for lists and `fmap` for `Maybe`.
    Map(String, Box<FuncExpr>),
    /// `Compose(f, g)` is `f . g`.
    Compose(Box<FuncExpr>, Box<FuncExpr>),
    /// `\h -> body`; `h` is referenced in the body as `Embed(Term::Var(h))`.
    Lambda(Ident, Box<FuncExpr>),
    Embed(Term),
}

impl FuncExpr {
    pub fn map(name: impl Into<String>, inner: FuncExpr) -> Self {
        FuncExpr::Map(name.into(), Box::new(inner))
    }

    pub fn compose(left: FuncExpr, right: FuncExpr) -> Self {
        FuncExpr::Compose(Box::new(left), Box::new(right))
    }

    pub fn lambda(hole: Ident, body: FuncExpr) -> Self {
        FuncExpr::Lambda(hole, Box::new(body))
    }

    pub fn embed(t: Term) -> Self {
        FuncExpr::Embed(t)
    }

    /// `Embed(Var name)`, used for `g` and the symbolic `pre`/`post`.
    pub fn named(name: &str) -> Self {
        FuncExpr::Embed(Term::var(name))
    }

    pub fn max_fresh(&self) -> Option<u32> {
        match self {
            FuncExpr::Id => None,
            FuncExpr::Map(_, inner) => inner.max_fresh(),
            FuncExpr::Compose(l, r) => l.max_fresh().max(r.max_fresh()),
            FuncExpr::Lambda(h, body) => {
                let own = match h {
                    Ident::Fresh(n) => Some(*n),
                    Ident::Named(_) => None,
                };
                own.max(body.max_fresh())
            }
            FuncExpr::Embed(t) => t.max_fresh(),
        }
    }

    /// Number of free occurrences of `v` inside embedded terms.
    pub fn occurrences(&self, v: &Ident) -> usize {
        fn in_term(v: &Ident, t: &Term) -> usize {
            match t {
                Term::Const(_) => 0,
                Term::Var(w) => usize::from(w == v),
                Term::App(f, a) => in_term(v, f) + in_term(v, a),
                Term::Lam(w, b) if w != v => in_term(v, b),
                Term::Lam(..) => 0,
            }
        }
        match self {
            FuncExpr::Id => 0,
            FuncExpr::Map(_, inner) => inner.occurrences(v),
            FuncExpr::Compose(l, r) => l.occurrences(v) + r.occurrences(v),
            FuncExpr::Lambda(h, _) if h == v => 0,
            FuncExpr::Lambda(_, body) => body.occurrences(v),
            FuncExpr::Embed(t) => in_term(v, t),
        }
    }

    /// `self[t/hole]`, capture-avoiding.
    pub fn subst(&self, hole: &Ident, t: &Term, supply: &mut NameSupply) -> FuncExpr {
        match self {
            FuncExpr::Id => FuncExpr::Id,
            FuncExpr::Map(name, inner) => FuncExpr::map(name.clone(), inner.subst(hole, t, supply)),
            FuncExpr::Compose(l, r) => {
                FuncExpr::compose(l.subst(hole, t, supply), r.subst(hole, t, supply))
            }
            FuncExpr::Lambda(h, _) if h == hole => self.clone(),
            FuncExpr::Lambda(h, body) => {
                if free_in(h, t) {
                    supply.bump_above(t.max_fresh().max(body.max_fresh()));
                    let renamed = supply.fresh();
                    let body = body.subst(h, &Term::Var(renamed.clone()), supply);
                    FuncExpr::lambda(renamed, body.subst(hole, t, supply))
                } else {
                    FuncExpr::lambda(h.clone(), body.subst(hole, t, supply))
                }
            }
            FuncExpr::Embed(u) => FuncExpr::Embed(u.subst(hole, t, supply)),
        }
    }

    /// Every lambda-bound hole occurs exactly once in its body.
    pub fn is_linear(&self) -> bool {
        match self {
            FuncExpr::Id | FuncExpr::Embed(_) => true,
            FuncExpr::Map(_, inner) => inner.is_linear(),
            FuncExpr::Compose(l, r) => l.is_linear() && r.is_linear(),
            FuncExpr::Lambda(h, body) => body.occurrences(h) == 1 && body.is_linear(),
        }
    }
}

impl fmt::Display for FuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_func(self))
    }
}

/// Assigns printable names to binders in the order they are printed.
struct Namer {
    names: HashMap<Ident, String>,
    next: u32,
    prefix: char,
    avoid: HashSet<String>,
}

impl Namer {
    fn new(prefix: char, avoid: HashSet<String>) -> Self {
        Namer {
            names: HashMap::new(),
            next: 1,
            prefix,
            avoid,
        }
    }

    fn bind(&mut self, v: &Ident) -> (String, Option<String>) {
        let name = loop {
            let candidate = format!("{}{}", self.prefix, self.next);
            self.next += 1;
            if !self.avoid.contains(&candidate) {
                break candidate;
            }
        };
        let shadowed = self.names.insert(v.clone(), name.clone());
        (name, shadowed)
    }

    fn unbind(&mut self, v: &Ident, shadowed: Option<String>) {
        match shadowed {
            Some(old) => self.names.insert(v.clone(), old),
            None => self.names.remove(v),
        };
    }

    fn name_of(&self, v: &Ident) -> String {
        self.names.get(v).cloned().unwrap_or_else(|| v.to_string())
    }
}

fn is_atomic(t: &Term) -> bool {
    matches!(t, Term::Const(_) | Term::Var(_))
}

fn write_term(t: &Term, namer: &mut Namer, out: &mut String) {
    match t {
        Term::Const(c) => out.push_str(c),
        Term::Var(v) => out.push_str(&namer.name_of(v)),
        Term::Lam(..) => {
            let mut bound = Vec::new();
            let mut cur = t;
            out.push('\\');
            while let Term::Lam(v, body) = cur {
                let (name, shadowed) = namer.bind(v);
                if !bound.is_empty() {
                    out.push(' ');
                }
                out.push_str(&name);
                bound.push((v, shadowed));
                cur = body;
            }
            out.push_str(" -> ");
            write_term(cur, namer, out);
            for (v, shadowed) in bound.into_iter().rev() {
                namer.unbind(v, shadowed);
            }
        }
        Term::App(..) => {
            let mut spine = Vec::new();
            let mut head = t;
            while let Term::App(f, a) = head {
                spine.push(&**a);
                head = f;
            }
            write_operand(head, namer, out);
            for arg in spine.into_iter().rev() {
                out.push(' ');
                write_operand(arg, namer, out);
            }
        }
    }
}

fn write_operand(t: &Term, namer: &mut Namer, out: &mut String) {
    if is_atomic(t) {
        write_term(t, namer, out);
    } else {
        out.push('(');
        write_term(t, namer, out);
        out.push(')');
    }
}

fn names_in_use(t: &Term) -> HashSet<String> {
    let mut avoid: HashSet<String> = t.constants().into_iter().map(str::to_string).collect();
    avoid.extend(t.free_vars().into_iter().map(|v| v.to_string()));
    avoid
}

/// Renders a term with binders renamed `x1, x2, ...` in print order.
pub fn render_term(t: &Term) -> String {
    let mut namer = Namer::new('x', names_in_use(t));
    let mut out = String::new();
    write_term(t, &mut namer, &mut out);
    out
}

/// Renders a function expression with binders renamed `h1, h2, ...`.
pub fn render_func(f: &FuncExpr) -> String {
    let mut avoid = HashSet::new();
    collect_func_names(f, &mut avoid);
    let mut hs = Namer::new('h', avoid.clone());
    let mut xs = Namer::new('x', avoid);
    let mut out = String::new();
    write_func(f, &mut hs, &mut xs, &mut out);
    out
}

fn collect_func_names(f: &FuncExpr, out: &mut HashSet<String>) {
    match f {
        FuncExpr::Id => {}
        FuncExpr::Map(name, inner) => {
            out.insert(name.clone());
            collect_func_names(inner, out);
        }
        FuncExpr::Compose(l, r) => {
            collect_func_names(l, out);
            collect_func_names(r, out);
        }
        FuncExpr::Lambda(_, body) => collect_func_names(body, out),
        FuncExpr::Embed(t) => out.extend(names_in_use(t)),
    }
}

fn write_func(f: &FuncExpr, hs: &mut Namer, xs: &mut Namer, out: &mut String) {
    match f {
        FuncExpr::Compose(l, r) => {
            write_factor(l, hs, xs, out);
            out.push_str(" . ");
            write_func(r, hs, xs, out);
        }
        FuncExpr::Map(name, inner) => {
            out.push_str(name);
            out.push(' ');
            match &**inner {
                FuncExpr::Id | FuncExpr::Lambda(..) => write_func(inner, hs, xs, out),
                FuncExpr::Embed(t) if is_atomic(t) => write_func(inner, hs, xs, out),
                _ => {
                    out.push('(');
                    write_func(inner, hs, xs, out);
                    out.push(')');
                }
            }
        }
        FuncExpr::Lambda(h, body) => {
            let (name, shadowed) = hs.bind(h);
            out.push_str("(\\");
            out.push_str(&name);
            out.push_str(" -> ");
            write_func(body, hs, xs, out);
            out.push(')');
            hs.unbind(h, shadowed);
        }
        FuncExpr::Id => out.push_str("id"),
        FuncExpr::Embed(Term::Var(v)) if hs.names.contains_key(v) => {
            out.push_str(&hs.name_of(v));
        }
        FuncExpr::Embed(t) => {
            // hole names take precedence inside substituted terms
            for (ident, name) in &hs.names {
                xs.names.entry(ident.clone()).or_insert_with(|| name.clone());
            }
            write_term(t, xs, out);
        }
    }
}

fn write_factor(f: &FuncExpr, hs: &mut Namer, xs: &mut Namer, out: &mut String) {
    match f {
        FuncExpr::Compose(..) => {
            out.push('(');
            write_func(f, hs, xs, out);
            out.push(')');
        }
        FuncExpr::Embed(t) if !is_atomic(t) => {
            out.push('(');
            write_func(f, hs, xs, out);
            out.push(')');
        }
        _ => write_func(f, hs, xs, out),
    }
}
