//! Concrete instances for semantic checking: each entry fixes a type, a set
//! of implementations of `f` at `alpha := Int`, the relating function
//! `g = (+3)`, and generators for the arguments.

use rand::Rng;

use super::{EvalError, Value};
use crate::types::{parse_type, TypeExpr};

pub const INT_RANGE: std::ops::RangeInclusive<i64> = -10..=10;
pub const MAX_LIST_LEN: usize = 8;

/// Random argument generators, with `alpha` instantiated to `Int`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueGen {
    Int,
    Bool,
    List(Box<ValueGen>),
    Maybe(Box<ValueGen>),
    /// `Int -> Bool`
    Predicate,
    /// `Int -> Int -> Bool`
    Relation,
    /// `Bool -> Int`
    Selector,
}

impl ValueGen {
    pub fn for_type(t: &TypeExpr) -> Option<ValueGen> {
        use TypeExpr::*;
        Some(match t {
            Var | Int => ValueGen::Int,
            Bool => ValueGen::Bool,
            List(e) => ValueGen::List(Box::new(ValueGen::for_type(e)?)),
            Maybe(e) => ValueGen::Maybe(Box::new(ValueGen::for_type(e)?)),
            Arrow(a, r) => match (&**a, &**r) {
                (Var | Int, Bool) => ValueGen::Predicate,
                (Var | Int, Arrow(b, c)) if matches!(**b, Var | Int) && **c == Bool => {
                    ValueGen::Relation
                }
                (Bool, Var | Int) => ValueGen::Selector,
                _ => return None,
            },
        })
    }

    pub fn generate<R: Rng>(&self, rng: &mut R) -> Value {
        match self {
            ValueGen::Int => Value::Int(rng.gen_range(INT_RANGE)),
            ValueGen::Bool => Value::Bool(rng.gen()),
            ValueGen::List(e) => {
                let len = rng.gen_range(0..=MAX_LIST_LEN);
                Value::List((0..len).map(|_| e.generate(rng)).collect())
            }
            ValueGen::Maybe(e) => {
                if rng.gen() {
                    Value::some(e.generate(rng))
                } else {
                    Value::Maybe(None)
                }
            }
            ValueGen::Predicate => predicate(rng),
            ValueGen::Relation => relation(rng),
            ValueGen::Selector => {
                let (t, e) = (rng.gen_range(INT_RANGE), rng.gen_range(INT_RANGE));
                Value::func(format!("\\b -> if b then {t} else {e}"), move |b| {
                    Ok(Value::Int(if b.as_bool()? { t } else { e }))
                })
            }
        }
    }
}

fn predicate<R: Rng>(rng: &mut R) -> Value {
    let k = rng.gen_range(INT_RANGE);
    let int_pred = |label: String, p: fn(i64, i64) -> bool| {
        Value::func(label, move |x| Ok(Value::Bool(p(x.as_int()?, k))))
    };
    match rng.gen_range(0..6) {
        0 => int_pred(format!("\\x -> x < {k}"), |x, k| x < k),
        1 => int_pred(format!("\\x -> x > {k}"), |x, k| x > k),
        2 => int_pred("even".into(), |x, _| x % 2 == 0),
        3 => int_pred("odd".into(), |x, _| x % 2 != 0),
        4 => Value::func("const True", |_| Ok(Value::Bool(true))),
        _ => Value::func("const False", |_| Ok(Value::Bool(false))),
    }
}

fn relation<R: Rng>(rng: &mut R) -> Value {
    let (label, r): (&str, fn(i64, i64) -> bool) = match rng.gen_range(0..6) {
        0 => ("(<=)", |a, b| a <= b),
        1 => ("(<)", |a, b| a < b),
        2 => ("(>=)", |a, b| a >= b),
        3 => ("(==)", |a, b| a == b),
        4 => ("(/=)", |a, b| a != b),
        _ => ("\\a b -> a mod 3 <= b mod 3", |a, b| {
            a.rem_euclid(3) <= b.rem_euclid(3)
        }),
    };
    Value::func2(label, move |a, b| Ok(Value::Bool(r(a.as_int()?, b.as_int()?))))
}

/// One implementation of `f`.
#[derive(Clone, Debug)]
pub struct FImpl {
    pub name: &'static str,
    /// False for deliberately non-parametric negative controls.
    pub parametric: bool,
    pub value: Value,
}

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub sigma: TypeExpr,
    pub impls: Vec<FImpl>,
    pub g: Value,
    pub inputs: Vec<ValueGen>,
}

impl CatalogueEntry {
    fn new(name: &'static str, sigma: &str, impls: Vec<FImpl>) -> Self {
        let sigma = parse_type(sigma).expect("catalogue type parses");
        let inputs = sigma
            .uncurry()
            .0
            .into_iter()
            .map(|a| ValueGen::for_type(a).expect("catalogue argument has a generator"))
            .collect();
        CatalogueEntry {
            name,
            sigma,
            impls,
            g: plus_three(),
            inputs,
        }
    }
}

pub fn plus_three() -> Value {
    Value::func("+3", |x| Ok(Value::Int(x.as_int()? + 3)))
}

fn parametric(name: &'static str, value: Value) -> FImpl {
    FImpl {
        name,
        parametric: true,
        value,
    }
}

fn plant(name: &'static str, value: Value) -> FImpl {
    FImpl {
        name,
        parametric: false,
        value,
    }
}

fn list_fn(name: &'static str, f: fn(&[Value]) -> Vec<Value>) -> Value {
    Value::func(name, move |xs| Ok(Value::List(f(xs.as_list()?))))
}

fn holds(p: &Value, x: &Value) -> Result<bool, EvalError> {
    p.apply(x.clone())?.as_bool()
}

fn filter_by(p: &Value, xs: &[Value]) -> Result<Vec<Value>, EvalError> {
    let mut out = Vec::new();
    for x in xs {
        if holds(p, x)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

fn insertion_sort_by(r: &Value, xs: &[Value]) -> Result<Vec<Value>, EvalError> {
    let mut out: Vec<Value> = Vec::with_capacity(xs.len());
    for x in xs {
        let mut at = out.len();
        for (i, y) in out.iter().enumerate() {
            if !r.apply_all([y.clone(), x.clone()])?.as_bool()? {
                at = i;
                break;
            }
        }
        out.insert(at, x.clone());
    }
    Ok(out)
}

fn list_endo() -> CatalogueEntry {
    CatalogueEntry::new(
        "list-endo",
        "[a] -> [a]",
        vec![
            parametric("reverse", list_fn("reverse", |xs| xs.iter().rev().cloned().collect())),
            parametric("identity", list_fn("identity", <[Value]>::to_vec)),
            parametric("duplicate", list_fn("duplicate", |xs| [xs, xs].concat())),
            plant(
                "keep-zeros",
                Value::func("keep-zeros", |xs| {
                    let mut out = Vec::new();
                    for x in xs.as_list()? {
                        if x.as_int()? == 0 {
                            out.push(x.clone());
                        }
                    }
                    Ok(Value::List(out))
                }),
            ),
        ],
    )
}

fn list_filter() -> CatalogueEntry {
    CatalogueEntry::new(
        "list-filter",
        "(a -> Bool) -> [a] -> [a]",
        vec![
            parametric(
                "filter",
                Value::func2("filter", |p, xs| Ok(Value::List(filter_by(&p, xs.as_list()?)?))),
            ),
            parametric(
                "take-while",
                Value::func2("take-while", |p, xs| {
                    let mut out = Vec::new();
                    for x in xs.as_list()? {
                        if !holds(&p, x)? {
                            break;
                        }
                        out.push(x.clone());
                    }
                    Ok(Value::List(out))
                }),
            ),
            parametric(
                "drop-while",
                Value::func2("drop-while", |p, xs| {
                    let xs = xs.as_list()?;
                    let mut start = xs.len();
                    for (i, x) in xs.iter().enumerate() {
                        if !holds(&p, x)? {
                            start = i;
                            break;
                        }
                    }
                    Ok(Value::List(xs[start..].to_vec()))
                }),
            ),
            plant(
                "filter-nonnegative",
                Value::func2("filter-nonnegative", |p, xs| {
                    let mut out = Vec::new();
                    for x in filter_by(&p, xs.as_list()?)? {
                        if x.as_int()? >= 0 {
                            out.push(x);
                        }
                    }
                    Ok(Value::List(out))
                }),
            ),
        ],
    )
}

fn find_first() -> CatalogueEntry {
    CatalogueEntry::new(
        "find-first",
        "(a -> Bool) -> [a] -> Maybe a",
        vec![
            parametric(
                "find",
                Value::func2("find", |p, xs| {
                    for x in xs.as_list()? {
                        if holds(&p, x)? {
                            return Ok(Value::some(x.clone()));
                        }
                    }
                    Ok(Value::Maybe(None))
                }),
            ),
            plant(
                "find-even",
                Value::func2("find-even", |p, xs| {
                    for x in xs.as_list()? {
                        if holds(&p, x)? && x.as_int()? % 2 == 0 {
                            return Ok(Value::some(x.clone()));
                        }
                    }
                    Ok(Value::Maybe(None))
                }),
            ),
        ],
    )
}

fn sort_by() -> CatalogueEntry {
    CatalogueEntry::new(
        "sort-by",
        "(a -> a -> Bool) -> [a] -> [a]",
        vec![
            parametric(
                "insertion-sort-by",
                Value::func2("insertion-sort-by", |r, xs| {
                    Ok(Value::List(insertion_sort_by(&r, xs.as_list()?)?))
                }),
            ),
            plant(
                "sort-small-by",
                Value::func2("sort-small-by", |r, xs| {
                    let mut small = Vec::new();
                    for x in xs.as_list()? {
                        if x.as_int()? <= 5 {
                            small.push(x.clone());
                        }
                    }
                    Ok(Value::List(insertion_sort_by(&r, &small)?))
                }),
            ),
        ],
    )
}

fn select_or_default() -> CatalogueEntry {
    CatalogueEntry::new(
        "select-or-default",
        "(a -> Bool) -> (Bool -> a) -> [a] -> a",
        vec![
            parametric(
                "select-or-default",
                Value::func3("select-or-default", |p, k, xs| {
                    let xs = xs.as_list()?;
                    for x in xs {
                        if holds(&p, x)? {
                            return Ok(x.clone());
                        }
                    }
                    k.apply(Value::Bool(xs.is_empty()))
                }),
            ),
            plant(
                "select-or-zero",
                Value::func3("select-or-zero", |p, _k, xs| {
                    for x in xs.as_list()? {
                        if holds(&p, x)? {
                            return Ok(x.clone());
                        }
                    }
                    Ok(Value::Int(0))
                }),
            ),
        ],
    )
}

pub fn catalogue() -> Vec<CatalogueEntry> {
    vec![
        list_endo(),
        list_filter(),
        find_first(),
        sort_by(),
        select_or_default(),
    ]
}

pub fn find_entry(sigma: &TypeExpr) -> Option<CatalogueEntry> {
    catalogue().into_iter().find(|e| e.sigma == *sigma)
}
