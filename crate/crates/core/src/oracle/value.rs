use std::fmt;
use std::rc::Rc;

use super::EvalError;

type Fun = dyn Fn(Value) -> Result<Value, EvalError>;

/// A function value with a printable description.
#[derive(Clone)]
pub struct Closure {
    label: Rc<str>,
    fun: Rc<Fun>,
}

impl Closure {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn call(&self, arg: Value) -> Result<Value, EvalError> {
        (self.fun)(arg)
    }
}

impl fmt::Debug for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.label)
    }
}

#[derive(Clone, Debug)]
pub enum Value {
    Int(i64),
    Bool(bool),
    List(Vec<Value>),
    Maybe(Option<Box<Value>>),
    Closure(Closure),
}

impl Value {
    pub fn func(
        label: impl Into<String>,
        f: impl Fn(Value) -> Result<Value, EvalError> + 'static,
    ) -> Value {
        Value::Closure(Closure {
            label: Rc::from(label.into()),
            fun: Rc::new(f),
        })
    }

    pub fn func2(
        label: impl Into<String>,
        f: impl Fn(Value, Value) -> Result<Value, EvalError> + 'static,
    ) -> Value {
        let label: Rc<str> = Rc::from(label.into());
        let f = Rc::new(f);
        let outer = label.clone();
        Value::func(outer.to_string(), move |a| {
            let f = f.clone();
            Ok(Value::func(format!("{label} {a}"), move |b| f(a.clone(), b)))
        })
    }

    pub fn func3(
        label: impl Into<String>,
        f: impl Fn(Value, Value, Value) -> Result<Value, EvalError> + 'static,
    ) -> Value {
        let label: String = label.into();
        let f = Rc::new(f);
        let inner_label = label.clone();
        Value::func(label, move |a| {
            let f = f.clone();
            Ok(Value::func2(format!("{inner_label} {a}"), move |b, c| {
                f(a.clone(), b, c)
            }))
        })
    }

    pub fn some(v: Value) -> Value {
        Value::Maybe(Some(Box::new(v)))
    }

    pub fn apply(&self, arg: Value) -> Result<Value, EvalError> {
        match self {
            Value::Closure(c) => c.call(arg),
            other => Err(EvalError::NotAFunction {
                found: other.to_string(),
                term: None,
            }),
        }
    }

    pub fn apply_all(&self, args: impl IntoIterator<Item = Value>) -> Result<Value, EvalError> {
        args.into_iter()
            .try_fold(self.clone(), |acc, arg| acc.apply(arg))
    }

    pub fn as_int(&self) -> Result<i64, EvalError> {
        match self {
            Value::Int(n) => Ok(*n),
            other => Err(EvalError::shape("Int", other)),
        }
    }

    pub fn as_bool(&self) -> Result<bool, EvalError> {
        match self {
            Value::Bool(b) => Ok(*b),
            other => Err(EvalError::shape("Bool", other)),
        }
    }

    pub fn as_list(&self) -> Result<&[Value], EvalError> {
        match self {
            Value::List(xs) => Ok(xs),
            other => Err(EvalError::shape("list", other)),
        }
    }

    pub fn as_maybe(&self) -> Result<Option<&Value>, EvalError> {
        match self {
            Value::Maybe(m) => Ok(m.as_deref()),
            other => Err(EvalError::shape("Maybe", other)),
        }
    }

    /// Structural equality; closures cannot be compared.
    pub fn structural_eq(&self, other: &Value) -> Result<bool, EvalError> {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Ok(a == b),
            (Value::Bool(a), Value::Bool(b)) => Ok(a == b),
            (Value::List(a), Value::List(b)) => {
                if a.len() != b.len() {
                    return Ok(false);
                }
                for (x, y) in a.iter().zip(b) {
                    if !x.structural_eq(y)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (Value::Maybe(a), Value::Maybe(b)) => match (a, b) {
                (Some(x), Some(y)) => x.structural_eq(y),
                (None, None) => Ok(true),
                _ => Ok(false),
            },
            (Value::Closure(_), _) | (_, Value::Closure(_)) => Err(EvalError::ClosureComparison),
            _ => Ok(false),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(true) => f.write_str("True"),
            Value::Bool(false) => f.write_str("False"),
            Value::List(xs) => {
                f.write_str("[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            Value::Maybe(None) => f.write_str("Nothing"),
            Value::Maybe(Some(v)) => match **v {
                Value::Int(n) if n < 0 => write!(f, "Just ({n})"),
                Value::Int(_) | Value::Bool(_) | Value::List(_) => write!(f, "Just {v}"),
                _ => write!(f, "Just ({v})"),
            },
            Value::Closure(c) => write!(f, "<{}>", c.label),
        }
    }
}
