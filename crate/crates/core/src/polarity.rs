//! Polarity annotation of type positions.
//!
//! A position is negative when reached through an odd number of arrow
//! argument branches. Types with a negative subexpression that contains the
//! variable at both polarities are the ones whose unconditional equation may
//! be weaker than the full free theorem.

use std::fmt;

use crate::types::TypeExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolType {
    pub sign: Sign,
    pub node: PolNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolNode {
    Var,
    Bool,
    Int,
    List(Box<PolType>),
    Maybe(Box<PolType>),
    Arrow(Box<PolType>, Box<PolType>),
}

pub fn annotate(sigma: &TypeExpr) -> PolType {
    annotate_at(sigma, Sign::Positive)
}

fn annotate_at(t: &TypeExpr, sign: Sign) -> PolType {
    let node = match t {
        TypeExpr::Var => PolNode::Var,
        TypeExpr::Bool => PolNode::Bool,
        TypeExpr::Int => PolNode::Int,
        TypeExpr::List(e) => PolNode::List(Box::new(annotate_at(e, sign))),
        TypeExpr::Maybe(e) => PolNode::Maybe(Box::new(annotate_at(e, sign))),
        TypeExpr::Arrow(a, r) => PolNode::Arrow(
            Box::new(annotate_at(a, sign.flip())),
            Box::new(annotate_at(r, sign)),
        ),
    };
    PolType { sign, node }
}

impl PolType {
    /// Occurrences of the type variable as `(positive, negative)`.
    pub fn var_counts(&self) -> (usize, usize) {
        match &self.node {
            PolNode::Var => match self.sign {
                Sign::Positive => (1, 0),
                Sign::Negative => (0, 1),
            },
            PolNode::Bool | PolNode::Int => (0, 0),
            PolNode::List(e) | PolNode::Maybe(e) => e.var_counts(),
            PolNode::Arrow(a, r) => {
                let (ap, an) = a.var_counts();
                let (rp, rn) = r.var_counts();
                (ap + rp, an + rn)
            }
        }
    }

    /// Pre-order traversal of all subtrees.
    pub fn subtrees(&self) -> Vec<&PolType> {
        let mut out = vec![self];
        match &self.node {
            PolNode::Var | PolNode::Bool | PolNode::Int => {}
            PolNode::List(e) | PolNode::Maybe(e) => out.extend(e.subtrees()),
            PolNode::Arrow(a, r) => {
                out.extend(a.subtrees());
                out.extend(r.subtrees());
            }
        }
        out
    }

    fn write(&self, root: bool, out: &mut String) {
        let s = self.sign.symbol();
        match &self.node {
            PolNode::Var => {
                out.push_str("alpha");
                out.push(s);
            }
            PolNode::Bool => {
                out.push_str("Bool");
                out.push(s);
            }
            PolNode::Int => {
                out.push_str("Int");
                out.push(s);
            }
            PolNode::List(e) => {
                out.push('[');
                e.write(false, out);
                out.push(']');
                out.push(s);
            }
            PolNode::Maybe(e) => {
                out.push_str("(Maybe ");
                e.write(false, out);
                out.push(')');
                out.push(s);
            }
            PolNode::Arrow(a, r) => {
                if !root {
                    out.push('(');
                }
                a.write(false, out);
                out.push_str(" -> ");
                r.write(false, out);
                if !root {
                    out.push(')');
                    out.push(s);
                }
            }
        }
    }
}

/// Every non-root compound part is parenthesized and suffixed with its sign.
impl fmt::Display for PolType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.write(true, &mut out);
        f.write_str(&out)
    }
}

/// Whether some negative subexpression mentions the variable at both
/// polarities. The criterion is believed, not proven, to be exact.
pub fn requires_precondition(sigma: &TypeExpr) -> bool {
    annotate(sigma).subtrees().into_iter().any(|sub| {
        let (pos, neg) = sub.var_counts();
        sub.sign == Sign::Negative && pos > 0 && neg > 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::parse_type;

    fn ann(s: &str) -> String {
        annotate(&parse_type(s).unwrap()).to_string()
    }

    #[test]
    fn annotations_match_worked_examples() {
        assert_eq!(
            ann("(a -> a) -> a -> a"),
            "(alpha+ -> alpha-)- -> (alpha- -> alpha+)+"
        );
        assert_eq!(
            ann("(a -> Bool) -> [a] -> Maybe a"),
            "(alpha+ -> Bool-)- -> ([alpha-]- -> (Maybe alpha+)+)+"
        );
        assert_eq!(
            ann("(a -> Bool) -> (Bool -> a) -> [a] -> a"),
            "(alpha+ -> Bool-)- -> ((Bool+ -> alpha-)- -> ([alpha-]- -> alpha+)+)+"
        );
        assert_eq!(ann("a"), "alpha+");
    }

    #[test]
    fn precondition_criterion() {
        let check = |s: &str| requires_precondition(&parse_type(s).unwrap());
        assert!(check("(a -> a) -> a -> a"));
        assert!(!check("(a -> Bool) -> [a] -> Maybe a"));
        assert!(!check("(a -> Bool) -> (Bool -> a) -> [a] -> a"));
        assert!(!check("(a -> a -> Bool) -> [a] -> [a]"));
        assert!(!check("[a] -> [a]"));
    }

    #[test]
    fn root_is_positive_and_arguments_flip() {
        let p = annotate(&parse_type("((a -> Int) -> Int) -> Int").unwrap());
        assert_eq!(p.sign, Sign::Positive);
        // three argument branches
        assert_eq!(p.var_counts(), (0, 1));
        let q = annotate(&parse_type("(a -> Int) -> Int").unwrap());
        assert_eq!(q.var_counts(), (1, 0));
    }
}
