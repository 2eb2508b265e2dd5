//! Type expressions polymorphic in a single type variable.
//!
//! Surface grammar accepted by [`parse_type`]:
//!
//! ```text
//! type  := atype ('->' type)?
//! atype := 'Bool' | 'Int' | ident | '[' type ']' | 'Maybe' atom | '(' type ')'
//! atom  := 'Bool' | 'Int' | ident | '[' type ']' | '(' type ')'
//! ```
//!
//! Any lowercase identifier denotes the type variable, but all of them in one
//! input must be spelled the same. Rendering always prints the variable as
//! `alpha`.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TypeExpr {
    Var,
    Bool,
    Int,
    List(Box<TypeExpr>),
    Maybe(Box<TypeExpr>),
    Arrow(Box<TypeExpr>, Box<TypeExpr>),
}

impl TypeExpr {
    pub fn list(elem: TypeExpr) -> Self {
        TypeExpr::List(Box::new(elem))
    }

    pub fn maybe(elem: TypeExpr) -> Self {
        TypeExpr::Maybe(Box::new(elem))
    }

    pub fn arrow(arg: TypeExpr, res: TypeExpr) -> Self {
        TypeExpr::Arrow(Box::new(arg), Box::new(res))
    }

    /// Splits `a1 -> a2 -> ... -> r` into `([a1, a2, ...], r)`.
    pub fn uncurry(&self) -> (Vec<&TypeExpr>, &TypeExpr) {
        let mut args = Vec::new();
        let mut cur = self;
        while let TypeExpr::Arrow(arg, res) = cur {
            args.push(&**arg);
            cur = res;
        }
        (args, cur)
    }

    /// Number of arrows along the result spine.
    pub fn arity(&self) -> usize {
        self.uncurry().0.len()
    }

    pub fn var_count(&self) -> usize {
        match self {
            TypeExpr::Var => 1,
            TypeExpr::Bool | TypeExpr::Int => 0,
            TypeExpr::List(t) | TypeExpr::Maybe(t) => t.var_count(),
            TypeExpr::Arrow(a, r) => a.var_count() + r.var_count(),
        }
    }
}

impl fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_type(self))
    }
}

impl std::str::FromStr for TypeExpr {
    type Err = TypeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_type(s)
    }
}

/// Canonical rendering, parenthesizing only where the grammar requires it.
pub fn render_type(t: &TypeExpr) -> String {
    let mut out = String::new();
    write_type(t, &mut out);
    out
}

fn write_type(t: &TypeExpr, out: &mut String) {
    match t {
        TypeExpr::Arrow(arg, res) => {
            if matches!(**arg, TypeExpr::Arrow(..)) {
                out.push('(');
                write_type(arg, out);
                out.push(')');
            } else {
                write_type(arg, out);
            }
            out.push_str(" -> ");
            write_type(res, out);
        }
        TypeExpr::Maybe(inner) => {
            out.push_str("Maybe ");
            if matches!(**inner, TypeExpr::Arrow(..) | TypeExpr::Maybe(_)) {
                out.push('(');
                write_type(inner, out);
                out.push(')');
            } else {
                write_type(inner, out);
            }
        }
        TypeExpr::List(inner) => {
            out.push('[');
            write_type(inner, out);
            out.push(']');
        }
        TypeExpr::Var => out.push_str("alpha"),
        TypeExpr::Bool => out.push_str("Bool"),
        TypeExpr::Int => out.push_str("Int"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TypeParseError {
    #[error("syntax error at column {}: expected {}, found {found}", .pos + 1, .expected.join(" or "))]
    Syntax {
        pos: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("multiple type variables: `{second}` at column {} differs from `{first}`; only one type variable is supported", .pos + 1)]
    MultipleTypeVariables {
        first: String,
        second: String,
        pos: usize,
    },
    #[error("unknown constructor `{name}` at column {}; expected Bool, Int or Maybe", .pos + 1)]
    UnknownConstructor { name: String, pos: usize },
}

impl TypeParseError {
    /// Byte offset into the input where the error was detected.
    pub fn position(&self) -> usize {
        match self {
            TypeParseError::Syntax { pos, .. }
            | TypeParseError::MultipleTypeVariables { pos, .. }
            | TypeParseError::UnknownConstructor { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Arrow,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Lower(String),
    Upper(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Arrow => "`->`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Lower(s) | Tok::Upper(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, TypeParseError> {
    let mut toks = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = match c {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '-' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, '>')) => Tok::Arrow,
                    other => {
                        return Err(TypeParseError::Syntax {
                            pos,
                            expected: vec!["`->`"],
                            found: match other {
                                Some(&(_, c)) => format!("`-{c}`"),
                                None => "`-`".into(),
                            },
                        })
                    }
                }
            }
            c if c.is_ascii_lowercase() || c == '_' || c.is_ascii_uppercase() => {
                let mut end = pos;
                while let Some(&(i, c)) = chars.peek() {
                    if !is_ident_char(c) {
                        break;
                    }
                    end = i + c.len_utf8();
                    chars.next();
                }
                let word = input[pos..end].to_string();
                let tok = if c.is_ascii_uppercase() {
                    Tok::Upper(word)
                } else {
                    Tok::Lower(word)
                };
                toks.push((pos, tok));
                continue;
            }
            other => {
                return Err(TypeParseError::Syntax {
                    pos,
                    expected: vec!["a type"],
                    found: format!("`{other}`"),
                })
            }
        };
        chars.next();
        toks.push((pos, tok));
    }
    toks.push((input.len(), Tok::Eof));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    var_name: Option<String>,
}

const ATOM_START: &[&str] = &["`Bool`", "`Int`", "a type variable", "`[`", "`(`"];
const ATYPE_START: &[&str] = &[
    "`Bool`",
    "`Int`",
    "`Maybe`",
    "a type variable",
    "`[`",
    "`(`",
];

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&'static str]) -> TypeParseError {
        let (pos, tok) = self.peek();
        TypeParseError::Syntax {
            pos: *pos,
            expected: expected.to_vec(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, want: Tok, name: &'static str) -> Result<(), TypeParseError> {
        if self.peek().1 == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn ty(&mut self) -> Result<TypeExpr, TypeParseError> {
        let arg = self.atype()?;
        if self.peek().1 == Tok::Arrow {
            self.bump();
            let res = self.ty()?;
            Ok(TypeExpr::arrow(arg, res))
        } else {
            Ok(arg)
        }
    }

    fn atype(&mut self) -> Result<TypeExpr, TypeParseError> {
        if let Tok::Upper(name) = &self.peek().1 {
            if name == "Maybe" {
                self.bump();
                let inner = self.atom(ATOM_START)?;
                return Ok(TypeExpr::maybe(inner));
            }
        }
        self.atom(ATYPE_START)
    }

    fn atom(&mut self, expected: &[&'static str]) -> Result<TypeExpr, TypeParseError> {
        let (pos, tok) = self.peek().clone();
        match tok {
            Tok::Upper(name) => match name.as_str() {
                "Bool" => {
                    self.bump();
                    Ok(TypeExpr::Bool)
                }
                "Int" => {
                    self.bump();
                    Ok(TypeExpr::Int)
                }
                // `Maybe Maybe a` needs parentheses
                "Maybe" => Err(self.unexpected(expected)),
                _ => Err(TypeParseError::UnknownConstructor { name, pos }),
            },
            Tok::Lower(name) => {
                self.bump();
                match &self.var_name {
                    None => self.var_name = Some(name),
                    Some(first) if *first != name => {
                        return Err(TypeParseError::MultipleTypeVariables {
                            first: first.clone(),
                            second: name,
                            pos,
                        })
                    }
                    Some(_) => {}
                }
                Ok(TypeExpr::Var)
            }
            Tok::LBracket => {
                self.bump();
                let inner = self.ty()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(TypeExpr::list(inner))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.ty()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.unexpected(expected)),
        }
    }
}

pub fn parse_type(text: &str) -> Result<TypeExpr, TypeParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        var_name: None,
    };
    let t = p.ty()?;
    if p.peek().1 != Tok::Eof {
        return Err(p.unexpected(&["`->`", "end of input"]));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use TypeExpr::*;

    #[test]
    fn parses_session_two_type() {
        let t = parse_type("(a -> a -> Bool) -> [a] -> [a]").unwrap();
        assert_eq!(
            t,
            TypeExpr::arrow(
                TypeExpr::arrow(Var, TypeExpr::arrow(Var, Bool)),
                TypeExpr::arrow(TypeExpr::list(Var), TypeExpr::list(Var)),
            )
        );
    }

    #[test]
    fn single_tokens() {
        assert_eq!(parse_type("Bool").unwrap(), Bool);
        assert_eq!(parse_type("  Int ").unwrap(), Int);
        assert_eq!(parse_type("alpha").unwrap(), Var);
    }

    #[test]
    fn arrows_associate_right() {
        assert_eq!(
            parse_type("a -> a -> a").unwrap(),
            TypeExpr::arrow(Var, TypeExpr::arrow(Var, Var))
        );
    }

    #[test]
    fn maybe_binds_tighter_than_arrow() {
        assert_eq!(
            parse_type("Maybe a -> Int").unwrap(),
            TypeExpr::arrow(TypeExpr::maybe(Var), Int)
        );
        assert_eq!(
            parse_type("Maybe [x]").unwrap(),
            TypeExpr::maybe(TypeExpr::list(Var))
        );
        assert_eq!(
            parse_type("Maybe (Maybe x)").unwrap(),
            TypeExpr::maybe(TypeExpr::maybe(Var))
        );
    }

    #[test]
    fn nested_maybe_needs_parens() {
        let err = parse_type("Maybe Maybe a").unwrap_err();
        assert!(matches!(err, TypeParseError::Syntax { pos: 6, .. }), "{err:?}");
    }

    #[test]
    fn rejects_two_variables() {
        let err = parse_type("a -> b").unwrap_err();
        assert_eq!(
            err,
            TypeParseError::MultipleTypeVariables {
                first: "a".into(),
                second: "b".into(),
                pos: 5
            }
        );
        assert!(err.to_string().contains("multiple type variables"));
    }

    #[test]
    fn rejects_unknown_constructor() {
        let err = parse_type("[Char] -> a").unwrap_err();
        assert_eq!(
            err,
            TypeParseError::UnknownConstructor {
                name: "Char".into(),
                pos: 1
            }
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_type("(a -> Bool").unwrap_err();
        match err {
            TypeParseError::Syntax { pos, expected, found } => {
                assert_eq!(pos, 10);
                assert!(expected.contains(&"`)`"));
                assert_eq!(found, "end of input");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_type("").is_err());
        assert!(parse_type("a ->").is_err());
        assert!(parse_type("a a").is_err());
        assert!(parse_type("a - a").is_err());
        assert!(parse_type("a -> #").is_err());
    }

    #[test]
    fn renders_session_one_header() {
        let t = TypeExpr::arrow(
            TypeExpr::arrow(Var, Bool),
            TypeExpr::arrow(
                TypeExpr::arrow(Bool, Var),
                TypeExpr::arrow(TypeExpr::list(Var), Var),
            ),
        );
        assert_eq!(
            render_type(&t),
            "(alpha -> Bool) -> (Bool -> alpha) -> [alpha] -> alpha"
        );
        assert_eq!(render_type(&TypeExpr::list(Int)), "[Int]");
        assert_eq!(
            render_type(&TypeExpr::maybe(TypeExpr::arrow(Var, Var))),
            "Maybe (alpha -> alpha)"
        );
    }

    #[test]
    fn arity_counts_result_spine() {
        let t = parse_type("(a -> a) -> a -> a").unwrap();
        assert_eq!(t.arity(), 2);
        assert_eq!(t.var_count(), 4);
    }
}
