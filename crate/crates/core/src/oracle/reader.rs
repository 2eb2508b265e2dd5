//! Reader for the lambda-term notation produced by `render_term`.
//!
//! ```text
//! term  := ('\' | 'λ') ident+ ('->' | '→') term | app
//! app   := atom+
//! atom  := ident | '(' term ')'
//! ```
//!
//! Free occurrences of `f`, `map` and `fmap` read as constants, every other
//! name as a variable.

use thiserror::Error;

use crate::term::{Ident, Term};

const CONSTANTS: &[&str] = &["f", "map", "fmap"];

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("term syntax error at column {}: expected {expected}, found {found}", .pos + 1)]
pub struct TermParseError {
    pub pos: usize,
    pub expected: &'static str,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lambda,
    Arrow,
    LParen,
    RParen,
    Ident(String),
    Eof,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, TermParseError> {
    let mut out = Vec::new();
    let mut it = input.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        match c {
            c if c.is_whitespace() => {
                it.next();
            }
            '\\' | 'λ' => {
                it.next();
                out.push((pos, Tok::Lambda));
            }
            '→' => {
                it.next();
                out.push((pos, Tok::Arrow));
            }
            '(' => {
                it.next();
                out.push((pos, Tok::LParen));
            }
            ')' => {
                it.next();
                out.push((pos, Tok::RParen));
            }
            '-' => {
                it.next();
                if let Some((_, '>')) = it.peek() {
                    it.next();
                    out.push((pos, Tok::Arrow));
                } else {
                    return Err(TermParseError {
                        pos,
                        expected: "`->`",
                        found: "`-`".into(),
                    });
                }
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut end = pos;
                while let Some(&(i, c)) = it.peek() {
                    if !(c.is_alphanumeric() || c == '_' || c == '\'') {
                        break;
                    }
                    end = i + c.len_utf8();
                    it.next();
                }
                out.push((pos, Tok::Ident(input[pos..end].to_string())));
            }
            other => {
                return Err(TermParseError {
                    pos,
                    expected: "a term",
                    found: format!("`{other}`"),
                })
            }
        }
    }
    out.push((input.len(), Tok::Eof));
    Ok(out)
}

struct Reader {
    toks: Vec<(usize, Tok)>,
    at: usize,
    bound: Vec<String>,
}

impl Reader {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn error(&self, expected: &'static str) -> TermParseError {
        let (pos, tok) = &self.toks[self.at];
        TermParseError {
            pos: *pos,
            expected,
            found: match tok {
                Tok::Lambda => "`\\`".into(),
                Tok::Arrow => "`->`".into(),
                Tok::LParen => "`(`".into(),
                Tok::RParen => "`)`".into(),
                Tok::Ident(s) => format!("`{s}`"),
                Tok::Eof => "end of input".into(),
            },
        }
    }

    fn term(&mut self) -> Result<Term, TermParseError> {
        if *self.peek() == Tok::Lambda {
            self.at += 1;
            let mut params = Vec::new();
            while let Tok::Ident(name) = self.peek().clone() {
                self.at += 1;
                params.push(name);
            }
            if params.is_empty() {
                return Err(self.error("a binder name"));
            }
            if *self.peek() != Tok::Arrow {
                return Err(self.error("`->`"));
            }
            self.at += 1;
            let depth = self.bound.len();
            self.bound.extend(params.iter().cloned());
            let body = self.term();
            self.bound.truncate(depth);
            let body = body?;
            return Ok(params
                .into_iter()
                .rev()
                .fold(body, |b, p| Term::lam(Ident::Named(p), b)));
        }
        let mut head = self.atom()?;
        loop {
            match self.peek() {
                Tok::Ident(_) | Tok::LParen => {
                    let arg = self.atom()?;
                    head = Term::app(head, arg);
                }
                // a trailing lambda argument, as in `map \x -> x`
                Tok::Lambda => {
                    let arg = self.term()?;
                    head = Term::app(head, arg);
                }
                _ => return Ok(head),
            }
        }
    }

    fn atom(&mut self) -> Result<Term, TermParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.at += 1;
                if !self.bound.contains(&name) && CONSTANTS.contains(&name.as_str()) {
                    Ok(Term::Const(name))
                } else {
                    Ok(Term::Var(Ident::Named(name)))
                }
            }
            Tok::LParen => {
                self.at += 1;
                let t = self.term()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.at += 1;
                Ok(t)
            }
            _ => Err(self.error("a name or `(`")),
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term, TermParseError> {
    let mut r = Reader {
        toks: lex(text)?,
        at: 0,
        bound: Vec::new(),
    };
    let t = r.term()?;
    if *r.peek() != Tok::Eof {
        return Err(r.error("end of input"));
    }
    Ok(t)
}
