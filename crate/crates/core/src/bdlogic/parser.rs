//! Recursive descent parser for the formula surface syntax.
//!
//! ```text
//! or  := and ('|' and)*
//! and := not ('&' not)*
//! not := '~'* atom
//! atom := ident | 'top' | 'bot' | '(' or ')'
//! ```
//!
//! `!` is accepted for `~` and `_|_` for `bot`; the Unicode connectives
//! `¬ ∧ ∨ ⊥ ⊤` are accepted too. Offsets in errors are byte offsets.

use super::Formula;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    Not,
    And,
    Or,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("`{name}`"),
            Tok::Top => "`top`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut tokens = Vec::new();
    let mut iter = text.char_indices().peekable();
    while let Some(&(pos, c)) = iter.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                iter.next();
                continue;
            }
            '~' | '!' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '⊥' => Tok::Bot,
            '⊤' => Tok::Top,
            '_' if text[pos..].starts_with("_|_") => {
                iter.next();
                iter.next();
                Tok::Bot
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = pos;
                while let Some(&(i, c)) = iter.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        end = i + c.len_utf8();
                        iter.next();
                    } else {
                        break;
                    }
                }
                let word = &text[pos..end];
                tokens.push((
                    pos,
                    match word {
                        "top" => Tok::Top,
                        "bot" => Tok::Bot,
                        _ => Tok::Ident(word.to_string()),
                    },
                ));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    offset: pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        iter.next();
        tokens.push((pos, tok));
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            let rhs = self.and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.not()?;
        while self.eat(&Tok::And) {
            let rhs = self.not()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn not(&mut self) -> Result<Formula> {
        let mut negations = 0;
        while self.eat(&Tok::Not) {
            negations += 1;
        }
        let mut f = self.atom()?;
        for _ in 0..negations {
            f = f.negate();
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<Formula> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("expected an operand, found end of input"));
        };
        let f = match tok {
            Tok::Ident(name) => Formula::Atom(name),
            Tok::Top => Formula::Top,
            Tok::Bot => Formula::Bottom,
            Tok::LParen => {
                self.pos += 1;
                let inner = self.or()?;
                if !self.eat(&Tok::RParen) {
                    return Err(match self.peek() {
                        Some(t) => self.error(format!("expected `)`, found {}", t.describe())),
                        None => self.error("expected `)`, found end of input"),
                    });
                }
                return Ok(inner);
            }
            other => {
                return Err(self.error(format!("expected an operand, found {}", other.describe())))
            }
        };
        self.pos += 1;
        Ok(f)
    }
}

/// Parses a formula in the surface syntax.
pub fn parse(text: &str) -> Result<Formula> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let f = parser.or()?;
    if let Some(tok) = parser.peek() {
        return Err(parser.error(format!("unexpected {}", tok.describe())));
    }
    Ok(f)
}
