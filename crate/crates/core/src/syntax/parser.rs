//! Recursive-descent parser for the ASCII process syntax.
//!
//! ```text
//! file    := def* "main" "=" proc ";"?
//! def     := IDENT "=" proc ";"
//! proc    := sum ("|" sum)*
//! sum     := unary ("+" unary)*          each branch prefix-guarded
//! unary   := NAME "?" ("." unary)?
//!          | NAME "!" ("." unary)?
//!          | "new" NAME "in" unary
//!          | atom
//! atom    := "0" | IDENT | "(" proc ")"
//!          | "{" proc "/" proc "}"
//!          | "wu" "(" proc ";" proc ";" NAME ")"
//! ```

use super::ast::{Calculus, Name, Process};
use super::env::DefinitionEnv;
use super::lexer::{tokenize, Tok, Token};
use super::validate::validate_program;
use crate::error::{Error, Result};

const RESERVED: &[&str] = &["new", "in"];

/// Parses a whole file and returns the `main` term with its definitions.
///
/// The result is closed, guarded and legal for `calculus`.
pub fn parse(text: &str, calculus: Calculus) -> Result<(Process, DefinitionEnv)> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        calculus,
    };
    let (main, defs) = parser.file()?;
    let env = DefinitionEnv::from_definitions(defs)?;
    env.check_closed(&main)?;
    env.check_guarded()?;
    validate_program(&main, &env, calculus)?;
    Ok((main, env))
}

/// Parses a single process expression (no definitions).
pub fn parse_process(text: &str, calculus: Calculus) -> Result<Process> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        calculus,
    };
    let p = parser.proc()?;
    parser.expect(Tok::Eof)?;
    Ok(p)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    calculus: Calculus,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.tokens[self.pos];
        (t.line, t.column)
    }

    fn advance(&mut self) -> Tok {
        let t = self.tokens[self.pos].tok.clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            self.error(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().describe()
            ))
        }
    }

    fn name(&mut self) -> Result<Name> {
        match self.peek().clone() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                self.advance();
                Ok(Name::new(s))
            }
            other => self.error(format!("expected a name, found {}", other.describe())),
        }
    }

    fn file(&mut self) -> Result<(Process, Vec<(Name, Process)>)> {
        let mut defs = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::Ident(s) if s == "main" => {
                    self.advance();
                    self.expect(Tok::Eq)?;
                    let main = self.proc()?;
                    if *self.peek() == Tok::Semi {
                        self.advance();
                    }
                    self.expect(Tok::Eof)?;
                    return Ok((main, defs));
                }
                Tok::Ident(_) => {
                    let name = self.name()?;
                    if *self.peek() != Tok::Eq {
                        return self.error(format!(
                            "expected `=` after definition name, found {}",
                            self.peek().describe()
                        ));
                    }
                    self.advance();
                    let body = self.proc()?;
                    self.expect(Tok::Semi)?;
                    if defs.iter().any(|(n, _)| *n == name) {
                        return Err(Error::DuplicateDefinition(name.to_string()));
                    }
                    defs.push((name, body));
                }
                Tok::Eof => return Err(Error::MissingMain),
                other => {
                    return self.error(format!(
                        "expected a definition or `main`, found {}",
                        other.describe()
                    ))
                }
            }
        }
    }

    fn proc(&mut self) -> Result<Process> {
        let first = self.sum()?;
        if *self.peek() != Tok::Bar {
            return Ok(first);
        }
        let mut components = vec![first];
        while *self.peek() == Tok::Bar {
            self.advance();
            components.push(self.sum()?);
        }
        Ok(Process::Par(components))
    }

    fn sum(&mut self) -> Result<Process> {
        let start = self.here();
        let first = self.unary()?;
        if *self.peek() != Tok::Plus {
            return Ok(first);
        }
        let mut branches = vec![(start, first)];
        while *self.peek() == Tok::Plus {
            self.advance();
            let at = self.here();
            branches.push((at, self.unary()?));
        }
        for ((line, column), b) in &branches {
            if !b.is_guarded() {
                return Err(Error::UnguardedSum {
                    line: *line,
                    column: *column,
                });
            }
        }
        Ok(Process::Sum(branches.into_iter().map(|(_, b)| b).collect()))
    }

    fn unary(&mut self) -> Result<Process> {
        match (self.peek().clone(), self.peek_at(1).clone()) {
            (Tok::Ident(_), Tok::Question) => {
                let chan = self.name()?;
                self.advance();
                let cont = self.continuation()?;
                Ok(Process::Input(chan, Box::new(cont)))
            }
            (Tok::Ident(_), Tok::Bang) => {
                let chan = self.name()?;
                self.advance();
                let cont = self.continuation()?;
                Ok(match (self.calculus, cont) {
                    (Calculus::WebPi, Process::Nil) => Process::OutputAtom(chan),
                    (_, cont) => Process::Output(chan, Box::new(cont)),
                })
            }
            (Tok::Ident(kw), _) if kw == "new" => {
                self.advance();
                let bound = self.name()?;
                match self.peek() {
                    Tok::Ident(s) if s == "in" => {
                        self.advance();
                    }
                    other => {
                        return self.error(format!("expected `in`, found {}", other.describe()))
                    }
                }
                let body = self.unary()?;
                Ok(Process::Restrict(bound, Box::new(body)))
            }
            _ => self.atom(),
        }
    }

    fn continuation(&mut self) -> Result<Process> {
        if *self.peek() == Tok::Dot {
            self.advance();
            self.unary()
        } else {
            Ok(Process::Nil)
        }
    }

    fn atom(&mut self) -> Result<Process> {
        match self.peek().clone() {
            Tok::Zero => {
                self.advance();
                Ok(Process::Nil)
            }
            Tok::LParen => {
                self.advance();
                let p = self.proc()?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            Tok::LBrace => {
                self.advance();
                let numerator = self.proc()?;
                self.expect(Tok::Slash)?;
                let denominator = self.proc()?;
                self.expect(Tok::RBrace)?;
                Ok(Process::fraction(numerator, denominator))
            }
            Tok::Ident(kw) if kw == "wu" && *self.peek_at(1) == Tok::LParen => {
                self.advance();
                self.advance();
                let body = self.proc()?;
                self.expect(Tok::Semi)?;
                let handler = self.proc()?;
                self.expect(Tok::Semi)?;
                let trigger = self.name()?;
                self.expect(Tok::RParen)?;
                Ok(Process::workunit(body, handler, trigger))
            }
            Tok::Ident(s) if s == "main" => {
                self.error("`main` cannot be referenced as a constant")
            }
            Tok::Ident(_) => Ok(Process::Constant(self.name()?)),
            other => self.error(format!("expected a process, found {}", other.describe())),
        }
    }
}
