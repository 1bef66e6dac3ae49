//! Text grammar for words:
//!
//! ```text
//! word := term { term }
//! term := primary [ '^' int ]
//! primary := identifier | '1' | '[' word ',' word ']' | '(' word ')'
//! ```
//!
//! `[u,v]` expands to `u v u^-1 v^-1`. Exponents are integers; conjugation is
//! written out explicitly.

use std::sync::Arc;

use thiserror::Error;

use super::word::{Alphabet, Word};
use super::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
enum Expr {
    Identity,
    Gen { name: String, line: usize, column: usize },
    Seq(Vec<Expr>),
    Comm(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    line_start: usize,
}

impl Parser {
    fn new(src: &str, line: usize) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            line,
            line_start: 0,
        }
    }

    fn column(&self) -> usize {
        self.pos - self.line_start + 1
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '\n' {
                self.line += 1;
                self.line_start = self.pos + 1;
            } else if !c.is_whitespace() {
                break;
            }
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn word(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        while let Some(c) = self.peek() {
            if c == ',' || c == ']' || c == ')' {
                break;
            }
            terms.push(self.term()?);
        }
        Ok(Expr::Seq(terms))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let primary = self.primary()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.integer()?;
            Ok(Expr::Pow(Box::new(primary), k))
        } else {
            Ok(primary)
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let c = self.peek().ok_or_else(|| self.error("unexpected end of input"))?;
        match c {
            '[' => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(Expr::Comm(Box::new(a), Box::new(b)))
            }
            '(' => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(')')?;
                Ok(a)
            }
            '1' => {
                self.pos += 1;
                if self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return Err(self.error("identifiers cannot start with a digit"));
                }
                Ok(Expr::Identity)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let (line, column) = (self.line, self.column());
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(Expr::Gen { name, line, column })
            }
            other => Err(self.error(format!("unexpected character '{other}'"))),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }
}

fn parse_expr(text: &str, line: usize) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text, line);
    let e = p.word()?;
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected '{c}'")));
    }
    Ok(e)
}

fn collect_names(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Identity => {}
        Expr::Gen { name, .. } => {
            if !out.contains(name) {
                out.push(name.clone());
            }
        }
        Expr::Seq(v) => v.iter().for_each(|x| collect_names(x, out)),
        Expr::Comm(a, b) => {
            collect_names(a, out);
            collect_names(b, out);
        }
        Expr::Pow(a, _) => collect_names(a, out),
    }
}

fn eval(e: &Expr, alphabet: &Arc<Alphabet>) -> Result<Word, ParseError> {
    let internal = |err: GroupError| ParseError {
        line: 0,
        column: 0,
        message: err.to_string(),
    };
    Ok(match e {
        Expr::Identity => Word::identity(alphabet),
        Expr::Gen { name, line, column } => Word::named(alphabet, name).map_err(|_| ParseError {
            line: *line,
            column: *column,
            message: format!("unknown generator '{name}'"),
        })?,
        Expr::Seq(v) => {
            let mut w = Word::identity(alphabet);
            for x in v {
                w = w.mul(&eval(x, alphabet)?).map_err(internal)?;
            }
            w
        }
        Expr::Comm(a, b) => Word::commutator(&eval(a, alphabet)?, &eval(b, alphabet)?).map_err(internal)?,
        Expr::Pow(a, k) => eval(a, alphabet)?.pow(*k),
    })
}

/// Parses a word over a known alphabet.
pub fn parse_word(text: &str, alphabet: &Arc<Alphabet>) -> Result<Word, ParseError> {
    parse_word_at(text, alphabet, 1)
}

/// As [`parse_word`], reporting errors relative to the given line number.
pub fn parse_word_at(text: &str, alphabet: &Arc<Alphabet>, line: usize) -> Result<Word, ParseError> {
    eval(&parse_expr(text, line)?, alphabet)
}

/// Parses a word and builds its alphabet from the generator names in order
/// of first appearance.
pub fn parse_word_inferring(text: &str) -> Result<Word, ParseError> {
    let e = parse_expr(text, 1)?;
    let mut names = Vec::new();
    collect_names(&e, &mut names);
    if names.is_empty() {
        names.push("x".to_string());
    }
    let alphabet = Alphabet::new(names).map_err(|err| ParseError {
        line: 1,
        column: 1,
        message: err.to_string(),
    })?;
    eval(&e, &alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al() -> Arc<Alphabet> {
        Alphabet::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn commutator_desugars() {
        assert_eq!(parse_word("[x,y]", &al()).unwrap().to_string(), "x y x^-1 y^-1");
    }

    #[test]
    fn powers_and_juxtaposition() {
        assert_eq!(parse_word("x^-1 y x", &al()).unwrap().to_string(), "x^-1 y x");
        assert_eq!(parse_word("x x x^-3 y", &al()).unwrap().to_string(), "x^-1 y");
        assert_eq!(parse_word("(x y)^2", &al()).unwrap().to_string(), "x y x y");
        assert!(parse_word("1", &al()).unwrap().is_identity());
        assert!(parse_word("", &al()).unwrap().is_identity());
    }

    #[test]
    fn nested_commutator_power() {
        let a = al();
        let w = parse_word("[x,[y,z]]^2", &a).unwrap();
        let yz = parse_word("y z y^-1 z^-1", &a).unwrap();
        let inner = Word::commutator(&Word::named(&a, "x").unwrap(), &yz).unwrap();
        assert_eq!(w, inner.pow(2));
        assert_eq!(parse_word(&w.to_string(), &a).unwrap(), w);
    }

    #[test]
    fn errors_carry_locations() {
        let e = parse_word("x [y, q]", &al()).unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        let e = parse_word("x ^ y", &al()).unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_word("[x y", &al()).unwrap_err();
        assert!(e.message.contains("expected ','"));
        let e = parse_word_at("x $", &al(), 7).unwrap_err();
        assert_eq!((e.line, e.column), (7, 3));
        assert!(parse_word("x)", &al()).is_err());
    }

    #[test]
    fn inferred_alphabet_follows_first_appearance() {
        let w = parse_word_inferring("[b,[a,b]]").unwrap();
        assert_eq!(w.alphabet().names(), &["b".to_string(), "a".to_string()]);
    }
}
