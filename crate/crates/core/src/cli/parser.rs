//! Expression grammar.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' ['-'] int)?
//! atom   := int | name | '(' expr ')' | 'comm[' expr ',' expr ']' | 'acomm{' expr ',' expr '}'
//! ```
//!
//! A `+` directly after `a`, `b`, `b1` or `b2` belongs to the name unless
//! the next character starts an operand.

use std::fmt;

use num::BigInt;
use thiserror::Error;

const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Name {
        name: String,
        column: usize,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div {
        num: Box<Expr>,
        den: Box<Expr>,
        column: usize,
    },
    Pow(Box<Expr>, i64),
    Comm(Box<Expr>, Box<Expr>),
    Acomm(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Number of top-level summands.
    pub fn summands(&self) -> usize {
        match self {
            Expr::Add(a, _) | Expr::Sub(a, _) => a.summands() + 1,
            _ => 1,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Name { name, .. } => write!(f, "{name}"),
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div { num, den, .. } => write!(f, "({num} / {den})"),
            Expr::Pow(x, k) => write!(f, "{x}^{k}"),
            Expr::Comm(a, b) => write!(f, "comm[{a}, {b}]"),
            Expr::Acomm(a, b) => write!(f, "acomm{{{a}, {b}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Name(s) => format!("name '{s}'"),
        Tok::End => "end of input".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::LBracket => "'['".into(),
        Tok::RBracket => "']'".into(),
        Tok::LBrace => "'{'".into(),
        Tok::RBrace => "'}'".into(),
        Tok::Comma => "','".into(),
    }
}

fn starts_operand(c: Option<char>) -> bool {
    matches!(c, Some(c) if c.is_ascii_alphanumeric() || c == '(')
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), column));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let mut name: String = chars[start..i].iter().collect();
            if matches!(name.as_str(), "a" | "b" | "b1" | "b2")
                && chars.get(i) == Some(&'+')
                && !starts_operand(chars.get(i + 1).copied())
            {
                name.push('+');
                i += 1;
            }
            out.push((Tok::Name(name), column));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            _ => {
                return Err(ParseError {
                    column,
                    message: format!("unexpected character '{c}'"),
                })
            }
        };
        out.push((tok, column));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", describe(&t), describe(self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.error("expression nested too deeply");
        }
        let mut lhs = if *self.peek() == Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    let column = self.column();
                    self.bump();
                    lhs = Expr::Div {
                        num: Box::new(lhs),
                        den: Box::new(self.factor()?),
                        column,
                    };
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) => {
                let Ok(k) = i64::try_from(&n) else {
                    return self.error("exponent too large");
                };
                if k > 10_000 {
                    return self.error("exponent too large");
                }
                self.bump();
                Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }))
            }
            t => self.error(format!("expected integer exponent, found {}", describe(&t))),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let column = self.column();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Name(name) if name == "comm" && *self.peek() == Tok::LBracket => {
                self.bump();
                let (a, b) = self.pair(Tok::RBracket)?;
                Ok(Expr::Comm(Box::new(a), Box::new(b)))
            }
            Tok::Name(name) if name == "acomm" && *self.peek() == Tok::LBrace => {
                self.bump();
                let (a, b) = self.pair(Tok::RBrace)?;
                Ok(Expr::Acomm(Box::new(a), Box::new(b)))
            }
            Tok::Name(name) => Ok(Expr::Name { name, column }),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            t => Err(ParseError {
                column,
                message: format!("expected an operand, found {}", describe(&t)),
            }),
        }
    }

    fn pair(&mut self, close: Tok) -> Result<(Expr, Expr), ParseError> {
        let a = self.expr()?;
        self.expect(Tok::Comma)?;
        let b = self.expr()?;
        self.expect(close)?;
        Ok((a, b))
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_summands() {
        let e = parse("a * a+ - q^-1 * a+ * a").unwrap();
        assert_eq!(e.summands(), 2);
    }

    #[test]
    fn anticommutator_node() {
        assert!(matches!(parse("acomm{E23, E32}").unwrap(), Expr::Acomm(..)));
        assert!(matches!(parse("comm[a, a+]").unwrap(), Expr::Comm(..)));
    }

    #[test]
    fn creation_suffix() {
        let name = |s: &str| match parse(s).unwrap() {
            Expr::Name { name, .. } => name,
            other => panic!("{other:?}"),
        };
        assert_eq!(name("b2+"), "b2+");
        assert_eq!(name("a+"), "a+");
        assert!(matches!(parse("a+b").unwrap(), Expr::Add(..)));
        assert!(matches!(parse("a+^2").unwrap(), Expr::Pow(_, 2)));
        assert!(matches!(parse("a + b").unwrap(), Expr::Add(..)));
    }

    #[test]
    fn precedence() {
        let e = parse("q + a*t^2").unwrap();
        assert_eq!(e.to_string(), "(q + (a * t^2))");
        let e = parse("-b+*e23").unwrap();
        assert_eq!(e.to_string(), "-((b+ * e23))");
    }

    #[test]
    fn positioned_errors() {
        let e = parse("a * * t").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse("(a + t").unwrap_err();
        assert_eq!(e.column, 7);
        assert!(e.message.contains("')'"));
        let e = parse("a $ t").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse("t^x").is_err());
        assert!(parse("").is_err());
        assert!(parse("a t").is_err());
    }

    #[test]
    fn deep_nesting_rejected() {
        let s = format!("{}a{}", "(".repeat(1000), ")".repeat(1000));
        assert!(parse(&s).is_err());
    }
}
