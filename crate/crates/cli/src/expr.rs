//! Expressions in the generators of a presentation.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' int)?
//! atom   := name | scalar | '(' expr ')'
//! scalar := int | int '/' int | 'zeta' '(' int ',' int ')'
//! ```
//!
//! Names come from the presentation's alphabet. With grouplike `x`, `y<i>`
//! is also accepted for the `i`-th skew generator.

use std::fmt;

use hopfgk::ncpoly::{x_power_word, Alphabet, FreePoly, Generator};
use hopfgk::scalars::{CycloScalar, Field};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("at {pos}: unknown generator '{name}'")]
    UnknownGenerator { pos: usize, name: String },
    #[error("at {pos}: negative power of the non-invertible '{name}'")]
    NegativePower { pos: usize, name: String },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Scalar(CycloScalar),
    Gen(Generator),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let end = chars.get(j).map_or(src.len(), |c| c.0);
            let v = src[pos..end].parse().map_err(|_| ParseError::Syntax {
                pos,
                msg: "integer out of range".into(),
            })?;
            out.push((pos, Tok::Int(v)));
            i = j;
        } else if c.is_ascii_alphabetic() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_alphanumeric() {
                j += 1;
            }
            let end = chars.get(j).map_or(src.len(), |c| c.0);
            out.push((pos, Tok::Name(src[pos..end].to_string())));
            i = j;
        } else if "+-*/^(),".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.at += 1;
                Ok(if neg { -v } else { v })
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let start = self.pos();
        let atom = self.atom()?;
        if !self.eat('^') {
            return Ok(atom);
        }
        let e = self.int()?;
        if e < 0 {
            match &atom {
                Expr::Gen(Generator::X | Generator::XInv) => {}
                Expr::Scalar(c) if c.inverse().is_some() => {}
                Expr::Gen(g @ Generator::Y(_)) => {
                    return Err(ParseError::NegativePower {
                        pos: start,
                        name: self.alphabet.letter(*g),
                    })
                }
                _ => {
                    return Err(ParseError::Syntax {
                        pos: start,
                        msg: "negative power of a non-invertible expression".into(),
                    })
                }
            }
        }
        Ok(Expr::Pow(Box::new(atom), e))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Int(n)) => {
                self.at += 1;
                if self.eat('/') {
                    let d = self.int()?;
                    if d == 0 {
                        return Err(ParseError::Syntax {
                            pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    Ok(Expr::Scalar(
                        CycloScalar::from_fraction(n, d).expect("nonzero denominator"),
                    ))
                } else {
                    Ok(Expr::Scalar(CycloScalar::from_int(n)))
                }
            }
            Some(Tok::Name(name)) if name == "zeta" => {
                self.at += 1;
                self.expect('(')?;
                let l = self.int()?;
                self.expect(',')?;
                let k = self.int()?;
                self.expect(')')?;
                if l < 1 || l > u32::MAX as i64 {
                    return Err(ParseError::Syntax {
                        pos,
                        msg: "zeta order must be positive".into(),
                    });
                }
                Ok(Expr::Scalar(CycloScalar::make_root(l as u32, k)))
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                resolve(self.alphabet, &name)
                    .map(Expr::Gen)
                    .ok_or(ParseError::UnknownGenerator { pos, name })
            }
            Some(_) => self.err("expected a generator, scalar or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn resolve(alphabet: &Alphabet, name: &str) -> Option<Generator> {
    if name == alphabet.grouplike {
        return Some(Generator::X);
    }
    if let Some(i) = alphabet.skew.iter().position(|s| s == name) {
        return Some(Generator::Y(i as u8 + 1));
    }
    if alphabet.grouplike != "x" {
        return None;
    }
    let i: usize = name.strip_prefix('y')?.parse().ok()?;
    (1..=alphabet.skew.len())
        .contains(&i)
        .then_some(Generator::Y(i as u8))
}

/// Parses `src` against the generator names of `alphabet`.
pub fn parse_expression(src: &str, alphabet: &Alphabet) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        end: src.len(),
        alphabet,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    /// The element of the free algebra denoted by the expression.
    pub fn to_free(&self) -> FreePoly<CycloScalar> {
        match self {
            Expr::Scalar(c) => FreePoly::constant(c.clone()),
            Expr::Gen(g) => FreePoly::word(vec![*g]),
            Expr::Neg(e) => e.to_free().scale(&CycloScalar::from_int(-1)),
            Expr::Add(a, b) => a.to_free().add(&b.to_free()),
            Expr::Sub(a, b) => a.to_free().sub(&b.to_free()),
            Expr::Mul(a, b) => a.to_free().mul(&b.to_free()),
            Expr::Pow(a, e) => match (a.as_ref(), *e) {
                (Expr::Gen(Generator::X), k) => FreePoly::word(x_power_word(k)),
                (Expr::Gen(Generator::XInv), k) => FreePoly::word(x_power_word(-k)),
                (Expr::Scalar(c), k) => FreePoly::constant(c.pow_i64(k).expect("nonzero scalar")),
                (a, k) => {
                    let base = a.to_free();
                    let mut out = FreePoly::constant(CycloScalar::from_int(1));
                    for _ in 0..k {
                        out = out.mul(&base);
                    }
                    out
                }
            },
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => write!(f, "({c})"),
            Expr::Gen(g) => write!(f, "{g:?}"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std2() -> Alphabet {
        Alphabet::standard(2)
    }

    #[test]
    fn shapes() {
        let e = parse_expression("y2*y1 - y1*y2", &std2()).unwrap();
        assert!(matches!(e, Expr::Sub(_, _)));
        let e = parse_expression("x^-3 * y1 + zeta(6,1)*(x^6 - 1)", &std2()).unwrap();
        assert!(matches!(e, Expr::Add(_, _)));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expression("y1^-1", &std2()),
            Err(ParseError::NegativePower {
                pos: 0,
                name: "y1".into()
            })
        );
        assert_eq!(
            parse_expression("x + y3", &std2()),
            Err(ParseError::UnknownGenerator {
                pos: 4,
                name: "y3".into()
            })
        );
        assert!(matches!(
            parse_expression("x + ", &std2()),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_expression("x $ 1", &std2()),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
    }

    #[test]
    fn alphabet_names() {
        let c = Alphabet {
            grouplike: "y".into(),
            skew: vec!["x".into()],
        };
        assert_eq!(parse_expression("y", &c).unwrap(), Expr::Gen(Generator::X));
        assert_eq!(
            parse_expression("x", &c).unwrap(),
            Expr::Gen(Generator::Y(1))
        );
    }
}
