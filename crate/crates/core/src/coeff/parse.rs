use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Rational, Scalar};

/// Error parsing the textual scalar grammar.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected token {0:?}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("division is only defined by nonzero constants")]
    BadDivisor,
    #[error("exponent out of range")]
    BadExponent,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(digits.parse().expect("digit string")));
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(ident));
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            other => return Err(ParseError::UnexpectedChar(other, pos)),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token, ParseError> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or(ParseError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let divisor = self.factor()?;
                    let g = divisor.as_gaussian().ok_or(ParseError::BadDivisor)?;
                    if g.is_zero() {
                        return Err(ParseError::BadDivisor);
                    }
                    acc = acc.scale(&g.inv());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.next()? {
                Token::Int(n) => {
                    let k: u32 = n.try_into().map_err(|_| ParseError::BadExponent)?;
                    let mut acc = Scalar::one();
                    for _ in 0..k {
                        acc = &acc * &base;
                    }
                    Ok(acc)
                }
                other => Err(ParseError::UnexpectedToken(format!("{other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        match self.next()? {
            Token::Int(n) => Ok(Scalar::from_rat(Rational::from_integer(n))),
            Token::Ident(name) => match name.as_str() {
                "i" => Ok(Scalar::i()),
                "alpha" => Ok(Scalar::alpha()),
                other => Err(ParseError::UnexpectedToken(other.to_string())),
            },
            Token::Minus => Ok(-&self.factor()?),
            Token::Open => {
                let inner = self.expr()?;
                match self.next()? {
                    Token::Close => Ok(inner),
                    other => Err(ParseError::UnexpectedToken(format!("{other:?}"))),
                }
            }
            other => Err(ParseError::UnexpectedToken(format!("{other:?}"))),
        }
    }
}

/// Parse the scalar grammar: sums of products of `p/q`, `i`, `alpha^k`,
/// with parentheses and unary minus.
pub fn parse_scalar(input: &str) -> Result<Scalar, ParseError> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let s = p.expr()?;
    match p.peek() {
        None => Ok(s),
        Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
    }
}

/// Parse an exact rational `p`, `-p`, or `p/q`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseError> {
    let s = parse_scalar(input)?;
    s.as_rational()
        .ok_or_else(|| ParseError::UnexpectedToken(input.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    #[test]
    fn parses_rendered_grammar() {
        let s = parse_scalar("1 + 12*alpha^2").unwrap();
        let expected = &Scalar::one() + &Scalar::alpha_pow(2).scale_rat(&rat_int(12));
        assert_eq!(s, expected);
        assert_eq!(
            parse_scalar("(1/2 + 3*i)*alpha^4").unwrap().to_string(),
            "(1/2 + 3*i)*alpha^4"
        );
        assert_eq!(
            parse_scalar("-2*i*alpha").unwrap().to_string(),
            "-2*i*alpha"
        );
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("26").unwrap(), rat_int(26));
        assert!(parse_rational("alpha").is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("1 +").is_err());
        assert!(parse_scalar("beta").is_err());
        assert!(parse_scalar("1 / alpha").is_err());
        assert!(parse_scalar("$").is_err());
    }
}
