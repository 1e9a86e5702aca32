//! Recursive descent parser for integer polynomials in `x`.
//!
//! ```text
//! expr  := ['+' | '-'] term (('+' | '-') term)*
//! term  := int ['*'] power | int | power
//! power := 'x' ['^' uint]
//! ```
//!
//! Whitespace is ignored between tokens. `3x^5` and `3*x^5` are the same
//! term, and repeated degrees are summed.

use std::fmt;

use num_bigint::BigInt;
use relcyc_core::IntPoly;

/// Exponents above this are rejected instead of allocating a dense vector.
pub const MAX_DEGREE: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<&'static str>,
    /// The offending character, `None` at end of input.
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let found = match self.found {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        write!(
            f,
            "at position {}: expected {}, found {}",
            self.position,
            self.expected.join(" or "),
            found
        )
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.rest().chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn fail(&mut self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            position: self.pos,
            found: self.peek(),
            expected,
        }
    }

    fn digits(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        let s = &self.rest()[..len];
        self.pos += len;
        s
    }

    fn power(&mut self) -> Result<usize, ParseError> {
        // caller has seen 'x'
        self.bump();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.fail(vec!["exponent"]));
        }
        match digits.parse::<usize>() {
            Ok(e) if e <= MAX_DEGREE => Ok(e),
            _ => Err(ParseError {
                position: start,
                expected: vec!["exponent at most 1048576"],
                found: digits.chars().next(),
            }),
        }
    }

    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        match self.peek() {
            Some('x') => Ok((BigInt::from(1), self.power()?)),
            Some(c) if c.is_ascii_digit() => {
                let coeff: BigInt = self.digits().parse().expect("nonempty digit run");
                match self.peek() {
                    Some('*') => {
                        self.bump();
                        if self.peek() != Some('x') {
                            return Err(self.fail(vec!["x"]));
                        }
                        Ok((coeff, self.power()?))
                    }
                    Some('x') => Ok((coeff, self.power()?)),
                    _ => Ok((coeff, 0)),
                }
            }
            _ => Err(self.fail(vec!["integer", "x"])),
        }
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut add = |c: BigInt, e: usize| {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::from(0));
            }
            coeffs[e] += c;
        };
        let mut negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (c, e) = self.term()?;
            add(if negative { -c } else { c }, e);
            negative = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                None => break,
                _ => return Err(self.fail(vec!["'+'", "'-'", "end of input"])),
            };
            self.bump();
        }
        Ok(IntPoly::new(coeffs))
    }
}

pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    Parser { src: text, pos: 0 }.expr()
}
