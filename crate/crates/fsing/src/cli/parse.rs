//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' INT)?
//! base   := INT | IDENT | '(' expr ')'
//! ```
//!
//! Implicit multiplication is rejected (`x y` is a syntax error), integer
//! literals reduce mod p, and exponents must be positive. Errors carry a
//! 1-based column.

use crate::arith::poly::Polynomial;
use crate::arith::ring::{poly_constant, poly_variable, Ring};
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        ring,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.syntax_error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        // 1-based column of the current character (or end of input)
        match self.chars.get(self.pos) {
            Some(&(byte, _)) => byte + 1,
            None => self
                .chars
                .last()
                .map_or(1, |&(byte, c)| byte + c.len_utf8() + 1),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax_error(&self, message: &str) -> Error {
        Error::Parse {
            message: message.to_string(),
            column: self.column(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate_first = false;
        if self.peek() == Some('-') {
            self.bump();
            negate_first = true;
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.checked_mul(&rhs)?;
                }
                // reject `x y` / `2x` instead of guessing a product
                Some(c) if c.is_alphanumeric() || c == '(' || c == '_' => {
                    return Err(self.syntax_error("implicit multiplication; use `*`"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let col = self.column();
            let n = self.integer()?;
            if n == 0 {
                return Err(Error::Parse {
                    message: "exponent must be positive".to_string(),
                    column: col,
                });
            }
            return base.checked_pow(n);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.syntax_error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(poly_constant(self.ring, n))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let col = self.column();
                let name = self.identifier();
                match self.ring.variable_index(&name) {
                    Some(i) => Ok(poly_variable(self.ring, i)),
                    None => Err(Error::UnknownIdentifier { name, column: col }),
                }
            }
            Some(_) => Err(self.syntax_error("expected a number, variable or `(`")),
            None => Err(self.syntax_error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.syntax_error("expected an integer"));
        }
        let mut value: u64 = 0;
        while let Some(c) = self.peek() {
            if let Some(d) = c.to_digit(10) {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as u64))
                    .ok_or(Error::IntegerOverflow("integer literal"))?;
                self.bump();
            } else {
                break;
            }
        }
        Ok(value)
    }

    fn identifier(&mut self) -> String {
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        name
    }
}
