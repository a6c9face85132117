use num_bigint::BigInt;
use num_traits::Zero;

use super::{PolyError, Polynomial, Rational, Ring};

/// Parses the polynomial grammar
///
/// ```text
/// expr     := ['-'] term (('+' | '-') term)*
/// term     := factor ('*' factor)*
/// factor   := base ('^' nat)?
/// base     := rational | name | '(' expr ')'
/// rational := int ('/' nat)?
/// ```
///
/// Whitespace is ignored. Implicit multiplication (`2x`) is rejected.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let n = self.digits()?;
            let n: u32 = n.try_into().map_err(|_| PolyError::Syntax {
                offset: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let value = if self.eat(b'/') {
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(PolyError::Syntax {
                            offset: at,
                            message: "zero denominator".into(),
                        });
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                self.reject_implicit_product()?;
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self
                    .ring
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                Ok(Polynomial::var_index(self.ring, i))
            }
            Some(_) => Err(self.error("expected a number, a variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn reject_implicit_product(&mut self) -> Result<(), PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'(' => {
                Err(self.error("implicit multiplication is not allowed; use `*`"))
            }
            _ => Ok(()),
        }
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digit string"))
    }
}
