//! Text form of rational series for CLI arguments, e.g. `1/(1-x)`,
//! `x(1+x)/(1-x)^3`, `(1+3x+x^2)/(1-x)^5`. The numerator is a product of
//! integer, `x`-power and parenthesized-sum factors (juxtaposition
//! multiplies); the denominator, when present, must be a power of (1-x).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::series::EhrSeries;

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax { line: 1, col: self.pos + 1, msg: format!("{msg} in series '{}'", self.text) }
    }

    fn eat(&mut self, want: char) -> Result<()> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(self.error(&format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(&format!("expected '{want}', found end"))),
        }
    }

    fn integer(&mut self) -> Result<u32> {
        let mut digits = String::new();
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            digits.push(self.chars[self.pos]);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits.parse().map_err(|_| self.error("integer too large"))
    }

    /// factor := INT | "x" ["^" INT] | "(" sum ")" ["^" INT]
    fn factor(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                self.skip_ws();
                let v = self.integer()?;
                Ok(IntPoly::new(vec![BigInt::from(v)]))
            }
            Some('x') => {
                self.bump();
                let exp = self.opt_exponent()?;
                Ok(IntPoly::monomial(exp))
            }
            Some('(') => {
                self.bump();
                let inner = self.sum()?;
                self.eat(')')?;
                let exp = self.opt_exponent()?;
                Ok(inner.pow(exp))
            }
            Some(c) => Err(self.error(&format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end")),
        }
    }

    fn opt_exponent(&mut self) -> Result<usize> {
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            Ok(self.integer()? as usize)
        } else {
            Ok(1)
        }
    }

    /// product := factor { factor }  (juxtaposition multiplies)
    fn product(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == 'x' || c == '(') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    /// sum := ["-"] product { ("+" | "-") product }
    fn sum(&mut self) -> Result<IntPoly> {
        let mut acc = if self.peek() == Some('-') {
            self.bump();
            self.product()?.mul(&IntPoly::from_i64(&[-1]))
        } else {
            self.product()?
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.product()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.add(&self.product()?.mul(&IntPoly::from_i64(&[-1])));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// denom := "(" "1" "-" "x" ")" ["^" INT]
    fn denom_exp(&mut self) -> Result<usize> {
        self.eat('(')?;
        self.skip_ws();
        if self.integer()? != 1 {
            return Err(self.error("denominator must be a power of (1-x)"));
        }
        self.eat('-')?;
        self.eat('x')?;
        self.eat(')')?;
        self.opt_exponent()
    }
}

/// Parse a series literal `numerator[/(1-x)^e]`.
pub fn parse_series(text: &str) -> Result<EhrSeries> {
    let mut s = Scanner { chars: text.chars().collect(), pos: 0, text };
    let numer = s.product()?;
    let denom_exp = if s.peek() == Some('/') {
        s.bump();
        s.denom_exp()?
    } else {
        0
    };
    if let Some(c) = s.peek() {
        return Err(s.error(&format!("trailing input starting at '{c}'")));
    }
    Ok(EhrSeries::new(numer, denom_exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_forms() {
        assert_eq!(parse_series("1/(1-x)").unwrap(), EhrSeries::one_over(1));
        assert_eq!(parse_series("1").unwrap(), EhrSeries::new(IntPoly::one(), 0));
        let s = parse_series("x(1+x)/(1-x)^3").unwrap();
        assert_eq!(s.hstar, IntPoly::from_i64(&[0, 1, 1]));
        assert_eq!(s.denom_exp, 3);
    }

    #[test]
    fn polynomial_numerators() {
        let s = parse_series("(1+3x+x^2)/(1-x)^5").unwrap();
        assert_eq!(s.hstar, IntPoly::from_i64(&[1, 3, 1]));
        let s = parse_series("(1+x)^2/(1-x)^5").unwrap();
        assert_eq!(s.hstar, IntPoly::from_i64(&[1, 2, 1]));
        let s = parse_series("2x^2(1-x)").unwrap();
        assert_eq!(s.hstar, IntPoly::from_i64(&[0, 0, 2, -2]));
        assert_eq!(s.denom_exp, 0);
    }

    #[test]
    fn bad_forms() {
        assert!(parse_series("1/(2-x)").is_err());
        assert!(parse_series("1/(1-y)").is_err());
        assert!(parse_series("").is_err());
        assert!(parse_series("1+").is_err());
        assert!(parse_series("(1+x").is_err());
    }

    #[test]
    fn one_over_one_is_unit() {
        let s = parse_series("1/(1-x)^0").unwrap();
        assert_eq!(s, EhrSeries::unit());
    }
}
