//! Textual syntax for algebra elements.
//!
//! Elements are sums of terms, each term a `*`-product of factors:
//!
//! ```text
//! 2.5 * z^3 * W(1,-2) - Wh(0,1) + (1/2 + 3/4i) * z^-1
//! ```
//!
//! Factors are `z` (the central ζ, with optional integer power `z^k`),
//! symmetric-basis words `Wh(a,b)`, W-basis words `W(a,b)`, the imaginary
//! unit `i`, numbers (integers, fractions `p/q`, finite decimals — all
//! exact; scientific notation parses as floating point), and parenthesized
//! subexpressions. Whitespace is insignificant.
//!
//! Printing uses the same syntax, words sorted lexicographically by
//! `(a, b, c)`, always in the symmetric basis.

use super::coeff::{Coeff, GaussianRational};
use super::{AlgebraElement, AlgebraError, GroupWord};
use num_rational::Ratio;
use std::fmt;

/// Parses an element expression.
pub fn parse_element(text: &str) -> Result<AlgebraElement, AlgebraError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), AlgebraError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement, AlgebraError> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            let sign = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            acc = if sign { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgebraElement, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'z') => {
                self.pos += 1;
                let power = if self.eat(b'^') { self.signed_int()? } else { 1 };
                Ok(AlgebraElement::from_word(GroupWord::new(power, 0, 0)))
            }
            Some(b'W') => {
                self.pos += 1;
                let symmetric = if self.bytes.get(self.pos) == Some(&b'h') {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                self.expect(b'(')?;
                let a = self.signed_int()?;
                self.expect(b',')?;
                let b = self.signed_int()?;
                self.expect(b')')?;
                let w = if symmetric {
                    GroupWord::symmetric(a, b)
                } else {
                    GroupWord::w_basis(a, b)?
                };
                Ok(AlgebraElement::from_word(w))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(AlgebraElement::from_term(
                    GroupWord::IDENTITY,
                    Coeff::Exact(GaussianRational::i()),
                ))
            }
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.number()?;
                Ok(AlgebraElement::from_term(GroupWord::IDENTITY, coeff))
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn signed_int(&mut self) -> Result<i64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes.get(self.pos), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse().map_err(|_| AlgebraError::Parse {
            position: start,
            message: format!("cannot read integer from `{text}`"),
        })
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).unwrap()
    }

    /// Number literal, optionally followed by `i` for a purely imaginary
    /// value. `p/q` and finite decimals are exact; `e`-notation is float.
    fn number(&mut self) -> Result<Coeff, AlgebraError> {
        let start = self.pos;
        let int_part = self.digits();
        let mut gauss: Option<GaussianRational> = None;

        match self.bytes.get(self.pos) {
            Some(b'/') => {
                self.pos += 1;
                let denom_str = self.digits();
                let numer: i128 = int_part
                    .parse()
                    .map_err(|_| self.error("numerator out of range"))?;
                let denom: i128 = denom_str
                    .parse()
                    .map_err(|_| self.error("denominator out of range"))?;
                if denom == 0 {
                    return Err(self.error("zero denominator"));
                }
                gauss = Some(GaussianRational::new(Ratio::new(numer, denom), Ratio::from_integer(0)));
            }
            Some(b'.') => {
                self.pos += 1;
                let frac = self.digits();
                if !matches!(self.bytes.get(self.pos), Some(b'e') | Some(b'E')) {
                    let joined = format!("{int_part}{frac}");
                    let numer: i128 =
                        joined.parse().map_err(|_| self.error("decimal literal too long"))?;
                    let denom = 10i128
                        .checked_pow(frac.len() as u32)
                        .ok_or_else(|| self.error("decimal literal too long"))?;
                    gauss = Some(GaussianRational::new(
                        Ratio::new(numer, denom),
                        Ratio::from_integer(0),
                    ));
                }
            }
            _ => {
                if !matches!(self.bytes.get(self.pos), Some(b'e') | Some(b'E')) {
                    let numer: i128 =
                        int_part.parse().map_err(|_| self.error("integer literal out of range"))?;
                    gauss = Some(GaussianRational::new(
                        Ratio::from_integer(numer),
                        Ratio::from_integer(0),
                    ));
                }
            }
        }

        let mut coeff = match gauss {
            Some(g) => Coeff::Exact(g),
            None => {
                // Scientific notation: defer to the float parser.
                if matches!(self.bytes.get(self.pos), Some(b'e') | Some(b'E')) {
                    self.pos += 1;
                    if matches!(self.bytes.get(self.pos), Some(b'+') | Some(b'-')) {
                        self.pos += 1;
                    }
                    self.digits();
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let value: f64 = text.parse().map_err(|_| AlgebraError::Parse {
                    position: start,
                    message: format!("cannot read number from `{text}`"),
                })?;
                Coeff::Approx(num_complex::Complex64::new(value, 0.0))
            }
        };

        if self.bytes.get(self.pos) == Some(&b'i') {
            self.pos += 1;
            coeff = coeff * Coeff::Exact(GaussianRational::i());
        }
        Ok(coeff)
    }
}

fn coeff_is_displayed_negative(c: &Coeff) -> bool {
    match c {
        Coeff::Exact(g) => {
            let zero = Ratio::from_integer(0);
            g.re < zero || (g.re == zero && g.im < zero)
        }
        Coeff::Approx(z) => z.re < 0.0 || (z.re == 0.0 && z.im < 0.0),
    }
}

fn is_exact_one(c: &Coeff) -> bool {
    matches!(c, Coeff::Exact(g) if *g == GaussianRational::one())
}

pub(super) fn format_element(e: &AlgebraElement, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if e.is_zero() {
        return write!(f, "0");
    }
    for (idx, (word, coeff)) in e.terms().enumerate() {
        let negative = coeff_is_displayed_negative(coeff);
        let magnitude = if negative { -*coeff } else { *coeff };
        match (idx, negative) {
            (0, false) => {}
            (0, true) => write!(f, "-")?,
            (_, false) => write!(f, " + ")?,
            (_, true) => write!(f, " - ")?,
        }
        if *word == GroupWord::IDENTITY {
            write!(f, "{magnitude}")?;
        } else if is_exact_one(&magnitude) {
            write!(f, "{word}")?;
        } else {
            write!(f, "{magnitude} * {word}")?;
        }
    }
    Ok(())
}

impl AlgebraElement {
    /// Renders the element with words in the W basis: `ζ^c Ŵ(a,b)` appears
    /// as `z^{c+ab} * W(a,b)`. Fails on exponent overflow in the rewrite.
    pub fn w_basis_string(&self) -> Result<String, AlgebraError> {
        if self.is_zero() {
            return Ok("0".to_string());
        }
        let mut out = String::new();
        for (idx, (word, coeff)) in self.terms().enumerate() {
            let negative = coeff_is_displayed_negative(coeff);
            let magnitude = if negative { -*coeff } else { *coeff };
            match (idx, negative) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            let (e, a, b) = word.to_w_basis()?;
            let mut parts = Vec::new();
            if !is_exact_one(&magnitude) || (e == 0 && (a, b) == (0, 0)) {
                parts.push(magnitude.to_string());
            }
            if e != 0 {
                parts.push(format!("z^{e}"));
            }
            if (a, b) != (0, 0) {
                parts.push(format!("W({a},{b})"));
            }
            out.push_str(&parts.join(" * "));
        }
        Ok(out)
    }
}
