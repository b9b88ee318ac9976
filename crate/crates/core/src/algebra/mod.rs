//! The integer quantum torus: exact arithmetic in the group algebra
//! `ℂ[W(1,0), W(0,1), ζ] / (W(1,0)W(0,1) = ζ² W(0,1)W(1,0))` with central ζ.
//!
//! # Normal form
//!
//! Internally every group element is stored in the symmetric basis
//!
//! ```text
//! Ŵ(a,b) := ζ^{ab} W(0,1)^b W(1,0)^a,
//! ```
//!
//! so a word is a unique triple `ζ^c Ŵ(a,b)` and the product carries the
//! antisymmetric cocycle
//!
//! ```text
//! Ŵ(a,b) · Ŵ(a',b') = ζ^{ab' − a'b} Ŵ(a+a', b+b').
//! ```
//!
//! The point of this basis is that `SL(2,ℤ)` acts by plain substitution
//! `(a,b) ↦ (a,b)·g` on momentum pairs with no phase correction: a
//! determinant-one matrix preserves `ab' − a'b`. The W-basis reading of a
//! word is available through [`GroupWord::w_basis`] and
//! [`GroupWord::to_w_basis`].
//!
//! Setting ζ to 1 ([`AlgebraElement::stabilize`]) collapses the algebra onto
//! its commutative shadow, the observable algebra of ordinary flux.
//!
//! Exponents are overflow-checked; wraparound is reported as
//! [`AlgebraError::Overflow`], never silently ignored.

mod coeff;
mod parse;

pub use coeff::{Coeff, GaussianRational};
pub use parse::parse_element;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("integer overflow in exponent arithmetic")]
    Overflow,
    #[error("matrix [[{p},{q}],[{r},{s}]] has determinant {det}, expected 1")]
    NotUnimodular { p: i64, q: i64, r: i64, s: i64, det: i64 },
    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

fn checked_add(x: i64, y: i64) -> Result<i64, AlgebraError> {
    x.checked_add(y).ok_or(AlgebraError::Overflow)
}

fn checked_mul(x: i64, y: i64) -> Result<i64, AlgebraError> {
    x.checked_mul(y).ok_or(AlgebraError::Overflow)
}

/// A group word `ζ^c Ŵ(a,b)` in symmetric normal form.
///
/// `(0,0,0)` is the identity; the normal form of a group element is unique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupWord {
    /// Exponent of the central generator ζ.
    pub c: i64,
    /// First momentum index.
    pub a: i64,
    /// Second momentum index.
    pub b: i64,
}

impl GroupWord {
    pub const IDENTITY: GroupWord = GroupWord { c: 0, a: 0, b: 0 };

    pub const fn new(c: i64, a: i64, b: i64) -> Self {
        Self { c, a, b }
    }

    /// The symmetric basis word `Ŵ(a,b)`.
    pub const fn symmetric(a: i64, b: i64) -> Self {
        Self { c: 0, a, b }
    }

    /// The W-basis word `W(0,1)^b W(1,0)^a`, i.e. `ζ^{-ab} Ŵ(a,b)`.
    pub fn w_basis(a: i64, b: i64) -> Result<Self, AlgebraError> {
        let c = checked_mul(a, b)?.checked_neg().ok_or(AlgebraError::Overflow)?;
        Ok(Self { c, a, b })
    }

    /// Rewrites `ζ^c Ŵ(a,b)` as `ζ^e W(0,1)^b W(1,0)^a`, returning `(e, a, b)`.
    pub fn to_w_basis(&self) -> Result<(i64, i64, i64), AlgebraError> {
        Ok((checked_add(self.c, checked_mul(self.a, self.b)?)?, self.a, self.b))
    }

    /// Group product in normal form:
    /// `(c,a,b)·(c',a',b') = (c + c' + ab' − a'b, a + a', b + b')`.
    pub fn mul(&self, rhs: &GroupWord) -> Result<GroupWord, AlgebraError> {
        let cocycle = checked_mul(self.a, rhs.b)?
            .checked_sub(checked_mul(rhs.a, self.b)?)
            .ok_or(AlgebraError::Overflow)?;
        Ok(GroupWord {
            c: checked_add(checked_add(self.c, rhs.c)?, cocycle)?,
            a: checked_add(self.a, rhs.a)?,
            b: checked_add(self.b, rhs.b)?,
        })
    }

    /// The group inverse `(−c, −a, −b)`.
    pub fn inverse(&self) -> Result<GroupWord, AlgebraError> {
        let neg = |x: i64| x.checked_neg().ok_or(AlgebraError::Overflow);
        Ok(GroupWord { c: neg(self.c)?, a: neg(self.a)?, b: neg(self.b)? })
    }
}

/// Words order lexicographically by `(a, b, c)`; this is the order used
/// everywhere an element is listed or printed.
impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.b, self.c).cmp(&(other.a, other.b, other.c))
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.c != 0 {
            parts.push(format!("z^{}", self.c));
        }
        if (self.a, self.b) != (0, 0) {
            parts.push(format!("Wh({},{})", self.a, self.b));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

/// A finite complex-linear combination of group words, kept in canonical
/// sparse form: no stored zero coefficients, words in `(a,b,c)` order.
#[derive(Debug, Clone, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<GroupWord, Coeff>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The multiplicative identity `1 = Ŵ(0,0)`.
    pub fn one() -> Self {
        Self::from_word(GroupWord::IDENTITY)
    }

    pub fn from_word(w: GroupWord) -> Self {
        Self::from_term(w, Coeff::one())
    }

    pub fn from_term(w: GroupWord, coeff: Coeff) -> Self {
        let mut e = Self::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in `(a,b,c)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, w: &GroupWord) -> Coeff {
        self.terms.get(w).copied().unwrap_or(Coeff::zero())
    }

    fn add_term(&mut self, w: GroupWord, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert(Coeff::zero());
        *entry = *entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(*w, *c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(w, c)| (*w, -*c)).collect() }
    }

    pub fn scale(&self, factor: Coeff) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(*w, *c * factor);
        }
        out
    }

    /// Bilinear extension of the word product.
    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        let mut out = Self::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                out.add_term(w1.mul(w2)?, *c1 * *c2);
            }
        }
        Ok(out)
    }

    /// Integer power (exponent ≥ 0) by repeated multiplication.
    pub fn pow(&self, exponent: u32) -> Result<Self, AlgebraError> {
        let mut out = Self::one();
        for _ in 0..exponent {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The commutative image at ζ → 1: all words with equal `(a,b)` merge,
    /// coefficients summed. Multiplication commutes on the image.
    pub fn stabilize(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(GroupWord::symmetric(w.a, w.b), *c);
        }
        out
    }
}

impl PartialEq for AlgebraElement {
    /// Term-wise comparison over the union of stored words. Exact
    /// coefficients compare exactly; see [`Coeff`] for the mixed case.
    fn eq(&self, other: &Self) -> bool {
        let words: std::collections::BTreeSet<&GroupWord> =
            self.terms.keys().chain(other.terms.keys()).collect();
        words.into_iter().all(|w| self.coeff_of(w) == other.coeff_of(w))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::format_element(self, f)
    }
}

/// An element of the torus mapping class group `SL(2,ℤ)`, the matrix
/// `[[p, q], [r, s]]` with `ps − qr = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SL2Z {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl SL2Z {
    pub const IDENTITY: SL2Z = SL2Z { p: 1, q: 0, r: 0, s: 1 };

    /// The order-four generator `S = [[0, −1], [1, 0]]`.
    pub const S: SL2Z = SL2Z { p: 0, q: -1, r: 1, s: 0 };

    /// The shear generator `T = [[1, 1], [0, 1]]`.
    pub const T: SL2Z = SL2Z { p: 1, q: 1, r: 0, s: 1 };

    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self, AlgebraError> {
        let det = checked_mul(p, s)?
            .checked_sub(checked_mul(q, r)?)
            .ok_or(AlgebraError::Overflow)?;
        if det != 1 {
            return Err(AlgebraError::NotUnimodular { p, q, r, s, det });
        }
        Ok(Self { p, q, r, s })
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &SL2Z) -> Result<SL2Z, AlgebraError> {
        Ok(SL2Z {
            p: checked_add(checked_mul(self.p, rhs.p)?, checked_mul(self.q, rhs.r)?)?,
            q: checked_add(checked_mul(self.p, rhs.q)?, checked_mul(self.q, rhs.s)?)?,
            r: checked_add(checked_mul(self.r, rhs.p)?, checked_mul(self.s, rhs.r)?)?,
            s: checked_add(checked_mul(self.r, rhs.q)?, checked_mul(self.s, rhs.s)?)?,
        })
    }

    pub fn inverse(&self) -> SL2Z {
        SL2Z { p: self.s, q: -self.q, r: -self.r, s: self.p }
    }

    /// Row-vector substitution on a momentum pair: `(a,b) ↦ (a,b)·g`.
    /// The central exponent is untouched; determinant one keeps the product
    /// cocycle invariant, so this extends to an algebra automorphism.
    pub fn act_word(&self, w: &GroupWord) -> Result<GroupWord, AlgebraError> {
        Ok(GroupWord {
            c: w.c,
            a: checked_add(checked_mul(w.a, self.p)?, checked_mul(w.b, self.r)?)?,
            b: checked_add(checked_mul(w.a, self.q)?, checked_mul(w.b, self.s)?)?,
        })
    }

    /// Linear extension of [`SL2Z::act_word`] to algebra elements.
    pub fn act(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero();
        for (w, c) in x.terms() {
            out.add_term(self.act_word(w)?, *c);
        }
        Ok(out)
    }
}

impl fmt::Display for SL2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.p, self.q, self.r, self.s)
    }
}
