//! Artin braid words, their abelian phases, and closure into framed links.
//!
//! A word on `n` strands is a sequence of nonzero letters `k` with
//! `|k| ≤ n−1`, letter `k` meaning the generator `σ_{|k|}` with crossing
//! sign `sign(k)`. Letters act left to right; the permutation of a word is
//! the product of the adjacent transpositions `(|k|−1, |k|)` in word order.
//!
//! The one-dimensional representations send every positive crossing to the
//! fixed phase `e^{2πi/K}`, so a word maps to `exp(2πi·exponent_sum/K)` —
//! invariant under both braid relations, which preserve the exponent sum.
//!
//! Trace closure turns a word into a framed link diagram with blackboard
//! framing: components are the cycles of the word's permutation and every
//! letter becomes one signed crossing between the components that own the
//! two strand positions involved at that point of the word. Because `#L`
//! of a blackboard-framed diagram is the total signed crossing count, the
//! closure's `#L` equals the exponent sum, tying the braid phase to the
//! link expectation value.

use crate::link::{CrossingRecord, FramedLinkDiagram, Sign};
use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {position} is zero; letters are nonzero generator indices")]
    ZeroLetter { position: usize },
    #[error("letter {position} uses generator {letter} but only σ_1..σ_{max} exist on {strands} strands")]
    OutOfRange { position: usize, letter: i32, max: usize, strands: usize },
    #[error("cannot concatenate words on {left} and {right} strands")]
    StrandMismatch { left: usize, right: usize },
    #[error("K must be nonzero")]
    ZeroLevel,
    #[error("{message}")]
    Parse { message: String },
}

/// A braid word: strand count plus signed Artin generator letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for (position, &letter) in letters.iter().enumerate() {
            if letter == 0 {
                return Err(BraidError::ZeroLetter { position });
            }
            if letter.unsigned_abs() as usize > strands - 1 {
                return Err(BraidError::OutOfRange {
                    position,
                    letter,
                    max: strands.saturating_sub(1),
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parses the `"n: k1 k2 ... km"` format.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let (head, tail) = text.split_once(':').ok_or_else(|| BraidError::Parse {
            message: "expected `n: k1 k2 ...`".into(),
        })?;
        let strands: usize = head.trim().parse().map_err(|_| BraidError::Parse {
            message: format!("cannot read strand count from `{}`", head.trim()),
        })?;
        let letters = tail
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>().map_err(|_| BraidError::Parse {
                    message: format!("cannot read letter from `{t}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(self.strands, letters)
    }

    /// Sum of letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&k| k.signum() as i64).sum()
    }

    /// `exp(2πi·exponent_sum/K)` for nonzero real `K`.
    pub fn abelian_phase(&self, level: f64) -> Result<Complex64, BraidError> {
        if level == 0.0 {
            return Err(BraidError::ZeroLevel);
        }
        Ok(Complex64::from_polar(1.0, TAU * self.exponent_sum() as f64 / level))
    }

    /// Where each starting position ends up: `perm[start] = end`.
    pub fn permutation(&self) -> Vec<usize> {
        let n = self.strands;
        // position[s] = current position of the strand that started at s
        let mut position: Vec<usize> = (0..n).collect();
        let mut occupant: Vec<usize> = (0..n).collect();
        for &letter in &self.letters {
            let idx = letter.unsigned_abs() as usize - 1;
            let (sa, sb) = (occupant[idx], occupant[idx + 1]);
            occupant.swap(idx, idx + 1);
            position[sa] = idx + 1;
            position[sb] = idx;
        }
        position
    }

    /// Trace closure as a blackboard-framed link diagram.
    ///
    /// Components are the cycles of [`BraidWord::permutation`], numbered by
    /// first appearance among starting positions. For a positive letter the
    /// strand arriving from the left passes over; for a negative letter the
    /// one from the right does.
    pub fn closure(&self) -> FramedLinkDiagram {
        let n = self.strands;
        let perm = self.permutation();

        // Cycle decomposition → component index per starting position.
        let mut component = vec![usize::MAX; n];
        let mut num_components = 0;
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let mut cursor = start;
            while component[cursor] == usize::MAX {
                component[cursor] = num_components;
                cursor = perm[cursor];
            }
            num_components += 1;
        }

        let mut occupant: Vec<usize> = (0..n).collect();
        let mut crossings = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            let idx = letter.unsigned_abs() as usize - 1;
            let (left, right) = (component[occupant[idx]], component[occupant[idx + 1]]);
            let (over, under, sign) = if letter > 0 {
                (left, right, Sign::Plus)
            } else {
                (right, left, Sign::Minus)
            };
            crossings.push(CrossingRecord { over, under, sign });
            occupant.swap(idx, idx + 1);
        }

        FramedLinkDiagram::new(num_components, crossings, None)
            .expect("closure indices are cycle labels, always in range")
    }
}
