//! Framed link diagrams and their abelian Wilson-loop data.
//!
//! A diagram is a purely combinatorial object: a number of oriented
//! components together with a list of signed crossings, each crossing
//! remembering which component passes over and which under. Framing is
//! blackboard framing (the signed count of self-crossings) plus an optional
//! explicit integer offset per component, so a link can also be supplied
//! directly at the invariant level through a crossing-free diagram with
//! offsets.
//!
//! From a diagram we read off the per-component framings, the linking
//! matrix, and the total crossing number `#L`, which feeds the state
//! expectation value `exp(2πi·#L/K)`.

mod parse;

pub use parse::{detect_format, parse_gauss_code, parse_link_text, LinkFormat};

use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

/// Crossing sign: `+1` for a positive crossing, `-1` for a negative one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One signed crossing between the strand of component `over` and the strand
/// of component `under` (the two may coincide for a self-crossing).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingRecord {
    pub over: usize,
    pub under: usize,
    pub sign: Sign,
}

/// An oriented multi-component link diagram with blackboard framing and
/// optional per-component framing offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedLinkDiagram {
    num_components: usize,
    crossings: Vec<CrossingRecord>,
    framing_offsets: Vec<i64>,
}

/// Everything the abelian theory sees of a framed link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkInvariants {
    /// Framing number per component: offset plus signed self-crossing count.
    pub framings: Vec<i64>,
    /// Symmetric linking matrix with zero diagonal; entry `(i, j)` is half
    /// the signed count of crossings between components `i` and `j`.
    pub linking: Vec<Vec<i64>>,
    /// Total crossing number `#L`: the sum of all crossing signs plus all
    /// framing offsets. Equals `Σ framings + Σ_{i≠j} linking`.
    pub total_crossing_number: i64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("diagram must have at least one component")]
    NoComponents,
    #[error("crossing references component {index} but diagram has {num_components}")]
    ComponentOutOfRange { index: usize, num_components: usize },
    #[error("framing offsets length {got} does not match component count {expected}")]
    OffsetLength { got: usize, expected: usize },
    #[error(
        "components {i} and {j} cross an odd signed total of {sum}; \
         such a diagram cannot come from closed curves"
    )]
    OddLinking { i: usize, j: usize, sum: i64 },
    #[error("K must be nonzero")]
    ZeroLevel,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl FramedLinkDiagram {
    /// Builds a diagram, checking component indices and offset length.
    /// `framing_offsets: None` means all offsets zero.
    pub fn new(
        num_components: usize,
        crossings: Vec<CrossingRecord>,
        framing_offsets: Option<Vec<i64>>,
    ) -> Result<Self, LinkError> {
        if num_components == 0 {
            return Err(LinkError::NoComponents);
        }
        for c in &crossings {
            for index in [c.over, c.under] {
                if index >= num_components {
                    return Err(LinkError::ComponentOutOfRange { index, num_components });
                }
            }
        }
        let framing_offsets = match framing_offsets {
            Some(v) if v.len() != num_components => {
                return Err(LinkError::OffsetLength { got: v.len(), expected: num_components })
            }
            Some(v) => v,
            None => vec![0; num_components],
        };
        Ok(Self { num_components, crossings, framing_offsets })
    }

    /// A trivial framed unlink on `n` components: no crossings, zero offsets.
    pub fn unlink(n: usize) -> Result<Self, LinkError> {
        Self::new(n, Vec::new(), None)
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    pub fn crossings(&self) -> &[CrossingRecord] {
        &self.crossings
    }

    pub fn framing_offsets(&self) -> &[i64] {
        &self.framing_offsets
    }

    /// The mirror diagram: every crossing sign and framing offset negated.
    pub fn mirror(&self) -> Self {
        Self {
            num_components: self.num_components,
            crossings: self
                .crossings
                .iter()
                .map(|c| CrossingRecord { sign: c.sign.flipped(), ..*c })
                .collect(),
            framing_offsets: self.framing_offsets.iter().map(|f| -f).collect(),
        }
    }

    /// Places `other` next to `self`: components of `other` are reindexed to
    /// start after the last component of `self`. No new crossings appear, so
    /// `#L` of the union is the sum of the parts.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.num_components;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| CrossingRecord {
            over: c.over + shift,
            under: c.under + shift,
            sign: c.sign,
        }));
        let mut framing_offsets = self.framing_offsets.clone();
        framing_offsets.extend_from_slice(&other.framing_offsets);
        Self {
            num_components: self.num_components + other.num_components,
            crossings,
            framing_offsets,
        }
    }

    /// Computes framings, the linking matrix, and `#L`.
    ///
    /// Fails if some pair of distinct components has an odd signed crossing
    /// total, which cannot happen for closed curves; rejecting is preferred
    /// over silently truncating the halved sum.
    pub fn invariants(&self) -> Result<LinkInvariants, LinkError> {
        let n = self.num_components;
        let mut framings = self.framing_offsets.clone();
        let mut pair_sums = vec![vec![0i64; n]; n];
        for c in &self.crossings {
            if c.over == c.under {
                framings[c.over] += c.sign.value();
            } else {
                pair_sums[c.over][c.under] += c.sign.value();
                pair_sums[c.under][c.over] += c.sign.value();
            }
        }
        let mut linking = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let sum = pair_sums[i][j];
                if sum.rem_euclid(2) != 0 {
                    return Err(LinkError::OddLinking { i, j, sum });
                }
                linking[i][j] = sum / 2;
                linking[j][i] = sum / 2;
            }
        }
        let total_crossing_number = self.crossings.iter().map(|c| c.sign.value()).sum::<i64>()
            + self.framing_offsets.iter().sum::<i64>();
        Ok(LinkInvariants { framings, linking, total_crossing_number })
    }
}

impl LinkInvariants {
    /// State expectation value of the link observable: `exp(2πi·#L/K)`.
    /// `K` is any nonzero real; the result has unit modulus.
    pub fn expectation(&self, level: f64) -> Result<Complex64, LinkError> {
        expectation(self.total_crossing_number, level)
    }
}

/// `exp(2πi·n/K)` for integer `n` and nonzero real `K`.
pub fn expectation(total_crossing_number: i64, level: f64) -> Result<Complex64, LinkError> {
    if level == 0.0 {
        return Err(LinkError::ZeroLevel);
    }
    Ok(Complex64::from_polar(1.0, TAU * total_crossing_number as f64 / level))
}
