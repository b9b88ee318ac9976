//! Finite-dimensional level-K representations of the observable algebra.
//!
//! At level `K` the central generator acts as the root of unity
//! `ζ = e^{iπ/K}` (its square `q = e^{2πi/K}` is the braiding phase per
//! crossing), and the two flux observables act on `ℂ^K` as phased clock and
//! shift matrices
//!
//! ```text
//! U = e^{2πiα/K} · diag(q⁰, …, q^{K−1}),   V = e^{2πiβ/K} · (j ↦ j+1 mod K),
//! ```
//!
//! which satisfy `U·V = q·V·U`. The pair `(α, β) ∈ [0,1)²` labels the
//! superselection sector through the central characters
//! `ρ(Ŵ(K,0)) = e^{2πiα}·1` and `ρ(Ŵ(0,K)) = e^{2πiβ}·1`.
//!
//! `ζ = e^{iπ/K}` is a choice of square root of `q`; the other root is
//! available through [`ZetaRoot::Alternate`].
//!
//! Modular `S`/`T` intertwiners and their relation residuals live in the
//! [`intertwiner`] submodule (re-exported here).

mod intertwiner;
mod mat;

pub use intertwiner::{
    find_intertwiner, find_intertwiner_with_tol, mapped_sector, modular_relations, Intertwiner,
    IntertwinerOutcome, ModularReport, RelationCheck,
};
pub use mat::{svd, CMatrix, Svd};

use crate::algebra::{AlgebraError, GroupWord};
use crate::tol;
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RepError {
    #[error("level K must be a positive integer")]
    InvalidLevel,
    #[error("sector components must be finite and in [0, 1), got ({alpha}, {beta})")]
    InvalidSector { alpha: f64, beta: f64 },
    #[error("image is not a scalar matrix (off-scalar residual {residual:.3e})")]
    NonScalar { residual: f64 },
    #[error(
        "no {generator} intertwiner on this sector; strict conjugation moves it to \
         sector ({alpha}, {beta})"
    )]
    MissingIntertwiner { generator: &'static str, alpha: f64, beta: f64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which square root of `q = e^{2πi/K}` the central generator maps to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZetaRoot {
    /// `ζ = e^{iπ/K}`, making the per-crossing braiding phase `ζ² = e^{2πi/K}`.
    #[default]
    Principal,
    /// `ζ = −e^{iπ/K}`.
    Alternate,
}

/// A positive integer level `K` together with the chosen value of ζ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Level {
    k: u32,
    root: ZetaRoot,
}

impl Level {
    pub fn new(k: u32) -> Result<Self, RepError> {
        Self::with_root(k, ZetaRoot::Principal)
    }

    pub fn with_root(k: u32, root: ZetaRoot) -> Result<Self, RepError> {
        if k == 0 {
            return Err(RepError::InvalidLevel);
        }
        Ok(Self { k, root })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn root(&self) -> ZetaRoot {
        self.root
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta_pow(1)
    }

    pub fn q(&self) -> Complex64 {
        Complex64::from_polar(1.0, TAU / self.k as f64)
    }

    /// `ζ^e`, with the exponent reduced modulo `2K` before evaluating.
    pub fn zeta_pow(&self, e: i128) -> Complex64 {
        let two_k = 2 * self.k as i128;
        let r = e.rem_euclid(two_k);
        let principal = Complex64::from_polar(1.0, PI * r as f64 / self.k as f64);
        match self.root {
            ZetaRoot::Principal => principal,
            ZetaRoot::Alternate => {
                if r % 2 == 0 {
                    principal
                } else {
                    -principal
                }
            }
        }
    }

    /// `q^e`, with the exponent reduced modulo `K`.
    pub fn q_pow(&self, e: i128) -> Complex64 {
        let r = e.rem_euclid(self.k as i128);
        Complex64::from_polar(1.0, TAU * r as f64 / self.k as f64)
    }
}

/// Superselection sector label `(α, β) ∈ [0,1)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    alpha: f64,
    beta: f64,
}

impl Sector {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, RepError> {
        let ok = |x: f64| x.is_finite() && (0.0..1.0).contains(&x);
        if !ok(alpha) || !ok(beta) {
            return Err(RepError::InvalidSector { alpha, beta });
        }
        Ok(Self { alpha, beta })
    }

    pub fn zero() -> Self {
        Self { alpha: 0.0, beta: 0.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// A concrete level-K representation: the images of the two generators.
#[derive(Debug, Clone)]
pub struct LevelRep {
    level: Level,
    sector: Sector,
    u: CMatrix,
    v: CMatrix,
}

/// Builds the clock/shift representation for the given level and sector.
pub fn build_rep(level: Level, sector: Sector) -> LevelRep {
    let mut rep = LevelRep { level, sector, u: CMatrix::identity(0), v: CMatrix::identity(0) };
    rep.u = rep.word_matrix(&GroupWord::symmetric(1, 0));
    rep.v = rep.word_matrix(&GroupWord::symmetric(0, 1));
    rep
}

impl LevelRep {
    pub fn level(&self) -> Level {
        self.level
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    /// Image of `Ŵ(1,0)`: the phased clock matrix.
    pub fn u(&self) -> &CMatrix {
        &self.u
    }

    /// Image of `Ŵ(0,1)`: the phased shift matrix.
    pub fn v(&self) -> &CMatrix {
        &self.v
    }

    /// Image of a general word: `ρ(ζ^c Ŵ(a,b)) = ζ^{c+ab} V^b U^a`.
    ///
    /// `V^b U^a` is a monomial matrix with one phase per column, written out
    /// directly: column `j` maps to row `j+b mod K` with phase
    /// `e^{2πi(αa+βb)/K} q^{ja}`.
    pub fn word_matrix(&self, w: &GroupWord) -> CMatrix {
        let k = self.level.k as usize;
        let ki = self.level.k as i128;
        let global = self.level.zeta_pow(w.c as i128 + w.a as i128 * w.b as i128)
            * Complex64::from_polar(
                1.0,
                TAU * (self.sector.alpha * w.a as f64 + self.sector.beta * w.b as f64)
                    / self.level.k as f64,
            );
        let mut m = CMatrix::zeros(k, k);
        for j in 0..k {
            let row = (j as i128 + w.b as i128).rem_euclid(ki) as usize;
            m[(row, j)] = global * self.level.q_pow(j as i128 * w.a as i128);
        }
        m
    }

    /// Max elementwise residual of the defining relation `UV − qVU`.
    pub fn uv_relation_residual(&self) -> f64 {
        let uv = self.u.mul(&self.v);
        let qvu = self.v.mul(&self.u).scale(self.level.q());
        uv.sub(&qvu).max_abs()
    }

    /// The scalars `(λ_x, λ_y)` with `ρ(Ŵ(K,0)) = λ_x·1`, `ρ(Ŵ(0,K)) = λ_y·1`,
    /// extracted numerically from the matrices.
    pub fn central_characters(&self) -> Result<(Complex64, Complex64), RepError> {
        let k = self.level.k as i64;
        let x = self.scalar_of(&self.word_matrix(&GroupWord::symmetric(k, 0)))?;
        let y = self.scalar_of(&self.word_matrix(&GroupWord::symmetric(0, k)))?;
        Ok((x, y))
    }

    fn scalar_of(&self, m: &CMatrix) -> Result<Complex64, RepError> {
        let k = self.level.k as usize;
        let lambda = m.trace() / k as f64;
        let residual = m.sub(&CMatrix::identity(k).scale(lambda)).max_abs();
        if residual >= tol::SCALAR_RESIDUAL {
            return Err(RepError::NonScalar { residual });
        }
        Ok(lambda)
    }

    /// Exact central character scalar of `Ŵ(Ka, Kb)`:
    /// `ζ^{K²ab} e^{2πi(αa + βb)}`.
    pub(crate) fn character_scalar(&self, a: i64, b: i64) -> Complex64 {
        let ki = self.level.k as i128;
        self.level.zeta_pow(ki * ki * a as i128 * b as i128)
            * Complex64::from_polar(
                1.0,
                TAU * (self.sector.alpha * a as f64 + self.sector.beta * b as f64),
            )
    }
}
