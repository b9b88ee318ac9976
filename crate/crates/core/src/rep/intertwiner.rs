//! Modular intertwiners: unitary matrices implementing the mapping-class
//! substitution `Ŵ(v) ↦ Ŵ(v·g)` inside a level-K representation.
//!
//! For `g ∈ SL(2,ℤ)` we look for a unitary `P` and unit phases `μ(v)` with
//!
//! ```text
//! P · ρ(Ŵ(v)) · P⁻¹ = μ(v) · ρ(Ŵ(v·g))      for v ∈ {(1,0), (0,1)}.
//! ```
//!
//! The admissible phases are powers of the central element's image, so
//! `μ(v)^K` can only be `ζ^K·j`-values; comparing with the central
//! characters of both sides fixes each `μ(v)` to `1` or `ζ` up to an inner
//! twist. With the phases fixed the condition is linear in the entries of
//! `P`: we stack the two constraints `X·ρ(Ŵ(v)) − μ(v)·ρ(Ŵ(v·g))·X = 0`
//! into a `2K² × K²` system and extract its null space by singular value
//! decomposition. A null vector exists precisely when `g` fixes the sector
//! (up to the central phase); it is then unique up to scale by Schur's
//! lemma and proportional to a unitary matrix.
//!
//! No phase is normalized away silently: the returned data carries the
//! `μ(v)` actually used, the smallest singular value, and the global phase
//! of `P` is pinned only by a documented convention (largest entry made
//! real positive). Closed-form discrete-Fourier and Gauss-sum matrices are
//! used in tests as oracles, never in the solver itself.

use super::mat::{svd, CMatrix};
use super::{LevelRep, RepError, Sector};
use crate::algebra::{GroupWord, SL2Z};
use crate::tol;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// A solved intertwiner for one `g`.
#[derive(Debug, Clone)]
pub struct Intertwiner {
    /// The unitary `P`, global phase fixed by convention.
    pub matrix: CMatrix,
    /// Phases `μ(v)` for `v = (1,0)` and `v = (0,1)`; each is `1` or the
    /// representation's ζ.
    pub mu: [Complex64; 2],
    /// Smallest singular value of the constraint system.
    pub sigma_min: f64,
    /// Max elementwise residual of `P·ρ(Ŵ(v)) − μ(v)·ρ(Ŵ(v·g))·P` over both
    /// generators.
    pub residual: f64,
}

/// Result of an intertwiner search.
#[derive(Debug, Clone)]
pub enum IntertwinerOutcome {
    Found(Intertwiner),
    /// `g` does not fix this sector: strict conjugation carries it to
    /// `target`. `sigma_min` is the (large) smallest singular value that
    /// ruled the intertwiner out.
    SectorMoved { target: Sector, sigma_min: f64 },
}

impl IntertwinerOutcome {
    pub fn found(&self) -> Option<&Intertwiner> {
        match self {
            IntertwinerOutcome::Found(i) => Some(i),
            IntertwinerOutcome::SectorMoved { .. } => None,
        }
    }
}

/// The sector that `g` carries this representation's sector to under strict
/// (phase-free) conjugation, read off from the central characters of the
/// substituted generators.
pub fn mapped_sector(rep: &LevelRep, g: &SL2Z) -> Sector {
    let frac = |z: Complex64| (z.arg() / TAU).rem_euclid(1.0);
    let alpha = frac(rep.character_scalar(g.p, g.q));
    let beta = frac(rep.character_scalar(g.r, g.s));
    Sector::new(alpha, beta).expect("argument fractions lie in [0,1)")
}

/// Searches for the intertwiner of `g` on `rep`. Non-unimodular matrices
/// cannot be represented by [`SL2Z`], so `g` is always a valid substitution.
pub fn find_intertwiner(rep: &LevelRep, g: &SL2Z) -> IntertwinerOutcome {
    find_intertwiner_with_tol(rep, g, tol::POST_SVD)
}

/// Same with a caller-chosen cutoff on the smallest singular value.
pub fn find_intertwiner_with_tol(rep: &LevelRep, g: &SL2Z, svd_tol: f64) -> IntertwinerOutcome {
    let k = rep.level().k() as usize;
    let images = [(g.p, g.q), (g.r, g.s)];
    let sources = [(1i64, 0i64), (0i64, 1i64)];

    let mut mu = [Complex64::new(1.0, 0.0); 2];
    let mut b = Vec::with_capacity(2);
    let mut a = Vec::with_capacity(2);
    for i in 0..2 {
        b.push(rep.word_matrix(&GroupWord::symmetric(sources[i].0, sources[i].1)));
        a.push(rep.word_matrix(&GroupWord::symmetric(images[i].0, images[i].1)));
        let ratio = rep.character_scalar(sources[i].0, sources[i].1)
            / rep.character_scalar(images[i].0, images[i].1);
        // μ^K for the two candidate phases; the SVD below is the arbiter of
        // whether the chosen candidate actually works.
        let zeta = rep.level().zeta();
        let zeta_k = rep.level().zeta_pow(rep.level().k() as i128);
        let one = Complex64::new(1.0, 0.0);
        mu[i] = if (ratio - one).norm() <= (ratio - zeta_k).norm() { one } else { zeta };
    }

    // Constraint block per generator: X·B − μ·A·X = 0, X vectorized row-major.
    let mut m = CMatrix::zeros(2 * k * k, k * k);
    for block in 0..2 {
        for i in 0..k {
            for j in 0..k {
                let row = block * k * k + i * k + j;
                for l in 0..k {
                    let bc = b[block][(l, j)];
                    if bc != Complex64::new(0.0, 0.0) {
                        m[(row, i * k + l)] += bc;
                    }
                    let ac = a[block][(i, l)];
                    if ac != Complex64::new(0.0, 0.0) {
                        m[(row, l * k + j)] -= mu[block] * ac;
                    }
                }
            }
        }
    }

    let decomposition = svd(&m);
    let sigma_min = *decomposition.singular_values.last().unwrap();
    if sigma_min > svd_tol {
        return IntertwinerOutcome::SectorMoved { target: mapped_sector(rep, g), sigma_min };
    }

    // Null vector → K×K matrix, scaled to unitary (it is proportional to one
    // by Schur's lemma), global phase fixed deterministically.
    let null_col = decomposition.v.cols() - 1;
    let mut p = CMatrix::from_fn(k, k, |i, j| decomposition.v[(i * k + j, null_col)]);
    p = p.scale(Complex64::new((k as f64).sqrt() / p.frobenius_norm(), 0.0));
    let max = p.entries().map(|(_, z)| z.norm()).fold(0.0, f64::max);
    let anchor = p
        .entries()
        .find(|(_, z)| z.norm() >= max - 1e-8)
        .map(|(_, z)| z)
        .expect("nonzero matrix has a maximal entry");
    p = p.scale(anchor.conj() / anchor.norm());

    let residual = (0..2)
        .map(|i| p.mul(&b[i]).sub(&a[i].mul(&p).scale(mu[i])).max_abs())
        .fold(0.0, f64::max);

    IntertwinerOutcome::Found(Intertwiner { matrix: p, mu, sigma_min, residual })
}

/// One projective relation check: `phase` is the best global alignment,
/// `residual` the max elementwise mismatch after applying it.
#[derive(Debug, Clone, Copy)]
pub struct RelationCheck {
    pub phase: Complex64,
    pub residual: f64,
}

fn align(lhs: &CMatrix, rhs: &CMatrix) -> RelationCheck {
    let k = lhs.rows() as f64;
    let phase = rhs.dagger().mul(lhs).trace() / k;
    RelationCheck { phase, residual: lhs.sub(&rhs.scale(phase)).max_abs() }
}

/// Modular relation residuals for a sector carrying both intertwiners.
#[derive(Debug, Clone)]
pub struct ModularReport {
    pub s: Intertwiner,
    pub t: Intertwiner,
    /// `P_S⁴ ∝ 1` after phase alignment.
    pub s_fourth: RelationCheck,
    /// `(P_S·P_T)³ ∝ P_S²` after phase alignment.
    pub st_cubed: RelationCheck,
}

/// Solves both generator intertwiners and checks the modular relations.
/// Fails with [`RepError::MissingIntertwiner`] when `g = S` or `g = T`
/// moves the sector.
pub fn modular_relations(rep: &LevelRep) -> Result<ModularReport, RepError> {
    let missing = |generator: &'static str, target: Sector| RepError::MissingIntertwiner {
        generator,
        alpha: target.alpha(),
        beta: target.beta(),
    };
    let s = match find_intertwiner(rep, &SL2Z::S) {
        IntertwinerOutcome::Found(i) => i,
        IntertwinerOutcome::SectorMoved { target, .. } => return Err(missing("S", target)),
    };
    let t = match find_intertwiner(rep, &SL2Z::T) {
        IntertwinerOutcome::Found(i) => i,
        IntertwinerOutcome::SectorMoved { target, .. } => return Err(missing("T", target)),
    };

    let k = rep.level().k() as usize;
    let ps2 = s.matrix.mul(&s.matrix);
    let ps4 = ps2.mul(&ps2);
    let s_fourth = align(&ps4, &CMatrix::identity(k));
    let pst = s.matrix.mul(&t.matrix);
    let pst3 = pst.mul(&pst).mul(&pst);
    let st_cubed = align(&pst3, &ps2);

    Ok(ModularReport { s, t, s_fourth, st_cubed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_rep, Level};

    fn rep_at(k: u32) -> LevelRep {
        build_rep(Level::new(k).unwrap(), Sector::zero())
    }

    /// Normalized discrete Fourier matrix `F_{jk} = q^{jk}/√K`.
    fn dft(rep: &LevelRep) -> CMatrix {
        let k = rep.level().k();
        let norm = 1.0 / (k as f64).sqrt();
        CMatrix::from_fn(k as usize, k as usize, |i, j| {
            rep.level().q_pow(i as i128 * j as i128) * norm
        })
    }

    #[test]
    fn identity_intertwiner_is_identity() {
        let rep = rep_at(3);
        let got = find_intertwiner(&rep, &SL2Z::IDENTITY);
        let i = got.found().expect("identity always intertwines");
        assert!(i.residual < 1e-12);
        assert!(i.matrix.sub(&CMatrix::identity(3)).max_abs() < 1e-9);
        assert!((i.mu[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn s_intertwiner_matches_fourier_at_k2() {
        let rep = rep_at(2);
        let i = find_intertwiner(&rep, &SL2Z::S).found().expect("S fixes (0,0)").clone();
        assert!(i.residual < 1e-9);
        assert!(i.sigma_min < 1e-12);
        assert!(i.matrix.unitarity_residual() < 1e-9);
        // Same projective class as the DFT.
        let aligned = align(&i.matrix, &dft(&rep));
        assert!(aligned.residual < 1e-9, "residual {}", aligned.residual);
        assert!((aligned.phase.norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn s_intertwiner_found_for_a_range_of_levels() {
        for k in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let rep = rep_at(k);
            let i = find_intertwiner(&rep, &SL2Z::S).found().unwrap_or_else(|| {
                panic!("S intertwiner missing at K={k}")
            }).clone();
            assert!(i.residual < 1e-9, "K={k} residual {}", i.residual);
            assert!(i.matrix.unitarity_residual() < 1e-9, "K={k}");
        }
    }

    #[test]
    fn t_intertwiner_phase_tracks_level_parity() {
        // Even K: strict intertwiner, μ = (1,1). Odd K: the T-image picks up
        // the central phase, μ = (ζ, 1).
        for k in [2u32, 4, 6] {
            let rep = rep_at(k);
            let i = find_intertwiner(&rep, &SL2Z::T).found().expect("even K").clone();
            assert!((i.mu[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12, "K={k}");
            assert!(i.residual < 1e-9);
        }
        for k in [1u32, 3, 5] {
            let rep = rep_at(k);
            let i = find_intertwiner(&rep, &SL2Z::T).found().expect("odd K").clone();
            assert!((i.mu[0] - rep.level().zeta()).norm() < 1e-12, "K={k}");
            assert!(i.residual < 1e-9);
            // The strict (phase-free) image sits on the shifted sector.
            let target = mapped_sector(&rep, &SL2Z::T);
            assert!((target.alpha() - 0.5).abs() < 1e-9, "K={k}");
            assert!(target.beta().abs() < 1e-9);
        }
    }

    #[test]
    fn generic_sector_is_moved_by_s() {
        let rep = build_rep(Level::new(4).unwrap(), Sector::new(0.3, 0.0).unwrap());
        match find_intertwiner(&rep, &SL2Z::S) {
            IntertwinerOutcome::SectorMoved { target, sigma_min } => {
                assert!(sigma_min > 1e-3, "sigma_min {sigma_min}");
                assert!((target.alpha() - 0.0).abs() < 1e-9);
                assert!((target.beta() - 0.3).abs() < 1e-9);
            }
            IntertwinerOutcome::Found(_) => panic!("S should move sector (0.3, 0)"),
        }
    }

    #[test]
    fn modular_relations_hold_on_even_levels() {
        for k in [2u32, 4, 6, 8] {
            let report = modular_relations(&rep_at(k)).expect("both intertwiners exist");
            assert!(report.s_fourth.residual < 1e-9, "K={k} S^4");
            assert!(report.st_cubed.residual < 1e-9, "K={k} (ST)^3");
            assert!((report.s_fourth.phase.norm() - 1.0).abs() < 1e-9);
            assert!((report.st_cubed.phase.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn modular_relations_trivial_at_k1() {
        let report = modular_relations(&rep_at(1)).expect("scalars always intertwine");
        assert!(report.s_fourth.residual < 1e-12);
        assert!(report.st_cubed.residual < 1e-12);
    }

    #[test]
    fn missing_intertwiner_is_reported() {
        let rep = build_rep(Level::new(3).unwrap(), Sector::new(0.1, 0.2).unwrap());
        match modular_relations(&rep) {
            Err(RepError::MissingIntertwiner { generator, .. }) => {
                assert!(generator == "S" || generator == "T");
            }
            other => panic!("expected MissingIntertwiner, got {other:?}"),
        }
    }

    #[test]
    fn conjugation_matches_substitution_action() {
        // P ρ(w) P⁻¹ = μ₁^a μ₂^b ρ(w·g) on general words.
        let rep = rep_at(5);
        for g in [SL2Z::S, SL2Z::T] {
            let i = find_intertwiner(&rep, &g).found().expect("K=5 sector (0,0)").clone();
            for w in [
                GroupWord::new(0, 1, 1),
                GroupWord::new(2, -1, 3),
                GroupWord::new(-1, 4, -2),
            ] {
                let lhs = i.matrix.mul(&rep.word_matrix(&w)).mul(&i.matrix.dagger());
                let phase = i.mu[0].powi(w.a as i32) * i.mu[1].powi(w.b as i32);
                let rhs = rep.word_matrix(&g.act_word(&w).unwrap()).scale(phase);
                assert!(lhs.sub(&rhs).max_abs() < 1e-9, "g={g} w={w:?}");
            }
        }
    }
}
