//! Topological observables of abelian anyons on the torus.
//!
//! The crate computes, in one place, the small zoo of structures that govern
//! abelian anyon statistics:
//!
//! - [`link`] — framed link diagrams, their framing/linking invariants, the
//!   total crossing number `#L`, and Wilson-loop expectation values
//!   `exp(2πi·#L/K)`.
//! - [`algebra`] — exact arithmetic in the integer quantum torus
//!   `ℂ[W(1,0), W(0,1), ζ] / (W(1,0)W(0,1) = ζ² W(0,1)W(1,0))`, its
//!   commutative image at `ζ → 1`, and the `SL(2,ℤ)` substitution action.
//! - [`rep`] — level-`K` clock/shift representations of that algebra,
//!   superselection characters, and numerically solved modular `S`/`T`
//!   intertwiners with their relation residuals.
//! - [`braid`] — Artin braid words, their one-dimensional (abelian) phase
//!   representations, and trace closure into framed links.
//! - [`band`] — two-band Bloch maps `T² → S²` sampled on a grid and their
//!   Chern number / mapping degree by signed solid-angle summation.
//!
//! All functions are pure; values are immutable and safe to share across
//! threads. Floating-point tolerances are centralized in [`tol`].

pub mod algebra;
pub mod band;
pub mod braid;
pub mod link;
pub mod rep;
pub mod tol;

pub use num_complex::Complex64;
