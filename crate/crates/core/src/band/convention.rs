//! Frozen orientation and sign conventions for the degree computation.
//!
//! The mapping degree of a two-band model has no canonical sign until the
//! domain orientation is fixed. This crate orients the Brillouin torus by
//! `kx` first, `ky` second, and splits every grid plaquette into the
//! triangles `(j,l) → (j+1,l) → (j+1,l+1)` and `(j,l) → (j+1,l+1) → (j,l+1)`.
//! With that choice the signed solid-angle sum approximates
//! `∫ n·(∂_{kx} n × ∂_{ky} n) d²k`, and the reference values below were
//! pinned once against a 512×512 valence-band Berry-phase computation and a
//! preimage count at the south pole. They are constants of the artifact,
//! not tunables.

/// Degree of the map for the builtin model `qwz` at `m = +1` (any grid that
/// resolves it). `m = −1` gives the negative, `|m| > 2` gives zero.
pub const QWZ_DEGREE_AT_M_PLUS_1: i64 = -1;

/// The valence-band Chern number computed from plaquette Berry phases
/// equals this sign times the mapping degree of the normalized d-vector.
pub const VALENCE_CHERN_SIGN: i64 = -1;
