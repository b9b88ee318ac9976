//! Centralized numerical tolerances.
//!
//! Two regimes cover everything in this crate: identities built directly from
//! exact roots of unity (only a handful of rounding steps, so close to machine
//! precision), and anything downstream of an iterative/least-squares step
//! (null-space extraction), where accumulated rounding is larger.

/// Matrix identities assembled from exact roots of unity, e.g. `UV = qVU`.
pub const EXACT_ROOT: f64 = 1e-12;

/// Residuals after a least-squares / SVD step (intertwiners, modular
/// relations) and unitarity of matrices recovered from a null vector.
pub const POST_SVD: f64 = 1e-9;

/// Residual below which a matrix counts as a scalar multiple of the identity
/// (central character extraction).
pub const SCALAR_RESIDUAL: f64 = 1e-9;

/// Equality of floating-point algebra coefficients (absolute, per term).
pub const COEFF_EQ: f64 = 1e-12;

/// Unit-norm requirement on stored Bloch sphere samples.
pub const UNIT_NORM: f64 = 1e-12;

/// Gap threshold: a Bloch vector with `|d|` below this cannot be normalized
/// onto the sphere and the map is rejected as gapless.
pub const GAP_CLOSING: f64 = 1e-8;

/// Solid-angle pole guard: a triangle containing a vertex pair with
/// `1 + u·v` below this sits on the antipodal singularity of the
/// arctangent formula and is rejected.
pub const ANTIPODAL_GUARD: f64 = 1e-12;

/// Largest acceptable distance of the raw degree sum from an integer.
/// Above this the grid is considered under-resolved.
pub const DEGREE_RESIDUAL_MAX: f64 = 0.1;

const _: () = {
    assert!(EXACT_ROOT < POST_SVD);
    assert!(POST_SVD < GAP_CLOSING);
    assert!(GAP_CLOSING < DEGREE_RESIDUAL_MAX);
};
