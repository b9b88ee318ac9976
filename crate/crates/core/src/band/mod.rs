//! Two-band Bloch maps `T² → S²` and their Chern number / mapping degree.
//!
//! A gapped two-band Hamiltonian `H(k) = d(k)·σ` normalizes to a map
//! `n = d/|d|` from the Brillouin torus to the sphere; its degree is the
//! band invariant. We sample `n` on a periodic `N×N` grid and sum the
//! signed solid angles of the spherical triangles spanned by neighbouring
//! samples. The sum divided by `4π` converges to the integer degree; the
//! distance to the nearest integer is returned as the residual and doubles
//! as a resolution check.
//!
//! The solid angle of a triangle `(u, v, w)` uses the arctangent form
//!
//! ```text
//! Ω = 2·atan2( u·(v×w), 1 + u·v + v·w + w·u ),
//! ```
//!
//! which is numerically stable except when two vertices are antipodal;
//! such triangles are rejected (tolerance [`crate::tol::ANTIPODAL_GUARD`]).
//! Summation is in fixed row-major order so residuals are reproducible
//! bit-for-bit per configuration. Orientation and sign conventions are
//! frozen in [`convention`].

pub mod convention;

use crate::tol;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BandError {
    #[error("grid resolution must be at least 2, got {0}")]
    BadResolution(usize),
    #[error("expected {expected} samples for an {n}×{n} grid, got {got}")]
    WrongSampleCount { n: usize, expected: usize, got: usize },
    #[error("sample at grid point ({jx}, {jy}) has norm {norm}, not a unit vector")]
    NotUnitNorm { jx: usize, jy: usize, norm: f64 },
    #[error("gap closes at grid point ({jx}, {jy}): |d| = {gap:.3e}")]
    GapClosing { jx: usize, jy: usize, gap: f64 },
    #[error("triangle at plaquette ({jx}, {jy}) has a near-antipodal vertex pair")]
    AntipodalTriangle { jx: usize, jy: usize },
    #[error("degree sum {raw} is {residual:.3} away from an integer; increase the resolution")]
    UnderResolved { raw: f64, residual: f64 },
    #[error("tabulated model has resolution {model} but {requested} was requested")]
    ResolutionMismatch { model: usize, requested: usize },
    #[error("line {line}: {message}")]
    Csv { line: usize, message: String },
    #[error("bad model spec `{spec}`: {message}")]
    ModelSpec { spec: String, message: String },
}

type Vec3 = [f64; 3];

fn dot(u: Vec3, v: Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross(u: Vec3, v: Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn norm(u: Vec3) -> f64 {
    dot(u, u).sqrt()
}

/// Periodic `N×N` grid of unit vectors sampling a map `T² → S²` at
/// `k = (2πjx/N, 2πjy/N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochMap {
    n: usize,
    samples: Vec<Vec3>,
    min_gap: Option<f64>,
}

impl BlochMap {
    /// Wraps pre-normalized samples (row-major in `jx`, then `jy`).
    pub fn from_unit_vectors(n: usize, samples: Vec<Vec3>) -> Result<Self, BandError> {
        if n < 2 {
            return Err(BandError::BadResolution(n));
        }
        if samples.len() != n * n {
            return Err(BandError::WrongSampleCount { n, expected: n * n, got: samples.len() });
        }
        for (idx, s) in samples.iter().enumerate() {
            let len = norm(*s);
            if (len - 1.0).abs() > tol::UNIT_NORM {
                return Err(BandError::NotUnitNorm { jx: idx / n, jy: idx % n, norm: len });
            }
        }
        Ok(Self { n, samples, min_gap: None })
    }

    pub fn resolution(&self) -> usize {
        self.n
    }

    /// Smallest `|d(k)|` seen before normalization; `None` for maps built
    /// from already normalized vectors.
    pub fn min_gap(&self) -> Option<f64> {
        self.min_gap
    }

    /// Periodic access: indices wrap modulo N.
    pub fn sample(&self, jx: i64, jy: i64) -> Vec3 {
        let n = self.n as i64;
        let jx = jx.rem_euclid(n) as usize;
        let jy = jy.rem_euclid(n) as usize;
        self.samples[jx * self.n + jy]
    }

    /// Pointwise antipodal composition `n ↦ −n`.
    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            samples: self.samples.iter().map(|s| [-s[0], -s[1], -s[2]]).collect(),
            min_gap: self.min_gap,
        }
    }

    /// Swaps the two grid axes, reversing the domain orientation.
    pub fn axes_swapped(&self) -> Self {
        let n = self.n;
        let mut samples = vec![[0.0; 3]; n * n];
        for jx in 0..n {
            for jy in 0..n {
                samples[jy * n + jx] = self.samples[jx * n + jy];
            }
        }
        Self { n, samples, min_gap: self.min_gap }
    }
}

/// A two-band model supplying raw d-vectors over the Brillouin torus.
#[derive(Debug, Clone, PartialEq)]
pub enum TwoBandModel {
    /// `d(k) = (sin kx, sin ky, m + cos kx + cos ky)`.
    Qwz { m: f64 },
    /// Constant d-vector; useful as the degenerate degree-zero reference.
    Constant { d: Vec3 },
    /// Raw d-vectors tabulated on an `n×n` grid (row-major in `jx`).
    Tabulated { n: usize, d: Vec<Vec3> },
}

impl TwoBandModel {
    pub fn qwz(m: f64) -> Self {
        TwoBandModel::Qwz { m }
    }

    /// Parses a builtin model spec: `qwz:m=<float>` or
    /// `constant:<dx>,<dy>,<dz>`.
    pub fn parse_spec(spec: &str) -> Result<Self, BandError> {
        let bad = |message: &str| BandError::ModelSpec {
            spec: spec.to_string(),
            message: message.to_string(),
        };
        let (name, args) = spec.split_once(':').ok_or_else(|| bad("expected `name:args`"))?;
        match name {
            "qwz" => {
                let m = args
                    .strip_prefix("m=")
                    .and_then(|v| v.parse::<f64>().ok())
                    .filter(|m| m.is_finite())
                    .ok_or_else(|| bad("expected `qwz:m=<float>`"))?;
                Ok(TwoBandModel::Qwz { m })
            }
            "constant" => {
                let parts: Vec<f64> = args
                    .split(',')
                    .map(|p| p.trim().parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("expected `constant:<dx>,<dy>,<dz>`"))?;
                let [dx, dy, dz] = parts[..] else {
                    return Err(bad("expected exactly three components"));
                };
                Ok(TwoBandModel::Constant { d: [dx, dy, dz] })
            }
            other => Err(bad(&format!("unknown model `{other}`"))),
        }
    }

    /// Parses the tabulated CSV format: header `jx,jy,dx,dy,dz`, then one
    /// complete row per grid point of an `N×N` grid.
    pub fn from_csv(text: &str) -> Result<Self, BandError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or(BandError::Csv {
            line: 1,
            message: "empty file".into(),
        })?;
        let normalized: Vec<&str> = header.split(',').map(str::trim).collect();
        if normalized != ["jx", "jy", "dx", "dy", "dz"] {
            return Err(BandError::Csv {
                line: hline + 1,
                message: "header must be `jx,jy,dx,dy,dz`".into(),
            });
        }
        let mut cells: Vec<(usize, usize, Vec3)> = Vec::new();
        let mut max_index = 0usize;
        for (idx, raw) in lines {
            let line = idx + 1;
            let fields: Vec<&str> = raw.split(',').map(str::trim).collect();
            let [jx, jy, dx, dy, dz] = fields[..] else {
                return Err(BandError::Csv { line, message: "expected 5 fields".into() });
            };
            let index = |t: &str| {
                t.parse::<usize>().map_err(|_| BandError::Csv {
                    line,
                    message: format!("bad grid index `{t}`"),
                })
            };
            let value = |t: &str| {
                t.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or(BandError::Csv {
                    line,
                    message: format!("bad component `{t}`"),
                })
            };
            let (jx, jy) = (index(jx)?, index(jy)?);
            max_index = max_index.max(jx).max(jy);
            cells.push((jx, jy, [value(dx)?, value(dy)?, value(dz)?]));
        }
        let n = max_index + 1;
        if cells.len() != n * n {
            return Err(BandError::Csv {
                line: 1,
                message: format!("grid incomplete: {} rows for an {n}×{n} grid", cells.len()),
            });
        }
        let mut d = vec![None; n * n];
        for (jx, jy, v) in cells {
            let slot = &mut d[jx * n + jy];
            if slot.is_some() {
                return Err(BandError::Csv {
                    line: 1,
                    message: format!("duplicate grid point ({jx}, {jy})"),
                });
            }
            *slot = Some(v);
        }
        if let Some(missing) = d.iter().position(Option::is_none) {
            return Err(BandError::Csv {
                line: 1,
                message: format!("missing grid point ({}, {})", missing / n, missing % n),
            });
        }
        Ok(TwoBandModel::Tabulated { n, d: d.into_iter().map(Option::unwrap).collect() })
    }

    fn raw_vector(&self, n: usize, jx: usize, jy: usize) -> Vec3 {
        match self {
            TwoBandModel::Qwz { m } => {
                let kx = std::f64::consts::TAU * jx as f64 / n as f64;
                let ky = std::f64::consts::TAU * jy as f64 / n as f64;
                [kx.sin(), ky.sin(), m + kx.cos() + ky.cos()]
            }
            TwoBandModel::Constant { d } => *d,
            TwoBandModel::Tabulated { n: grid, d } => d[jx * grid + jy],
        }
    }
}

/// Samples and normalizes a model on an `N×N` grid, recording the smallest
/// gap. Fails if the gap closes anywhere on the grid.
pub fn sample_model(model: &TwoBandModel, n: usize) -> Result<BlochMap, BandError> {
    sample_model_with_gap(model, n, tol::GAP_CLOSING)
}

/// Same with a caller-chosen gap threshold.
pub fn sample_model_with_gap(
    model: &TwoBandModel,
    n: usize,
    gap_threshold: f64,
) -> Result<BlochMap, BandError> {
    if n < 2 {
        return Err(BandError::BadResolution(n));
    }
    if let TwoBandModel::Tabulated { n: grid, .. } = model {
        if *grid != n {
            return Err(BandError::ResolutionMismatch { model: *grid, requested: n });
        }
    }
    let mut samples = Vec::with_capacity(n * n);
    let mut min_gap = f64::INFINITY;
    for jx in 0..n {
        for jy in 0..n {
            let d = model.raw_vector(n, jx, jy);
            let gap = norm(d);
            if gap < gap_threshold {
                return Err(BandError::GapClosing { jx, jy, gap });
            }
            min_gap = min_gap.min(gap);
            samples.push([d[0] / gap, d[1] / gap, d[2] / gap]);
        }
    }
    Ok(BlochMap { n, samples, min_gap: Some(min_gap) })
}

fn solid_angle(u: Vec3, v: Vec3, w: Vec3) -> Option<f64> {
    for (x, y) in [(u, v), (v, w), (w, u)] {
        if 1.0 + dot(x, y) < tol::ANTIPODAL_GUARD {
            return None;
        }
    }
    let numerator = dot(u, cross(v, w));
    let denominator = 1.0 + dot(u, v) + dot(v, w) + dot(w, u);
    Some(2.0 * numerator.atan2(denominator))
}

/// Signed solid angle swept by the whole grid, in fixed row-major order.
pub fn raw_solid_angle_sum(map: &BlochMap) -> Result<f64, BandError> {
    let n = map.resolution() as i64;
    let mut sum = 0.0;
    for jx in 0..n {
        for jy in 0..n {
            let a = map.sample(jx, jy);
            let b = map.sample(jx + 1, jy);
            let c = map.sample(jx + 1, jy + 1);
            let d = map.sample(jx, jy + 1);
            let lower = solid_angle(a, b, c);
            let upper = solid_angle(a, c, d);
            match (lower, upper) {
                (Some(x), Some(y)) => sum += x + y,
                _ => {
                    return Err(BandError::AntipodalTriangle {
                        jx: jx as usize,
                        jy: jy as usize,
                    })
                }
            }
        }
    }
    Ok(sum)
}

/// Degree outcome: the rounded integer, the raw `sum/4π`, and the distance
/// between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeResult {
    pub degree: i64,
    pub raw: f64,
    pub residual: f64,
}

/// Mapping degree by solid-angle summation, rejecting raw values further
/// than [`tol::DEGREE_RESIDUAL_MAX`] from an integer.
pub fn hopf_degree(map: &BlochMap) -> Result<DegreeResult, BandError> {
    hopf_degree_with_max_residual(map, tol::DEGREE_RESIDUAL_MAX)
}

/// Same with a caller-chosen residual ceiling.
pub fn hopf_degree_with_max_residual(
    map: &BlochMap,
    max_residual: f64,
) -> Result<DegreeResult, BandError> {
    let raw = raw_solid_angle_sum(map)? / (4.0 * std::f64::consts::PI);
    let degree = raw.round();
    let residual = (raw - degree).abs();
    if residual >= max_residual {
        return Err(BandError::UnderResolved { raw, residual });
    }
    Ok(DegreeResult { degree: degree as i64, raw, residual })
}

/// The Chern class of the valence band is classified by the same integer:
/// a named alias of [`hopf_degree`].
pub fn chern_number(map: &BlochMap) -> Result<DegreeResult, BandError> {
    hopf_degree(map)
}
