//! Report builders for each subcommand.

use crate::json::Json;
use crate::CliError;
use anyon_core::algebra::{parse_element, AlgebraElement, SL2Z};
use anyon_core::band::{
    hopf_degree_with_max_residual, sample_model_with_gap, BlochMap, TwoBandModel,
};
use anyon_core::braid::BraidWord;
use anyon_core::link::{
    detect_format, parse_gauss_code, parse_link_text, LinkFormat, LinkInvariants,
};
use anyon_core::rep::{
    build_rep, find_intertwiner_with_tol, CMatrix, IntertwinerOutcome, Level, LevelRep,
    ModularReport, RelationCheck, Sector, ZetaRoot,
};
use anyon_core::tol;
use std::path::Path;

fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn invariants_json(inv: &LinkInvariants) -> Vec<(&'static str, Json)> {
    vec![
        ("framings", Json::ints(inv.framings.iter().copied())),
        (
            "linking",
            Json::Array(inv.linking.iter().map(|row| Json::ints(row.iter().copied())).collect()),
        ),
        ("total_crossing_number", Json::Int(inv.total_crossing_number)),
    ]
}

pub fn cmd_link(path: &Path, level: Option<f64>) -> Result<Json, CliError> {
    let text = read_input(path)?;
    let format = detect_format(&text)?;
    let diagram = match format {
        LinkFormat::CrossingList => parse_link_text(&text)?,
        LinkFormat::GaussCode => parse_gauss_code(&text)?,
    };
    let inv = diagram.invariants()?;
    let mut fields = vec![
        (
            "format",
            Json::Str(
                match format {
                    LinkFormat::CrossingList => "crossing-list",
                    LinkFormat::GaussCode => "gauss-code",
                }
                .into(),
            ),
        ),
        ("num_components", Json::Int(diagram.num_components() as i64)),
    ];
    fields.extend(invariants_json(&inv));
    if let Some(k) = level {
        fields.push((
            "expectation",
            Json::Object(vec![
                ("K", Json::Float(k)),
                ("value", Json::complex(inv.expectation(k)?)),
            ]),
        ));
    }
    Ok(Json::Object(fields))
}

fn element_json(result: &AlgebraElement) -> Result<Vec<(&'static str, Json)>, CliError> {
    let terms = result
        .terms()
        .map(|(w, c)| {
            Json::Object(vec![
                ("a", Json::Int(w.a)),
                ("b", Json::Int(w.b)),
                ("zeta_power", Json::Int(w.c)),
                ("coeff", Json::complex(c.to_complex())),
            ])
        })
        .collect();
    Ok(vec![
        ("result", Json::Str(result.to_string())),
        ("result_w_basis", Json::Str(result.w_basis_string()?)),
        ("terms", Json::Array(terms)),
    ])
}

fn parse_modular(text: &str) -> Result<SL2Z, CliError> {
    match text {
        "S" => return Ok(SL2Z::S),
        "T" => return Ok(SL2Z::T),
        _ => {}
    }
    let inner = text
        .trim()
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| CliError::Usage(format!("cannot read matrix from `{text}`")))?;
    let entries: Vec<i64> = inner
        .split("],[")
        .flat_map(|row| row.split(','))
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("cannot read matrix from `{text}`")))?;
    let [p, q, r, s] = entries[..] else {
        return Err(CliError::Usage(format!("expected 4 entries in `{text}`")));
    };
    Ok(SL2Z::new(p, q, r, s)?)
}

pub fn cmd_algebra_mul(x: &str, y: &str) -> Result<Json, CliError> {
    let result = parse_element(x)?.mul(&parse_element(y)?)?;
    let mut fields = vec![("operation", Json::Str("mul".into()))];
    fields.extend(element_json(&result)?);
    Ok(Json::Object(fields))
}

pub fn cmd_algebra_stabilize(x: &str) -> Result<Json, CliError> {
    let result = parse_element(x)?.stabilize();
    let mut fields = vec![("operation", Json::Str("stabilize".into()))];
    fields.extend(element_json(&result)?);
    Ok(Json::Object(fields))
}

pub fn cmd_algebra_act(g: &str, x: &str) -> Result<Json, CliError> {
    let matrix = parse_modular(g)?;
    let result = matrix.act(&parse_element(x)?)?;
    let mut fields = vec![
        ("operation", Json::Str("act".into())),
        ("g", Json::Str(matrix.to_string())),
    ];
    fields.extend(element_json(&result)?);
    Ok(Json::Object(fields))
}

fn matrix_json(m: &CMatrix) -> Json {
    Json::Array(
        (0..m.rows())
            .map(|i| Json::Array((0..m.cols()).map(|j| Json::complex(m[(i, j)])).collect()))
            .collect(),
    )
}

fn intertwiner_json(rep: &LevelRep, g: &SL2Z, svd_tol: f64) -> (Json, bool) {
    match find_intertwiner_with_tol(rep, g, svd_tol) {
        IntertwinerOutcome::Found(i) => (
            Json::Object(vec![
                ("found", Json::Bool(true)),
                ("sigma_min", Json::Float(i.sigma_min)),
                ("residual", Json::Float(i.residual)),
                ("mu", Json::Array(vec![Json::complex(i.mu[0]), Json::complex(i.mu[1])])),
                ("matrix", matrix_json(&i.matrix)),
            ]),
            true,
        ),
        IntertwinerOutcome::SectorMoved { target, sigma_min } => (
            Json::Object(vec![
                ("found", Json::Bool(false)),
                ("sigma_min", Json::Float(sigma_min)),
                ("mapped_sector", Json::floats([target.alpha(), target.beta()])),
            ]),
            false,
        ),
    }
}

fn relation_json(check: &RelationCheck) -> Json {
    Json::Object(vec![
        ("phase", Json::complex(check.phase)),
        ("residual", Json::Float(check.residual)),
    ])
}

fn relations_json(report: &ModularReport) -> Json {
    Json::Object(vec![
        ("s_fourth", relation_json(&report.s_fourth)),
        ("st_cubed", relation_json(&report.st_cubed)),
    ])
}

pub fn cmd_rep(
    k: u32,
    sector: (f64, f64),
    alt_zeta: bool,
    svd_tol: Option<f64>,
) -> Result<Json, CliError> {
    let root = if alt_zeta { ZetaRoot::Alternate } else { ZetaRoot::Principal };
    let level = Level::with_root(k, root)?;
    let sector = Sector::new(sector.0, sector.1)?;
    let svd_tol = svd_tol.unwrap_or(tol::POST_SVD);
    let rep = build_rep(level, sector);
    let (lambda_x, lambda_y) = rep.central_characters()?;
    let (s_json, s_found) = intertwiner_json(&rep, &SL2Z::S, svd_tol);
    let (t_json, t_found) = intertwiner_json(&rep, &SL2Z::T, svd_tol);
    let relations = if s_found && t_found {
        relations_json(&anyon_core::rep::modular_relations(&rep)?)
    } else {
        Json::Null
    };
    Ok(Json::Object(vec![
        ("K", Json::Int(k as i64)),
        ("sector", Json::floats([sector.alpha(), sector.beta()])),
        ("zeta", Json::complex(level.zeta())),
        ("q", Json::complex(level.q())),
        (
            "generators",
            Json::Object(vec![("U", matrix_json(rep.u())), ("V", matrix_json(rep.v()))]),
        ),
        ("uv_relation_residual", Json::Float(rep.uv_relation_residual())),
        (
            "characters",
            Json::Object(vec![
                ("lambda_x", Json::complex(lambda_x)),
                ("lambda_y", Json::complex(lambda_y)),
            ]),
        ),
        (
            "intertwiners",
            Json::Object(vec![("S", s_json), ("T", t_json)]),
        ),
        ("modular_relations", relations),
    ]))
}

pub fn cmd_braid(word: &str, level: Option<f64>) -> Result<Json, CliError> {
    let braid = BraidWord::parse(word)?;
    let closure = braid.closure();
    let closure_inv = closure.invariants()?;
    let mut fields = vec![
        ("strands", Json::Int(braid.strands() as i64)),
        ("letters", Json::ints(braid.letters().iter().map(|&k| k as i64))),
        ("exponent_sum", Json::Int(braid.exponent_sum())),
        ("permutation", Json::ints(braid.permutation().iter().map(|&p| p as i64))),
    ];
    if let Some(k) = level {
        fields.push(("phase", Json::complex(braid.abelian_phase(k)?)));
    }
    let mut closure_fields =
        vec![("num_components", Json::Int(closure.num_components() as i64))];
    closure_fields.extend(invariants_json(&closure_inv));
    fields.push(("closure", Json::Object(closure_fields)));
    if let Some(k) = level {
        fields.push(("closure_expectation", Json::complex(closure_inv.expectation(k)?)));
    }
    Ok(Json::Object(fields))
}

pub fn cmd_chern(
    model_arg: &str,
    resolution: usize,
    max_residual: Option<f64>,
    gap_threshold: Option<f64>,
) -> Result<Json, CliError> {
    // A spec string contains `:`; anything else is a CSV path.
    let (model, resolution) = if model_arg.contains(':') {
        (TwoBandModel::parse_spec(model_arg)?, resolution)
    } else {
        let model = TwoBandModel::from_csv(&read_input(Path::new(model_arg))?)?;
        let n = match &model {
            TwoBandModel::Tabulated { n, .. } => *n,
            _ => unreachable!("CSV parses to a tabulated model"),
        };
        (model, n)
    };
    let map: BlochMap =
        sample_model_with_gap(&model, resolution, gap_threshold.unwrap_or(tol::GAP_CLOSING))?;
    let result =
        hopf_degree_with_max_residual(&map, max_residual.unwrap_or(tol::DEGREE_RESIDUAL_MAX))?;
    Ok(Json::Object(vec![
        ("model", Json::Str(model_arg.into())),
        ("N", Json::Int(map.resolution() as i64)),
        ("degree", Json::Int(result.degree)),
        ("raw", Json::Float(result.raw)),
        ("residual", Json::Float(result.residual)),
        (
            "min_gap",
            map.min_gap().map_or(Json::Null, Json::Float),
        ),
    ]))
}
