//! Text formats for framed link diagrams.
//!
//! Two line-oriented UTF-8 formats are understood, both allowing `#` comments
//! and blank lines:
//!
//! **Crossing list** — a `components <n>` header followed by zero or more
//! `cross <over> <under> <sign>` lines (sign one of `+ - +1 -1`) and optional
//! `framing <component> <int>` lines.
//!
//! **Signed Gauss code** — one component per line, whitespace-separated
//! tokens `O<label><sign>` / `U<label><sign>`. Labels are positive integers
//! global to the file; each label must occur exactly once as `O` and once as
//! `U`, with the same sign at both occurrences. Only combinatorial
//! consistency is checked, not planar realizability: the invariants depend
//! only on the signed crossing data.

use super::{CrossingRecord, FramedLinkDiagram, LinkError, Sign};
use std::collections::BTreeMap;

/// Which of the two link file formats a text is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkFormat {
    CrossingList,
    GaussCode,
}

/// Decides the format from the first non-comment token: `components` starts
/// a crossing list, an `O.../U...` token starts a Gauss code.
pub fn detect_format(text: &str) -> Result<LinkFormat, LinkError> {
    for (idx, line) in text.lines().enumerate() {
        let line = strip_comment(line);
        let Some(first) = line.split_whitespace().next() else {
            continue;
        };
        return match first {
            "components" => Ok(LinkFormat::CrossingList),
            t if t.starts_with('O') || t.starts_with('U') => Ok(LinkFormat::GaussCode),
            t => Err(LinkError::Parse {
                line: idx + 1,
                message: format!("unrecognized leading token `{t}`"),
            }),
        };
    }
    Err(LinkError::Parse { line: 1, message: "empty input".into() })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_sign(token: &str, line: usize) -> Result<Sign, LinkError> {
    match token {
        "+" | "+1" => Ok(Sign::Plus),
        "-" | "-1" => Ok(Sign::Minus),
        other => Err(LinkError::Parse {
            line,
            message: format!("expected sign `+`, `-`, `+1` or `-1`, found `{other}`"),
        }),
    }
}

fn parse_num<T: std::str::FromStr>(token: &str, what: &str, line: usize) -> Result<T, LinkError> {
    token.parse().map_err(|_| LinkError::Parse {
        line,
        message: format!("cannot read {what} from `{token}`"),
    })
}

/// Parses the crossing-list format.
pub fn parse_link_text(text: &str) -> Result<FramedLinkDiagram, LinkError> {
    let mut num_components: Option<usize> = None;
    let mut crossings = Vec::new();
    let mut offsets: Vec<i64> = Vec::new();
    let mut framing_seen: Vec<bool> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = strip_comment(raw).split_whitespace();
        let Some(keyword) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();

        match keyword {
            "components" => {
                if num_components.is_some() {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: "duplicate `components` header".into(),
                    });
                }
                let [n] = rest[..] else {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: "usage: components <n>".into(),
                    });
                };
                let n: usize = parse_num(n, "component count", line_no)?;
                if n == 0 {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: "component count must be positive".into(),
                    });
                }
                num_components = Some(n);
                offsets = vec![0; n];
                framing_seen = vec![false; n];
            }
            "cross" => {
                let n = num_components.ok_or_else(|| LinkError::Parse {
                    line: line_no,
                    message: "`cross` before `components` header".into(),
                })?;
                let [over, under, sign] = rest[..] else {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: "usage: cross <over> <under> <sign>".into(),
                    });
                };
                let over: usize = parse_num(over, "component index", line_no)?;
                let under: usize = parse_num(under, "component index", line_no)?;
                for index in [over, under] {
                    if index >= n {
                        return Err(LinkError::Parse {
                            line: line_no,
                            message: format!(
                                "component index {index} out of range (diagram has {n})"
                            ),
                        });
                    }
                }
                let sign = parse_sign(sign, line_no)?;
                crossings.push(CrossingRecord { over, under, sign });
            }
            "framing" => {
                let n = num_components.ok_or_else(|| LinkError::Parse {
                    line: line_no,
                    message: "`framing` before `components` header".into(),
                })?;
                let [comp, value] = rest[..] else {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: "usage: framing <component> <int>".into(),
                    });
                };
                let comp: usize = parse_num(comp, "component index", line_no)?;
                if comp >= n {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: format!("framing for undeclared component {comp} (diagram has {n})"),
                    });
                }
                if framing_seen[comp] {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: format!("duplicate framing line for component {comp}"),
                    });
                }
                framing_seen[comp] = true;
                offsets[comp] = parse_num(value, "framing offset", line_no)?;
            }
            other => {
                return Err(LinkError::Parse {
                    line: line_no,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }

    let n = num_components.ok_or(LinkError::Parse {
        line: 1,
        message: "missing `components` header".into(),
    })?;
    FramedLinkDiagram::new(n, crossings, Some(offsets))
}

#[derive(Debug, Clone, Copy)]
struct GaussOccurrence {
    component: usize,
    sign: Sign,
    line: usize,
}

/// Parses the signed extended Gauss code format, one component per line.
pub fn parse_gauss_code(text: &str) -> Result<FramedLinkDiagram, LinkError> {
    let mut over_occ: BTreeMap<u64, GaussOccurrence> = BTreeMap::new();
    let mut under_occ: BTreeMap<u64, GaussOccurrence> = BTreeMap::new();
    let mut component = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.split_whitespace().next().is_none() {
            continue;
        }
        for token in line.split_whitespace() {
            let (kind, rest) = token.split_at(1);
            let sign_pos = rest
                .find(['+', '-'])
                .ok_or_else(|| LinkError::Parse {
                    line: line_no,
                    message: format!("token `{token}` has no sign"),
                })?;
            let (label_str, sign_str) = rest.split_at(sign_pos);
            let label: u64 = parse_num(label_str, "crossing label", line_no)?;
            if label == 0 {
                return Err(LinkError::Parse {
                    line: line_no,
                    message: "crossing labels are positive integers".into(),
                });
            }
            let sign = parse_sign(sign_str, line_no)?;
            let occ = GaussOccurrence { component, sign, line: line_no };
            let table = match kind {
                "O" => &mut over_occ,
                "U" => &mut under_occ,
                other => {
                    return Err(LinkError::Parse {
                        line: line_no,
                        message: format!("token `{token}` must start with O or U, found `{other}`"),
                    })
                }
            };
            if table.insert(label, occ).is_some() {
                return Err(LinkError::Parse {
                    line: line_no,
                    message: format!("label {label} seen twice as {kind}"),
                });
            }
        }
        component += 1;
    }

    if component == 0 {
        return Err(LinkError::Parse { line: 1, message: "empty Gauss code".into() });
    }

    let mut crossings = Vec::with_capacity(over_occ.len());
    for (&label, o) in &over_occ {
        let u = under_occ.get(&label).ok_or_else(|| LinkError::Parse {
            line: o.line,
            message: format!("dangling label {label}: O occurrence without U"),
        })?;
        if o.sign != u.sign {
            return Err(LinkError::Parse {
                line: u.line,
                message: format!("label {label}: sign differs between O and U occurrences"),
            });
        }
        crossings.push(CrossingRecord { over: o.component, under: u.component, sign: o.sign });
    }
    if let Some((&label, u)) = under_occ.iter().find(|(l, _)| !over_occ.contains_key(l)) {
        return Err(LinkError::Parse {
            line: u.line,
            message: format!("dangling label {label}: U occurrence without O"),
        });
    }

    FramedLinkDiagram::new(component, crossings, None)
}
