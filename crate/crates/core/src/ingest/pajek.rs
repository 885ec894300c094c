//! Pajek ingestion for weighted food webs.
//!
//! Supports the minimal subset used by the food-web corpus: one
//! `*Vertices n` section with `i "label"` lines (1-based indices, optional
//! trailing coordinates ignored), then one `*Arcs` section of
//! `source target weight` triples. An arc `(u, v)` with weight `w` records
//! that `u` inherits carbon from `v`, i.e. `u` preys on `v`. Keywords are
//! case-insensitive; `%` comment lines and blank lines are skipped. Other
//! section kinds (`*Edges`, `*Matrix`, a second `*Arcs`, ...) are rejected
//! rather than mis-parsed.

use crate::error::{Error, Result};
use crate::graph::CompetitionNetwork;

/// A node whose weighted in- and out-flows disagree by more than the 1%
/// relative tolerance expected of an energy-balanced food web.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyImbalance {
    pub label: String,
    pub weighted_in: f64,
    pub weighted_out: f64,
    /// `|in - out| / max(in, out)`.
    pub relative_difference: f64,
}

const BALANCE_TOLERANCE: f64 = 0.01;

#[derive(PartialEq)]
enum Section {
    Preamble,
    Vertices,
    Arcs,
}

fn parse_vertex_label(rest: &str, lineno: usize) -> Result<String> {
    let rest = rest.trim_start();
    if let Some(stripped) = rest.strip_prefix('"') {
        match stripped.find('"') {
            Some(end) => Ok(stripped[..end].to_owned()),
            None => Err(Error::parse(lineno, "unterminated quoted vertex label")),
        }
    } else {
        // bare single-token label; trailing coordinates are ignored
        rest.split_whitespace()
            .next()
            .map(str::to_owned)
            .ok_or_else(|| Error::parse(lineno, "vertex line is missing a label"))
    }
}

/// Parses the Pajek subset into a competition network. Vertices without an
/// explicit label line are labeled with their 1-based index. Duplicate arcs
/// accumulate. Errors carry the 1-based line number.
pub fn parse_pajek(input: &str) -> Result<CompetitionNetwork> {
    let mut section = Section::Preamble;
    let mut vertex_count = 0usize;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut arcs: Vec<(usize, usize, f64)> = Vec::new();
    let mut last_line = 0usize;

    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }

        if let Some(keyword) = line.strip_prefix('*') {
            let mut tokens = keyword.split_whitespace();
            let name = tokens.next().unwrap_or("").to_ascii_lowercase();
            match (name.as_str(), &section) {
                ("vertices", Section::Preamble) => {
                    let count: i64 = tokens
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "*Vertices requires a count"))?
                        .parse()
                        .map_err(|_| Error::parse(lineno, "*Vertices count is not an integer"))?;
                    if count <= 0 {
                        return Err(Error::parse(lineno, "vertex count must be positive"));
                    }
                    if tokens.next().is_some() {
                        return Err(Error::parse(lineno, "unexpected tokens after *Vertices count"));
                    }
                    vertex_count = count as usize;
                    labels = vec![None; vertex_count];
                    section = Section::Vertices;
                }
                ("vertices", _) => {
                    return Err(Error::parse(lineno, "second *Vertices section is not supported"))
                }
                ("arcs", Section::Vertices) => {
                    if tokens.next().is_some() {
                        // multi-relational "*Arcs :k" headers are out of scope
                        return Err(Error::parse(lineno, "unexpected tokens after *Arcs"));
                    }
                    section = Section::Arcs;
                }
                ("arcs", Section::Arcs) => {
                    return Err(Error::parse(lineno, "second *Arcs section is not supported"))
                }
                ("arcs", Section::Preamble) => {
                    return Err(Error::parse(lineno, "*Arcs before *Vertices"))
                }
                (other, _) => {
                    return Err(Error::parse(lineno, format!("unsupported section *{other}")))
                }
            }
            continue;
        }

        match section {
            Section::Preamble => {
                return Err(Error::parse(lineno, "expected *Vertices before data lines"))
            }
            Section::Vertices => {
                let (first, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
                let index: usize = first
                    .parse()
                    .map_err(|_| Error::parse(lineno, "vertex index is not an integer"))?;
                if index == 0 || index > vertex_count {
                    return Err(Error::parse(
                        lineno,
                        format!("vertex index {index} out of range 1..={vertex_count}"),
                    ));
                }
                let label = parse_vertex_label(rest, lineno)?;
                if label.is_empty() {
                    return Err(Error::parse(lineno, "vertex label must be non-empty"));
                }
                if labels.iter().flatten().any(|existing| *existing == label) {
                    return Err(Error::parse(lineno, format!("duplicate vertex label {label:?}")));
                }
                if labels[index - 1].replace(label).is_some() {
                    return Err(Error::parse(lineno, format!("vertex {index} defined twice")));
                }
            }
            Section::Arcs => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != 3 {
                    return Err(Error::parse(
                        lineno,
                        format!("expected 'source target weight', got {} tokens", tokens.len()),
                    ));
                }
                let endpoint = |tok: &str| -> Result<usize> {
                    let i: usize = tok
                        .parse()
                        .map_err(|_| Error::parse(lineno, "arc endpoint is not an integer"))?;
                    if i == 0 || i > vertex_count {
                        return Err(Error::parse(
                            lineno,
                            format!("arc endpoint {i} out of range 1..={vertex_count}"),
                        ));
                    }
                    Ok(i)
                };
                let source = endpoint(tokens[0])?;
                let target = endpoint(tokens[1])?;
                if source == target {
                    return Err(Error::parse(lineno, format!("self-loop arc on vertex {source}")));
                }
                let weight: f64 = tokens[2]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "arc weight is not a number"))?;
                if !(weight.is_finite() && weight >= 0.0) {
                    return Err(Error::parse(
                        lineno,
                        format!("arc weight must be finite and non-negative, got {weight}"),
                    ));
                }
                arcs.push((source, target, weight));
            }
        }
    }

    if section != Section::Arcs {
        return Err(Error::parse(last_line.max(1), "missing *Arcs section"));
    }

    let labels: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(i, label)| label.unwrap_or_else(|| (i + 1).to_string()))
        .collect();
    let edges = arcs
        .iter()
        .map(|&(s, t, w)| (labels[s - 1].clone(), labels[t - 1].clone(), w));
    CompetitionNetwork::build(labels.clone(), edges)
}

/// Lists nodes whose weighted in- and out-degree differ by more than 1%
/// relative. Food webs are expected to be energy-balanced; imbalances are
/// reported, never rejected.
pub fn energy_imbalance(net: &CompetitionNetwork) -> Vec<EnergyImbalance> {
    net.nodes()
        .filter_map(|u| {
            let weighted_in = net.in_degree(u).expect("valid node");
            let weighted_out = net.out_degree(u).expect("valid node");
            let scale = weighted_in.max(weighted_out);
            if scale == 0.0 {
                return None;
            }
            let relative_difference = (weighted_in - weighted_out).abs() / scale;
            (relative_difference > BALANCE_TOLERANCE).then(|| EnergyImbalance {
                label: net.label(u).to_owned(),
                weighted_in,
                weighted_out,
                relative_difference,
            })
        })
        .collect()
}
