//! Plain-text edge lists.
//!
//! ```text
//! # comments start with '#'
//! directed 5          # or `undirected`; the vertex count is optional
//! 2 1 1.0             # u v w: arc u -> v with weight w (1-based)
//! ```
//!
//! An arc `u -> v` means vertex `u` drives vertex `v`, i.e. it sets
//! `weights[(v, u)]`. Undirected lines set both entries. Without an explicit
//! vertex count the order is the largest index mentioned.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::network::WeightedNetwork;
use crate::Matrix;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<WeightedNetwork> {
    let mut header: Option<(bool, Option<usize>)> = None;
    let mut arcs: Vec<(usize, usize, usize, f64)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if header.is_none() {
            let directed = match tokens[0] {
                "directed" => true,
                "undirected" => false,
                other => {
                    return Err(parse_err(
                        line_no,
                        format!("expected header `directed` or `undirected`, found `{other}`"),
                    ))
                }
            };
            let order = match tokens.len() {
                1 => None,
                2 => Some(tokens[1].parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(
                    || parse_err(line_no, format!("invalid vertex count `{}`", tokens[1])),
                )?),
                _ => return Err(parse_err(line_no, "header has trailing tokens")),
            };
            header = Some((directed, order));
            continue;
        }
        if tokens.len() != 3 {
            return Err(parse_err(
                line_no,
                format!("expected `u v w`, found {} field(s)", tokens.len()),
            ));
        }
        let vertex = |tok: &str| {
            tok.parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| parse_err(line_no, format!("invalid vertex index `{tok}` (indices are 1-based)")))
        };
        let u = vertex(tokens[0])?;
        let v = vertex(tokens[1])?;
        let w: f64 = tokens[2]
            .parse()
            .ok()
            .filter(|w: &f64| w.is_finite())
            .ok_or_else(|| parse_err(line_no, format!("invalid weight `{}`", tokens[2])))?;
        arcs.push((line_no, u - 1, v - 1, w));
    }

    let (directed, declared) =
        header.ok_or_else(|| parse_err(last_line.max(1), "missing `directed`/`undirected` header"))?;
    let max_index = arcs.iter().map(|&(_, u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    let order = match declared {
        Some(n) => {
            if let Some(&(line, u, v, _)) =
                arcs.iter().find(|&&(_, u, v, _)| u.max(v) >= n)
            {
                return Err(parse_err(
                    line,
                    format!(
                        "vertex {} exceeds declared vertex count {n}",
                        u.max(v) + 1
                    ),
                ));
            }
            n
        }
        None if max_index == 0 => {
            return Err(parse_err(last_line.max(1), "no edges and no vertex count"))
        }
        None => max_index,
    };

    let mut weights = Matrix::zeros(order, order);
    let mut seen = vec![false; order * order];
    for (line, u, v, w) in arcs {
        let (target, source) = if directed { (v, u) } else { (u.max(v), u.min(v)) };
        let key = target * order + source;
        if seen[key] {
            return Err(parse_err(
                line,
                format!("duplicate edge between {} and {}", u + 1, v + 1),
            ));
        }
        seen[key] = true;
        weights[(target, source)] = w;
        if !directed {
            weights[(source, target)] = w;
        }
    }
    WeightedNetwork::new(weights, directed)
}

/// Renders a network in the edge-list format. Weights use the shortest
/// representation that parses back to the same `f64`.
pub fn write(net: &WeightedNetwork) -> String {
    let n = net.order();
    let mut out = String::new();
    let kind = if net.is_directed() { "directed" } else { "undirected" };
    writeln!(out, "{kind} {n}").unwrap();
    if net.is_directed() {
        for source in 0..n {
            for target in 0..n {
                let w = net.weight(target, source);
                if w != 0.0 {
                    writeln!(out, "{} {} {}", source + 1, target + 1, w).unwrap();
                }
            }
        }
    } else {
        for i in 0..n {
            for j in i..n {
                let w = net.weight(i, j);
                if w != 0.0 {
                    writeln!(out, "{} {} {}", i + 1, j + 1, w).unwrap();
                }
            }
        }
    }
    out
}
