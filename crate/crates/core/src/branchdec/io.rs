//! Decomposition files are either
//!
//! ```text
//! bd <num_nodes>
//! r <root>
//! e <i> <j>
//! l <node> <vertex>
//! ```
//!
//! where `r` is optional (an unrooted tree is rooted canonically), or a
//! single `order v1 ... vn` record describing a linear order.

use std::fmt::Write as _;

use super::BranchDecomposition;
use crate::error::{parse_err, Error, Result};

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok {
        None => parse_err(line, format!("missing {what}")),
        Some(t) => t
            .parse()
            .or_else(|_| parse_err(line, format!("bad {what} '{t}'"))),
    }
}

/// Parses a decomposition of a graph on `n` vertices.
pub fn read_decomposition(text: &str, n: usize) -> Result<BranchDecomposition> {
    let mut header: Option<usize> = None;
    let mut order: Option<Vec<usize>> = None;
    let mut root = None;
    let mut edges = Vec::new();
    let mut leaves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        if tag == "c" {
            continue;
        }
        if tag == "order" {
            if header.is_some() || order.is_some() {
                return parse_err(ln, "'order' must be the only record");
            }
            let vs: Vec<usize> = toks
                .map(|t| num(Some(t), ln, "vertex"))
                .collect::<Result<_>>()?;
            order = Some(vs);
            continue;
        }
        if order.is_some() {
            return parse_err(ln, "'order' must be the only record");
        }
        if tag == "bd" {
            if header.is_some() {
                return parse_err(ln, "duplicate header");
            }
            header = Some(num(toks.next(), ln, "node count")?);
        } else {
            let Some(k) = header else {
                return parse_err(ln, "record before 'bd' header");
            };
            let a = num(toks.next(), ln, "node")?;
            if a >= k {
                return parse_err(ln, format!("node {a} out of range"));
            }
            match tag {
                "r" => {
                    if root.replace(a).is_some() {
                        return parse_err(ln, "duplicate root");
                    }
                }
                "e" => {
                    let b = num(toks.next(), ln, "node")?;
                    if b >= k {
                        return parse_err(ln, format!("node {b} out of range"));
                    }
                    edges.push((a, b));
                }
                "l" => {
                    let v = num(toks.next(), ln, "vertex")?;
                    if v >= n {
                        return parse_err(ln, format!("vertex {v} out of range"));
                    }
                    leaves.push((a, v));
                }
                other => return parse_err(ln, format!("unknown record '{other}'")),
            }
        }
        if toks.next().is_some() {
            return parse_err(ln, "trailing tokens");
        }
    }
    if let Some(o) = order {
        if o.len() != n {
            return Err(Error::InvalidDecomposition(format!(
                "order lists {} vertices, graph has {n}",
                o.len()
            )));
        }
        return BranchDecomposition::from_linear_order(&o);
    }
    let Some(k) = header else {
        return parse_err(0, "missing 'bd' header or 'order' record");
    };
    match root {
        Some(r) => BranchDecomposition::from_rooted(n, k, &edges, r, &leaves),
        None => BranchDecomposition::from_unrooted(n, k, &edges, &leaves),
    }
}

pub fn write_decomposition(d: &BranchDecomposition) -> String {
    let mut s = String::new();
    writeln!(s, "bd {}", d.num_nodes()).unwrap();
    writeln!(s, "r {}", d.root()).unwrap();
    let mut edges: Vec<(usize, usize)> = d
        .tree_edges()
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    for (a, b) in edges {
        writeln!(s, "e {a} {b}").unwrap();
    }
    for t in 0..d.num_nodes() {
        if let Some(v) = d.leaf_vertex(t) {
            writeln!(s, "l {t} {v}").unwrap();
        }
    }
    s
}
