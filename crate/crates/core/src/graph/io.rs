//! Text format:
//!
//! ```text
//! c comment
//! p <n> <m>
//! e <u> <v>
//! w <v> <weight>
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{parse_err, Error, Result};

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    match tok {
        None => parse_err(line, format!("missing {what}")),
        Some(t) => t
            .parse()
            .or_else(|_| parse_err(line, format!("bad {what} '{t}'"))),
    }
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared_m = 0usize;
    let mut seen_edges = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if g.is_some() {
                    return parse_err(ln, "duplicate header");
                }
                let n: usize = num(toks.next(), ln, "vertex count")?;
                declared_m = num(toks.next(), ln, "edge count")?;
                g = Some(Graph::new(n));
            }
            "e" | "w" => {
                let Some(graph) = g.as_mut() else {
                    return parse_err(ln, "record before 'p' header");
                };
                let n = graph.n();
                let v: usize = num(toks.next(), ln, "vertex")?;
                if v >= n {
                    return parse_err(ln, format!("vertex {v} out of range"));
                }
                if tag == "e" {
                    let u: usize = num(toks.next(), ln, "vertex")?;
                    if u >= n {
                        return parse_err(ln, format!("vertex {u} out of range"));
                    }
                    if u == v {
                        return parse_err(ln, format!("self-loop at {v}"));
                    }
                    if !graph.add_edge(v, u).map_err(|e| Error::Parse {
                        line: ln,
                        msg: e.to_string(),
                    })? {
                        return parse_err(ln, format!("duplicate edge {v} {u}"));
                    }
                    seen_edges += 1;
                } else {
                    let w: f64 = num(toks.next(), ln, "weight")?;
                    if !w.is_finite() {
                        return parse_err(ln, "weight must be finite");
                    }
                    graph.set_weight(v, w).expect("finite weight");
                }
            }
            other => return parse_err(ln, format!("unknown record '{other}'")),
        }
        if toks.next().is_some() {
            return parse_err(ln, "trailing tokens");
        }
    }
    let Some(g) = g else {
        return parse_err(0, "missing 'p' header");
    };
    if seen_edges != declared_m {
        return parse_err(
            0,
            format!("header declares {declared_m} edges, found {seen_edges}"),
        );
    }
    Ok(g)
}

/// Writes the canonical form: header, edges sorted with `u < v`, then one
/// weight line per vertex when the graph is weighted.
pub fn write_graph(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    if let Some(w) = g.weights() {
        for (v, x) in w.iter().enumerate() {
            writeln!(s, "w {v} {x}").unwrap();
        }
    }
    s
}
