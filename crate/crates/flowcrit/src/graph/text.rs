//! Line-oriented graph files:
//!
//! ```text
//! # comment
//! vertices 3
//! tip 2
//! boundary 1 2 0
//! edge 0 1 1
//! edge 0 2 2
//! ```

use super::{BorderedMultigraph, Canvas, Multigraph, Vertex};
use crate::error::{Error, Result};
use crate::z3::Z3;

/// A parsed file: a bordered graph and an optional tip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: BorderedMultigraph,
    pub tip: Option<Vertex>,
}

impl GraphFile {
    pub fn canvas(&self) -> Option<Canvas> {
        self.tip.map(|t| Canvas::new(self.graph.clone(), t).expect("tip checked at parse time"))
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("{what} `{tok}` is not a number")))
}

pub fn parse_graph_file(src: &str) -> Result<GraphFile> {
    let mut n: Option<usize> = None;
    let mut tip = None;
    let mut boundary: Option<(Vec<Z3>, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        last = line;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut toks = text.split_whitespace();
        let key = toks.next().unwrap();
        match key {
            "vertices" => {
                if n.is_some() {
                    return Err(err(line, "duplicate `vertices`"));
                }
                n = Some(num(toks.next(), line, "vertex count")?);
            }
            "tip" => {
                if tip.is_some() {
                    return Err(err(line, "duplicate `tip`"));
                }
                tip = Some((num(toks.next(), line, "tip")?, line));
            }
            "boundary" => {
                if boundary.is_some() {
                    return Err(err(line, "duplicate `boundary`"));
                }
                let mut b = Vec::new();
                for t in toks.by_ref() {
                    match t {
                        "0" => b.push(Z3::ZERO),
                        "1" => b.push(Z3::ONE),
                        "2" | "-1" => b.push(Z3::TWO),
                        _ => return Err(err(line, format!("boundary value `{t}` not in 0, 1, 2"))),
                    }
                }
                boundary = Some((b, line));
            }
            "edge" => {
                let u = num(toks.next(), line, "endpoint")?;
                let v = num(toks.next(), line, "endpoint")?;
                let m = match toks.next() {
                    Some(t) => num(Some(t), line, "multiplicity")?,
                    None => 1,
                };
                edges.push((u, v, m, line));
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(err(line, format!("unexpected token `{extra}`")));
        }
    }
    let n = n.ok_or_else(|| err(last.max(1), "missing `vertices` line"))?;
    let mut g = Multigraph::empty(n);
    for (u, v, m, line) in edges {
        for _ in 0..m {
            g.push_edge(u, v).map_err(|e| err(line, e.to_string()))?;
        }
    }
    let (boundary, bline) = boundary.unwrap_or((vec![Z3::ZERO; n], last.max(1)));
    let graph = BorderedMultigraph::new(g, boundary).map_err(|e| err(bline, e.to_string()))?;
    let tip = match tip {
        Some((t, line)) if t >= n => return Err(err(line, format!("tip {t} out of range"))),
        Some((t, _)) => Some(t),
        None => None,
    };
    Ok(GraphFile { graph, tip })
}

/// Writes the canonical text: edges grouped and sorted by endpoints.
pub fn write_graph_file(g: &BorderedMultigraph, tip: Option<Vertex>) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    if let Some(t) = tip {
        out.push_str(&format!("tip {t}\n"));
    }
    let b: Vec<String> = g.boundary().iter().map(|b| b.to_string()).collect();
    out.push_str(&format!("boundary {}\n", b.join(" ")));
    for (u, v, m) in g.bundles() {
        out.push_str(&format!("edge {u} {v} {m}\n"));
    }
    out
}
