//! DIMACS `.col` graphs and JSON coloring records.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{ColoredGraph, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parsed DIMACS file: the graph plus its comment lines (without the
/// leading `c`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimacs {
    pub graph: Graph,
    pub comments: Vec<String>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("malformed {what}")))
}

/// Reads DIMACS `.col` text: `c` comments, one `p edge n m` header and
/// 1-indexed `e u v` lines. Duplicate edge lines are collapsed.
pub fn read_dimacs(text: &str) -> Result<Dimacs> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut comments = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("c") => comments.push(trimmed.strip_prefix('c').unwrap_or("").trim_start().to_string()),
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(parse_err(line, "expected `p edge <n> <m>`"));
                }
                let nv: usize = field(toks.next(), line, "vertex count")?;
                let _m: usize = field(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens in problem line"));
                }
                n = Some(nv);
            }
            Some("e") => {
                let nv = n.ok_or_else(|| parse_err(line, "edge line before problem line"))?;
                let u: usize = field(toks.next(), line, "edge endpoint")?;
                let v: usize = field(toks.next(), line, "edge endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens in edge line"));
                }
                for x in [u, v] {
                    if x == 0 || x > nv {
                        return Err(parse_err(line, format!("vertex {x} out of range 1..={nv}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
    }
    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing problem line"))?;
    let graph = Graph::from_edges(n, edges).expect("edges validated above");
    Ok(Dimacs { graph, comments })
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    read_dimacs(text).map(|d| d.graph)
}

/// Writes `p edge n m` followed by one `e u v` line per edge (`u < v`,
/// 1-indexed, lexicographic order). Comments are not written.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// JSON record of a colored graph. Field order is fixed so records are
/// byte-stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringRecord {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub k: u32,
    pub colors: Vec<u32>,
    pub classes: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dominating_star: Option<Vec<usize>>,
}

impl ColoringRecord {
    pub fn new(g: &Graph, c: &Coloring, star: Option<&[usize]>) -> Self {
        ColoringRecord {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            k: c.k(),
            colors: c.colors().to_vec(),
            classes: c.classes(),
            dominating_star: star.map(<[usize]>::to_vec),
        }
    }

    /// Rebuilds and cross-checks graph, coloring and star.
    pub fn decode(&self) -> Result<(Graph, Coloring, Option<Vec<usize>>)> {
        let g = Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        let c = Coloring::new(self.colors.clone())?;
        c.check_total(&g)?;
        if c.k() != self.k {
            return Err(Error::Record(format!("k = {} but colors use {}", self.k, c.k())));
        }
        if c.classes() != self.classes {
            return Err(Error::Record("classes disagree with colors".into()));
        }
        if let Some(star) = &self.dominating_star {
            crate::verify::check_star(&g, &c, star).map_err(Error::Record)?;
        }
        Ok((g, c, self.dominating_star.clone()))
    }
}

/// One-line JSON record (newline terminated).
pub fn serialize_coloring(g: &Graph, c: &Coloring, star: Option<&[usize]>) -> String {
    let mut s = serde_json::to_string(&ColoringRecord::new(g, c, star)).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_coloring(text: &str) -> Result<(Graph, Coloring, Option<Vec<usize>>)> {
    let rec: ColoringRecord = serde_json::from_str(text.trim()).map_err(|e| Error::Record(e.to_string()))?;
    rec.decode()
}

pub fn serialize_colored(cg: &ColoredGraph) -> String {
    serialize_coloring(&cg.graph, &cg.coloring, cg.dominating_star.as_deref())
}
