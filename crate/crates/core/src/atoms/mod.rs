//! z-atoms: colored graphs one of which embeds in every graph whose
//! z-number reaches `t`.
//!
//! [`generate_atoms`] builds the catalog `D_t`, [`embed`] searches for
//! colored embeddings and [`prove_upper_bound`] turns a catalog into an
//! upper-bound certificate. Catalogs are stored as JSON lines: a header
//! record followed by one record per atom, ordered by canonical
//! certificate.

mod construct;
mod embed;

pub use construct::{
    edge_minimal, generate_atoms, grundify, phase1_generate, satisfies_club, set_partitions, ColorChoice,
    GenerateOptions, GrundifyStep, Provenance, StarChoice, MAX_T,
};
pub use embed::{embed, is_embedding, prove_upper_bound, Embedding};

use serde::{Deserialize, Serialize};

use crate::coloring::{ColoredGraph, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    /// Canonic z-coloring; the dominating star is the Phase I star.
    pub cg: ColoredGraph,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub triangle_free: bool,
}

/// How many graphs each generation stage produced or removed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogStats {
    pub phase1: usize,
    pub candidates: usize,
    pub removed_not_z: usize,
    pub removed_triangle: usize,
    pub removed_not_minimal: usize,
    /// Colored-isomorphic copies dropped, summed over all Grundify stages.
    pub removed_duplicates: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomCatalog {
    pub t: usize,
    pub atoms: Vec<Atom>,
    pub filters: Filters,
    pub stats: CatalogStats,
}

#[derive(Serialize, Deserialize)]
struct Header {
    t: usize,
    count: usize,
    filters: Filters,
    stats: CatalogStats,
}

#[derive(Serialize, Deserialize)]
struct AtomRecord {
    t: usize,
    n: usize,
    edges: Vec<[usize; 2]>,
    colors: Vec<u32>,
    dominating_star: Vec<usize>,
    provenance: Provenance,
}

impl AtomCatalog {
    pub fn max_order(&self) -> usize {
        self.atoms.iter().map(|a| a.cg.n()).max().unwrap_or(0)
    }

    /// JSON lines, byte-stable for a given catalog.
    pub fn to_jsonl(&self) -> String {
        let header = Header { t: self.t, count: self.atoms.len(), filters: self.filters, stats: self.stats };
        let mut out = serde_json::to_string(&header).expect("serializable");
        out.push('\n');
        for a in &self.atoms {
            let rec = AtomRecord {
                t: self.t,
                n: a.cg.n(),
                edges: a.cg.graph.edges().map(|(u, v)| [u, v]).collect(),
                colors: a.cg.coloring.colors().to_vec(),
                dominating_star: a.cg.dominating_star.clone().unwrap_or_default(),
                provenance: a.provenance.clone(),
            };
            out.push_str(&serde_json::to_string(&rec).expect("serializable"));
            out.push('\n');
        }
        out
    }

    /// Parses [`Self::to_jsonl`] output and re-validates every atom.
    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let bad = |line: usize, e: String| Error::Parse { line: line + 1, msg: e };
        let (hl, h) = lines.next().ok_or_else(|| bad(0, "empty catalog".into()))?;
        let header: Header = serde_json::from_str(h).map_err(|e| bad(hl, e.to_string()))?;
        let mut atoms = Vec::new();
        for (ln, line) in lines {
            let r: AtomRecord = serde_json::from_str(line).map_err(|e| bad(ln, e.to_string()))?;
            if r.t != header.t {
                return Err(bad(ln, format!("atom for t = {} in a catalog for t = {}", r.t, header.t)));
            }
            let g = Graph::from_edges(r.n, r.edges.iter().map(|e| (e[0], e[1])))?;
            let c = Coloring::new(r.colors)?;
            let cg = ColoredGraph::new(g, c, Some(r.dominating_star)).map_err(|e| bad(ln, e.to_string()))?;
            atoms.push(Atom { cg, provenance: r.provenance });
        }
        if atoms.len() != header.count {
            return Err(Error::Record(format!(
                "header announces {} atoms, found {}",
                header.count,
                atoms.len()
            )));
        }
        Ok(AtomCatalog { t: header.t, atoms, filters: header.filters, stats: header.stats })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_round_trip() {
        let cat = generate_atoms(3, GenerateOptions::default()).unwrap();
        let text = cat.to_jsonl();
        let back = AtomCatalog::from_jsonl(&text).unwrap();
        assert_eq!(back, cat);
        assert_eq!(back.to_jsonl(), text);
        assert!(AtomCatalog::from_jsonl("").is_err());
    }
}
