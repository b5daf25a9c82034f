//! Colored embeddings and the upper-bound prover.
//!
//! A colored graph `(H, C)` embeds in `G` when some injective map sends
//! every edge of `H` to an edge of `G` and every pair of equally colored
//! vertices of `H` to non-adjacent vertices of `G`.

use serde::{Deserialize, Serialize};

use super::AtomCatalog;
use crate::coloring::ColoredGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{Verdict, Violation, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// `map[v]` is the target vertex of atom vertex `v`.
    pub map: Vec<usize>,
}

struct Matcher<'a> {
    atom: &'a ColoredGraph,
    target: &'a Graph,
    order: Vec<usize>,
    /// For each position in `order`: earlier atom neighbors and earlier
    /// atom vertices of the same color.
    back_adj: Vec<Vec<usize>>,
    back_same: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(atom: &'a ColoredGraph, target: &'a Graph) -> Self {
        let h = &atom.graph;
        let n = h.n();
        let mut placed = vec![false; n];
        let mut seen = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (seen[v], h.degree(v), std::cmp::Reverse(v)))
                .expect("vertex left");
            placed[v] = true;
            order.push(v);
            for &w in h.neighbors(v) {
                seen[w] += 1;
            }
        }
        let mut back_adj = Vec::with_capacity(n);
        let mut back_same = Vec::with_capacity(n);
        for (pos, &v) in order.iter().enumerate() {
            let earlier = &order[..pos];
            back_adj.push(earlier.iter().copied().filter(|&u| h.has_edge(u, v)).collect());
            back_same.push(
                earlier
                    .iter()
                    .copied()
                    .filter(|&u| atom.coloring.color(u) == atom.coloring.color(v))
                    .collect(),
            );
        }
        Matcher {
            atom,
            target,
            order,
            back_adj,
            back_same,
            map: vec![usize::MAX; n],
            used: vec![false; target.n()],
        }
    }

    fn fits(&self, pos: usize, x: usize) -> bool {
        let v = self.order[pos];
        !self.used[x]
            && self.target.degree(x) >= self.atom.graph.degree(v)
            && self.back_adj[pos].iter().all(|&u| self.target.has_edge(self.map[u], x))
            && self.back_same[pos].iter().all(|&u| !self.target.has_edge(self.map[u], x))
    }

    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let cands: Vec<usize> = match self.back_adj[pos].first() {
            Some(&u) => self.target.neighbors(self.map[u]).to_vec(),
            None => self.target.vertices().collect(),
        };
        for x in cands {
            if self.fits(pos, x) {
                self.map[v] = x;
                self.used[x] = true;
                if self.run(pos + 1) {
                    return true;
                }
                self.used[x] = false;
                self.map[v] = usize::MAX;
            }
        }
        false
    }
}

/// Checks both embedding conditions for `map` directly.
pub fn is_embedding(atom: &ColoredGraph, target: &Graph, map: &[usize]) -> bool {
    let h = &atom.graph;
    if map.len() != h.n() || map.iter().any(|&x| x >= target.n()) {
        return false;
    }
    let mut sorted = map.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != map.len() {
        return false;
    }
    for u in h.vertices() {
        for v in u + 1..h.n() {
            if h.has_edge(u, v) && !target.has_edge(map[u], map[v]) {
                return false;
            }
            if atom.coloring.color(u) == atom.coloring.color(v) && target.has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

/// Complete backtracking search for a colored embedding of `atom` in
/// `target`.
pub fn embed(atom: &ColoredGraph, target: &Graph) -> Option<Embedding> {
    if atom.n() > target.n() {
        return None;
    }
    let mut m = Matcher::new(atom, target);
    if !m.run(0) {
        return None;
    }
    assert!(is_embedding(atom, target, &m.map), "search returned an invalid embedding");
    Some(Embedding { map: m.map })
}

/// Upper bound via the atom catalog for `t`: if no atom embeds in `g`, every
/// z-coloring of `g` uses at most `t - 1` colors and the verdict passes with
/// a [`Witness::NoEmbedding`]. If some atom embeds the result is
/// inconclusive: the verdict fails with [`Violation::AtomEmbeds`] and
/// carries the embedding.
pub fn prove_upper_bound(g: &Graph, t: usize, catalog: &AtomCatalog) -> Result<Verdict> {
    if catalog.t != t {
        return Err(Error::InvalidArgument(format!(
            "catalog is for t = {}, bound requested for t = {t}",
            catalog.t
        )));
    }
    if catalog.filters.triangle_free && g.has_triangle() {
        return Err(Error::InvalidArgument(
            "triangle-free catalog supplied for a graph that contains a triangle".into(),
        ));
    }
    for (idx, atom) in catalog.atoms.iter().enumerate() {
        if let Some(e) = embed(&atom.cg, g) {
            return Ok(Verdict {
                pass: false,
                violations: vec![Violation::AtomEmbeds { atom: idx }],
                witness: Some(Witness::Embedding { atom: idx, map: e.map }),
            });
        }
    }
    Ok(Verdict {
        pass: true,
        violations: vec![],
        witness: Some(Witness::NoEmbedding { atoms_checked: catalog.atoms.len() }),
    })
}
