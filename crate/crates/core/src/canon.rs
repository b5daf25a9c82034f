//! Canonical forms of vertex-colored graphs under color-preserving
//! isomorphism. Colors are fixed labels and are never permuted.
//!
//! The search is the usual individualization-refinement scheme: refine the
//! partition seeded by (color, degree) to an equitable one, individualize a
//! vertex of the first non-singleton cell, and recurse. The certificate is
//! the lexicographically least adjacency encoding over all leaves. Branches
//! on twin vertices (same color, same neighborhood apart from each other)
//! are skipped, since swapping twins is an automorphism.

use crate::coloring::ColoredGraph;
use crate::graph::Graph;

/// Byte-string certificate; equal iff the colored graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(pub Vec<u8>);

impl Certificate {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

type Cells = Vec<Vec<usize>>;

struct Canonizer<'a> {
    g: &'a Graph,
    colors: &'a [u32],
    twins: Vec<Vec<bool>>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a Graph, colors: &'a [u32]) -> Self {
        let n = g.n();
        let mut twins = vec![vec![false; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                if colors[u] == colors[v] && same_neighborhood_apart(g, u, v) {
                    twins[u][v] = true;
                    twins[v][u] = true;
                }
            }
        }
        Canonizer { g, colors, twins, best: None }
    }

    fn refine(&self, cells: &mut Cells) {
        let n = self.g.n();
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let k = cells.len();
            let mut next: Cells = Vec::with_capacity(k);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u32; k];
                        for &w in self.g.neighbors(v) {
                            sig[cell_of[w]] += 1;
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let split = next.len() != cells.len();
            *cells = next;
            if !split {
                return;
            }
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let n = order.len();
        let mut bytes = Vec::with_capacity(4 + 2 * n + n * n / 16 + 1);
        bytes.extend_from_slice(&(n as u32).to_be_bytes());
        for &v in order {
            bytes.extend_from_slice(&(self.colors[v] as u16).to_be_bytes());
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for i in 0..n {
            for j in i + 1..n {
                acc = (acc << 1) | self.g.has_edge(order[i], order[j]) as u8;
                nbits += 1;
                if nbits == 8 {
                    bytes.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            bytes.push(acc << (8 - nbits));
        }
        bytes
    }

    fn search(&mut self, mut cells: Cells) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let code = self.encode(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cell {
            if reps.iter().all(|&r| !self.twins[r][v]) {
                reps.push(v);
            }
        }
        for v in reps {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&x| x != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.search(child);
        }
    }
}

fn same_neighborhood_apart(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&x| x != v);
    let b = g.neighbors(v).iter().filter(|&&x| x != u);
    a.eq(b)
}

/// Canonical labeling: returns the certificate and the vertex order that
/// produces it (`order[i]` is the original vertex placed at position `i`).
pub fn canonical_labeling(g: &Graph, colors: &[u32]) -> (Certificate, Vec<usize>) {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    let mut c = Canonizer::new(g, colors);
    let mut seeded: Vec<usize> = g.vertices().collect();
    seeded.sort_by_key(|&v| (colors[v], g.degree(v)));
    let mut cells: Cells = Vec::new();
    for v in seeded {
        match cells.last_mut() {
            Some(last) if (colors[last[0]], g.degree(last[0])) == (colors[v], g.degree(v)) => last.push(v),
            _ => cells.push(vec![v]),
        }
    }
    c.search(cells);
    let (code, order) = c.best.unwrap_or_default();
    (Certificate(code), order)
}

pub fn canonical_form(g: &Graph, colors: &[u32]) -> Certificate {
    canonical_labeling(g, colors).0
}

/// Certificate of a colored graph; the dominating star is ignored.
pub fn colored_canonical_form(cg: &ColoredGraph) -> Certificate {
    canonical_form(&cg.graph, cg.coloring.colors())
}

/// Certificate of an uncolored graph.
pub fn graph_canonical_form(g: &Graph) -> Certificate {
    canonical_form(g, &vec![1; g.n()])
}

pub fn is_colored_isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    a.n() == b.n() && a.graph.m() == b.graph.m() && colored_canonical_form(a) == colored_canonical_form(b)
}
