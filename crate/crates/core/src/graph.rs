//! Simple undirected graphs on dense vertex indices `0..n`.

use crate::error::{Error, Result};

/// A simple undirected graph stored as sorted adjacency lists.
///
/// Invariants: no self-loops, symmetric adjacency, neighbor lists sorted
/// ascending without duplicates. Every constructor enforces them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw(adj))
    }

    fn from_raw(mut adj: Vec<Vec<usize>>) -> Self {
        let mut deg_sum = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            deg_sum += list.len();
        }
        Graph { adj, m: deg_sum / 2 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Self::from_raw(adj)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("valid bipartite graph")
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Adjacency bitmasks; only valid for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask adjacency needs n <= 64");
        self.adj.iter().map(|list| list.iter().fold(0u64, |acc, &v| acc | (1u64 << v))).collect()
    }

    /// Copy of the graph without the edge `{u, v}` (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].retain(|&x| x != v);
        adj[v].retain(|&x| x != u);
        Self::from_raw(adj)
    }

    /// Copy of the graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Appends a fresh vertex (index `n`) adjacent to every vertex in `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Result<Graph> {
        let n = self.n();
        Graph::from_edges(n + 1, self.edges().chain(nbrs.iter().map(|&v| (v, n))))
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation preserves validity")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), edges).expect("union of valid graphs")
    }

    /// Subgraph induced by `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|(u, v)| (pos[u], pos[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph is valid")
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return true,
                }
            }
            false
        })
    }

    /// Whether the graph contains an induced path on `len` vertices.
    pub fn has_induced_path(&self, len: usize) -> bool {
        if len == 0 {
            return true;
        }
        let mut path = Vec::with_capacity(len);
        (0..self.n()).any(|v| {
            path.clear();
            path.push(v);
            self.extend_induced_path(&mut path, len)
        })
    }

    fn extend_induced_path(&self, path: &mut Vec<usize>, len: usize) -> bool {
        if path.len() == len {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            let prefix = &path[..path.len() - 1];
            if path.contains(&w) || prefix.iter().any(|&x| self.has_edge(x, w)) {
                continue;
            }
            path.push(w);
            if self.extend_induced_path(path, len) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Proper 2-coloring test.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_normalizes() {
        let g = Graph::from_edges(4, [(2, 1), (1, 2), (0, 3), (3, 0), (1, 3)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[2, 3]);
        assert_eq!(g.neighbors(3), &[0, 1]);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn structural_predicates() {
        assert!(Graph::complete(3).has_triangle());
        assert!(!Graph::cycle(4).has_triangle());
        assert!(Graph::path(5).has_induced_path(5));
        assert!(!Graph::cycle(5).has_induced_path(5));
        assert!(Graph::cycle(6).has_induced_path(5));
        assert!(Graph::path(7).is_tree());
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(Graph::complete_bipartite(3, 4).is_bipartite());
        assert_eq!(Graph::star(4).max_degree(), 4);
    }

    #[test]
    fn edge_surgery() {
        let c4 = Graph::cycle(4);
        let p4 = c4.without_edge(3, 0);
        assert_eq!(p4, Graph::path(4));
        assert_eq!(p4.with_edge(0, 3).unwrap(), c4);
        let plus = Graph::path(3).with_vertex(&[0, 2]).unwrap();
        assert_eq!(plus, Graph::cycle(4));
    }
}
