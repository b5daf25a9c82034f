//! Random instance generators and exhaustive small-graph enumeration.
//!
//! All generators take a caller-owned RNG so a fixed seed reproduces the
//! same instances. [`seeded`] builds the RNG used throughout the crate.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{canonical_labeling, Certificate};
use crate::graph::Graph;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Uniform random labeled tree from a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &code)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    assert_eq!(code.len() + 2, n, "a Prüfer code has n - 2 entries");
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("valid tree edges")
}

/// Triangle-free graph: each vertex pair is offered once in random order
/// and accepted with probability `p` unless it would close a triangle.
pub fn random_triangle_free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n <= 128, "triangle-free generator supports at most 128 vertices");
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut adj = vec![0u128; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if rng.gen_bool(p.clamp(0.0, 1.0)) && adj[u] & adj[v] == 0 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Random bipartite graph on sides `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(a + b, edges).expect("valid edges")
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, in canonical form, sorted by certificate. Practical up to
/// `n = 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive enumeration is limited to 9 vertices");
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen: BTreeSet<Certificate> = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let prev = size - 1;
            for subset in 0u32..(1 << prev) {
                let nbrs: Vec<usize> = (0..prev).filter(|&i| subset >> i & 1 == 1).collect();
                let h = g.with_vertex(&nbrs).expect("valid neighbors");
                let (cert, order) = canonical_labeling(&h, &vec![1; size]);
                if seen.insert(cert.clone()) {
                    next.push((cert, h.induced(&order)));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// Connected graphs among [`all_graphs`].
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Non-isomorphic trees on `n` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_tree).collect()
}
