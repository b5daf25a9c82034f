//! Vertex colorings with 1-based colors and colored graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total vertex coloring with colors `1..=k`, every one of them used.
/// Serializes as the plain color vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Wraps an already normalized color vector.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::InvalidColoring("color 0 is not allowed, colors start at 1".into()));
        }
        let mut used = vec![false; k as usize + 1];
        for &c in &colors {
            used[c as usize] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !used[c as usize]) {
            return Err(Error::InvalidColoring(format!("color {c} is unused")));
        }
        Ok(Coloring { colors, k })
    }

    /// Compacts arbitrary positive labels onto `1..=k`, keeping their order.
    /// This is the "delete the empty class and shift the higher ones down"
    /// step of the reduction procedures.
    pub fn normalized(raw: &[u32]) -> Self {
        let mut labels: Vec<u32> = raw.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let colors = raw.iter().map(|c| labels.binary_search(c).expect("label present") as u32 + 1).collect();
        Coloring { colors, k: labels.len() as u32 }
    }

    /// Every vertex in its own class, colored `v + 1`.
    pub fn all_distinct(n: usize) -> Self {
        Coloring { colors: (1..=n as u32).collect(), k: n as u32 }
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<u32> {
        self.colors
    }

    /// Color classes in color order; `classes()[i]` holds color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k as usize];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c as usize - 1].push(v);
        }
        classes
    }

    pub fn class(&self, c: u32) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    /// Restriction to the first `n` vertices, renormalized.
    pub fn restrict_prefix(&self, n: usize) -> Coloring {
        Coloring::normalized(&self.colors[..n])
    }

    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::NotTotal { got: self.len(), n: g.n() });
        }
        Ok(())
    }

    /// Monochromatic edges, in edge order.
    pub fn conflicts(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges().filter(|&(u, v)| self.colors[u] == self.colors[v]).collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

impl TryFrom<Vec<u32>> for Coloring {
    type Error = Error;

    fn try_from(colors: Vec<u32>) -> Result<Self> {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<u32> {
    fn from(c: Coloring) -> Self {
        c.colors
    }
}

/// A graph together with a proper coloring and, optionally, a dominating
/// star `u_1, ..., u_k` (with `u_j` of color `j`) witnessing a z-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub coloring: Coloring,
    pub dominating_star: Option<Vec<usize>>,
}

impl ColoredGraph {
    /// Validates properness and, when given, the star witness.
    pub fn new(graph: Graph, coloring: Coloring, star: Option<Vec<usize>>) -> Result<Self> {
        coloring.check_total(&graph)?;
        if let Some(&(u, v)) = coloring.conflicts(&graph).first() {
            return Err(Error::Improper(u, v));
        }
        if let Some(star) = &star {
            crate::verify::check_star(&graph, &coloring, star)
                .map_err(|msg| Error::InvalidColoring(format!("bad dominating star: {msg}")))?;
        }
        Ok(ColoredGraph { graph, coloring, dominating_star: star })
    }

    /// Builds without the star check (properness is still checked).
    pub fn plain(graph: Graph, coloring: Coloring) -> Result<Self> {
        Self::new(graph, coloring, None)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> ColoredGraph {
        let mut colors = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            colors[p] = self.coloring.color(v);
        }
        ColoredGraph {
            graph: self.graph.relabel(perm),
            coloring: Coloring { colors, k: self.coloring.k },
            dominating_star: self.dominating_star.as_ref().map(|s| s.iter().map(|&v| perm[v]).collect()),
        }
    }
}
