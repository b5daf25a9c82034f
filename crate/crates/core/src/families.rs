//! Named graph families: the bipartite graphs `H_t` and `K_{t,t}` minus a
//! matching, the trees `F_t`, their join `G_t`, the extremal trees `R_k`
//! with their canonic z-colorings, the Grundy tree atoms `T_k`, the
//! leaf-attachment operator and the order sequence `a_k` of `R_k`.
//!
//! Vertex numbering is deterministic and documented per constructor.

use serde::{Deserialize, Serialize};

use crate::coloring::{ColoredGraph, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::OutOfRange { value, msg: format!("{name} needs a parameter of at least {min}") });
    }
    Ok(())
}

/// `K_{t,t}` on sides `a_i = i-1` and `b_i = t+i-1` minus the `s` matching
/// edges `a_i b_i`, `i = 1..=s`.
pub fn gen_kttm(t: usize, s: usize) -> Result<Graph> {
    at_least("K_{t,t} minus a matching", t, 1)?;
    if s > t {
        return Err(Error::OutOfRange { value: s, msg: format!("matching size exceeds t = {t}") });
    }
    let edges = (0..t).flat_map(|i| (0..t).map(move |j| (i, t + j))).filter(|&(i, b)| !(b - t == i && i < s));
    Graph::from_edges(2 * t, edges)
}

/// `H_t = K_{t,t}` minus `t-1` matching edges. `a_t` (vertex `t-1`) and
/// `b_t` (vertex `2t-1`) keep full degree `t`.
pub fn gen_ht(t: usize) -> Result<Graph> {
    at_least("H_t", t, 2)?;
    gen_kttm(t, t - 1)
}

/// `F_t`: the path `v_1..v_t` (vertices `0..t`), then `t-2` leaves on `v_1`,
/// `t-2` leaves on `v_t` and `t-3` leaves on every inner path vertex, added
/// in that order.
pub fn gen_ft(t: usize) -> Result<Graph> {
    at_least("F_t", t, 3)?;
    let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
    let mut next = t;
    let mut hang = |v: usize, count: usize, edges: &mut Vec<(usize, usize)>| {
        for _ in 0..count {
            edges.push((v, next));
            next += 1;
        }
    };
    hang(0, t - 2, &mut edges);
    hang(t - 1, t - 2, &mut edges);
    for v in 1..t - 1 {
        hang(v, t - 3, &mut edges);
    }
    let n = t + 2 * (t - 2) + (t - 2) * (t - 3);
    Graph::from_edges(n, edges)
}

/// `G_t`: `H_t` on `0..2t`, `F_t` shifted by `2t`, and a last vertex `w`
/// adjacent to `a_t` and `v_1`.
pub fn gen_gt(t: usize) -> Result<Graph> {
    at_least("G_t", t, 3)?;
    let h = gen_ht(t)?;
    let f = gen_ft(t)?;
    let offset = h.n();
    h.disjoint_union(&f).with_vertex(&[t - 1, offset])
}

/// The tree `R_k` with its canonic z-coloring. Vertex 0 is the root `u_k`,
/// vertices `1..k` are `u_1..u_{k-1}`; the rest follow in breadth-first
/// order with siblings sorted by color. The dominating star is
/// `(u_1, ..., u_k)`.
///
/// A star leaf `u_j` gets children of every color in `1..k` except `j`;
/// any other vertex of color `c` gets children of the colors `1..c` missing
/// at its parent.
pub fn gen_rk(k: usize) -> Result<ColoredGraph> {
    at_least("R_k", k, 1)?;
    let k = k as u32;
    let mut colors = vec![k];
    let mut parent_color = vec![0u32];
    let mut edges = Vec::new();
    let mut head = 0;
    while head < colors.len() {
        let v = head;
        head += 1;
        let c = colors[v];
        let wanted: Vec<u32> = if v == 0 {
            (1..k).collect()
        } else if v < k as usize {
            (1..k).filter(|&x| x != c).collect()
        } else {
            (1..c).filter(|&x| x != parent_color[v]).collect()
        };
        for x in wanted {
            let w = colors.len();
            colors.push(x);
            parent_color.push(c);
            edges.push((v, w));
        }
    }
    let g = Graph::from_edges(colors.len(), edges)?;
    let star: Vec<usize> = (1..k as usize).chain([0]).collect();
    ColoredGraph::new(g, Coloring::new(colors)?, Some(star))
}

/// The Grundy tree atom `T_k` on `2^(k-1)` vertices with its Grundy
/// coloring. `T_{k+1}` is two copies of `T_k` (the first on the low
/// indices) whose roots are joined, the first root recolored `k+1`. Vertex
/// 0 is the root.
pub fn gen_tk(k: usize) -> Result<ColoredGraph> {
    at_least("T_k", k, 1)?;
    if k > 24 {
        return Err(Error::OutOfRange { value: k, msg: "T_k is capped at k = 24".into() });
    }
    let mut g = Graph::empty(1);
    let mut colors = vec![1u32];
    for level in 1..k as u32 {
        let n = g.n();
        let doubled = g.disjoint_union(&g);
        g = doubled.with_edge(0, n)?;
        let copy = colors.clone();
        colors.extend(copy);
        colors[0] = level + 1;
    }
    ColoredGraph::plain(g, Coloring::new(colors)?)
}

/// Attaches a fresh leaf `n + v` to every vertex `v`.
pub fn attach_leaves(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges().chain((0..n).map(|v| (v, n + v)));
    Graph::from_edges(2 * n, edges).expect("leaf edges are valid")
}

/// `a_1..=a_{k_max}` from the closed form `(k-3) 2^(k-1) + k + 2`, checked
/// against the recurrence `a_k = 2 a_{k-1} + 2^(k-1) - k`, `a_1 = 1`.
pub fn a_sequence(k_max: usize) -> Result<Vec<i128>> {
    at_least("a_k", k_max, 1)?;
    if k_max > 120 {
        return Err(Error::OutOfRange { value: k_max, msg: "a_k is capped at k = 120".into() });
    }
    let mut out = Vec::with_capacity(k_max);
    let mut rec: i128 = 1;
    for k in 1..=k_max as i128 {
        let closed = (k - 3) * (1i128 << (k - 1)) + k + 2;
        if k > 1 {
            rec = 2 * rec + (1i128 << (k - 1)) - k;
        }
        assert_eq!(closed, rec, "closed form and recurrence disagree at k = {k}");
        out.push(closed);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyName {
    Ht,
    Ft,
    Gt,
    Rk,
    Tk,
    KttMinusMatching,
}

impl std::str::FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Ht" => FamilyName::Ht,
            "Ft" => FamilyName::Ft,
            "Gt" => FamilyName::Gt,
            "Rk" => FamilyName::Rk,
            "Tk" => FamilyName::Tk,
            "KttMinusMatching" => FamilyName::KttMinusMatching,
            other => return Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        })
    }
}

/// A family member by name. For `KttMinusMatching` the matching size equals
/// `parameter` (the whole perfect matching removed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub parameter: usize,
}

impl FamilySpec {
    /// The graph plus the attached coloring for the colored families.
    pub fn build(&self) -> Result<(Graph, Option<ColoredGraph>)> {
        let p = self.parameter;
        Ok(match self.name {
            FamilyName::Ht => (gen_ht(p)?, None),
            FamilyName::Ft => (gen_ft(p)?, None),
            FamilyName::Gt => (gen_gt(p)?, None),
            FamilyName::KttMinusMatching => (gen_kttm(p, p)?, None),
            FamilyName::Rk => {
                let cg = gen_rk(p)?;
                (cg.graph.clone(), Some(cg))
            }
            FamilyName::Tk => {
                let cg = gen_tk(p)?;
                (cg.graph.clone(), Some(cg))
            }
        })
    }
}
