//! Exact predicates for the coloring properties used throughout the crate:
//! proper, Grundy, color-dominating (b-coloring), nice vertex and z-coloring.
//!
//! Every predicate returns a [`Verdict`] that carries concrete violations on
//! failure and a witness on success.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotTotal {
        got: usize,
        n: usize,
    },
    MonochromaticEdge {
        u: usize,
        v: usize,
        color: u32,
    },
    /// `vertex` of color `color` has no neighbor of color `missing < color`.
    MissingLowerColor {
        vertex: usize,
        color: u32,
        missing: u32,
    },
    NoDominatingVertex {
        class: u32,
    },
    /// No vertex of the top color is adjacent to dominating vertices of
    /// every other color.
    NoDominatingStar {
        top: u32,
    },
    /// A catalog atom embeds in the target, so no upper bound follows.
    AtomEmbeds {
        atom: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// One dominating vertex per class, in color order.
    DominatingVertices { vertices: Vec<usize> },
    /// `u_1, ..., u_k` with `u_j` of color `j`, `u_k` adjacent to the rest.
    Star { vertices: Vec<usize> },
    /// Atom index plus injective vertex map into the target.
    Embedding { atom: usize, map: Vec<usize> },
    /// Number of catalog atoms confirmed not to embed.
    NoEmbedding { atoms_checked: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn from_violations(violations: Vec<Violation>, witness: Option<Witness>) -> Self {
        let pass = violations.is_empty();
        Verdict { pass, violations, witness: if pass { witness } else { None } }
    }

    pub fn fail(violation: Violation) -> Self {
        Verdict { pass: false, violations: vec![violation], witness: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts always serialize")
    }
}

/// Scratch space for distinct-color queries on neighborhoods.
pub(crate) struct NeighborColors {
    stamp: Vec<u32>,
    round: u32,
}

impl NeighborColors {
    pub(crate) fn new(k: u32) -> Self {
        NeighborColors { stamp: vec![0; k as usize + 2], round: 0 }
    }

    /// Marks the colors around `v`; afterwards [`Self::has`] answers queries.
    pub(crate) fn load(&mut self, g: &Graph, colors: &[u32], v: usize) {
        self.round += 1;
        for &w in g.neighbors(v) {
            let c = colors[w] as usize;
            if c >= self.stamp.len() {
                self.stamp.resize(c + 1, 0);
            }
            self.stamp[c] = self.round;
        }
    }

    #[inline]
    pub(crate) fn has(&self, c: u32) -> bool {
        self.stamp.get(c as usize).is_some_and(|&s| s == self.round)
    }

    /// Smallest color in `1..below` missing around the loaded vertex.
    pub(crate) fn first_missing_below(&self, below: u32) -> Option<u32> {
        (1..below).find(|&c| !self.has(c))
    }
}

fn total(g: &Graph, c: &Coloring) -> Result<()> {
    c.check_total(g)
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<()> {
    total(g, c)?;
    match c.conflicts(g).first() {
        Some(&(u, v)) => Err(Error::Improper(u, v)),
        None => Ok(()),
    }
}

pub fn check_proper(g: &Graph, c: &Coloring) -> Result<Verdict> {
    total(g, c)?;
    let violations = c
        .conflicts(g)
        .into_iter()
        .map(|(u, v)| Violation::MonochromaticEdge { u, v, color: c.color(u) })
        .collect();
    Ok(Verdict::from_violations(violations, None))
}

fn grundy_violations(g: &Graph, c: &Coloring) -> Vec<Violation> {
    let colors = c.colors();
    let mut nc = NeighborColors::new(c.k());
    let mut out = Vec::new();
    for v in g.vertices() {
        let color = colors[v];
        if color == 1 {
            continue;
        }
        nc.load(g, colors, v);
        out.extend((1..color).filter(|&i| !nc.has(i)).map(|missing| Violation::MissingLowerColor {
            vertex: v,
            color,
            missing,
        }));
    }
    out
}

/// Every vertex of color `j` must see every color `i < j`.
pub fn check_grundy(g: &Graph, c: &Coloring) -> Result<Verdict> {
    require_proper(g, c)?;
    Ok(Verdict::from_violations(grundy_violations(g, c), None))
}

/// Per-vertex color-dominating flags.
pub fn dominating_flags(g: &Graph, c: &Coloring) -> Vec<bool> {
    let colors = c.colors();
    let mut nc = NeighborColors::new(c.k());
    g.vertices()
        .map(|v| {
            nc.load(g, colors, v);
            (1..=c.k()).all(|i| i == colors[v] || nc.has(i))
        })
        .collect()
}

/// Vertices of class `class` whose neighborhoods carry every other color.
pub fn dominating_vertices(g: &Graph, c: &Coloring, class: u32) -> Result<Vec<usize>> {
    total(g, c)?;
    if class == 0 || class > c.k() {
        return Err(Error::OutOfRange {
            value: class as usize,
            msg: format!("class index must lie in 1..={}", c.k()),
        });
    }
    let flags = dominating_flags(g, c);
    Ok(g.vertices().filter(|&v| c.color(v) == class && flags[v]).collect())
}

fn first_dominating_per_class(c: &Coloring, flags: &[bool]) -> Vec<Option<usize>> {
    let mut first = vec![None; c.k() as usize];
    for (v, &f) in flags.iter().enumerate() {
        let slot = &mut first[c.color(v) as usize - 1];
        if f && slot.is_none() {
            *slot = Some(v);
        }
    }
    first
}

/// Every class contains a color-dominating vertex.
pub fn check_cd(g: &Graph, c: &Coloring) -> Result<Verdict> {
    require_proper(g, c)?;
    let flags = dominating_flags(g, c);
    let first = first_dominating_per_class(c, &flags);
    let violations: Vec<_> = first
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_none())
        .map(|(i, _)| Violation::NoDominatingVertex { class: i as u32 + 1 })
        .collect();
    let witness = Witness::DominatingVertices { vertices: first.into_iter().flatten().collect() };
    Ok(Verdict::from_violations(violations, Some(witness)))
}

/// Star leaves `u_1..u_{t-1}` for a top-colored `v`, if `v` is nice.
fn star_around(g: &Graph, c: &Coloring, flags: &[bool], v: usize) -> Option<Vec<usize>> {
    let t = c.k();
    if c.color(v) != t {
        return None;
    }
    let mut star = vec![usize::MAX; t as usize];
    star[t as usize - 1] = v;
    for &w in g.neighbors(v) {
        let slot = &mut star[c.color(w) as usize - 1];
        if flags[w] && *slot == usize::MAX {
            *slot = w;
        }
    }
    star.iter().all(|&u| u != usize::MAX).then_some(star)
}

/// `v` has the top color and is adjacent to dominating vertices of all the
/// other colors.
pub fn is_nice_vertex(g: &Graph, c: &Coloring, v: usize) -> bool {
    if c.len() != g.n() || v >= g.n() {
        return false;
    }
    let flags = dominating_flags(g, c);
    star_around(g, c, &flags, v).is_some()
}

/// A dominating star for `c`, if one exists. Exact: every candidate centre
/// in the top class is tried.
pub fn find_star(g: &Graph, c: &Coloring) -> Option<Vec<usize>> {
    if c.is_empty() {
        return None;
    }
    let flags = dominating_flags(g, c);
    g.vertices().filter(|&v| c.color(v) == c.k() && flags[v]).find_map(|v| star_around(g, c, &flags, v))
}

/// Checks a claimed star `u_1..u_k` against the definition.
pub fn check_star(g: &Graph, c: &Coloring, star: &[usize]) -> Result<(), String> {
    let k = c.k() as usize;
    if star.len() != k {
        return Err(format!("expected {k} vertices, got {}", star.len()));
    }
    let flags = dominating_flags(g, c);
    for (j, &u) in star.iter().enumerate() {
        if u >= g.n() {
            return Err(format!("vertex {u} out of range"));
        }
        if c.color(u) as usize != j + 1 {
            return Err(format!("u_{} = {u} has color {}", j + 1, c.color(u)));
        }
        if !flags[u] {
            return Err(format!("u_{} = {u} is not color-dominating", j + 1));
        }
        if j + 1 < k && !g.has_edge(u, star[k - 1]) {
            return Err(format!("u_{} = {u} is not adjacent to u_{k}", j + 1));
        }
    }
    Ok(())
}

/// z-coloring: proper, Grundy, color-dominating and carrying a dominating
/// star. The witness on success is a star found by exhaustive search over
/// the top class.
pub fn check_z(g: &Graph, c: &Coloring) -> Verdict {
    if c.len() != g.n() {
        return Verdict::fail(Violation::NotTotal { got: c.len(), n: g.n() });
    }
    if g.n() == 0 {
        return Verdict::from_violations(vec![], Some(Witness::Star { vertices: vec![] }));
    }
    let mut violations: Vec<_> = c
        .conflicts(g)
        .into_iter()
        .map(|(u, v)| Violation::MonochromaticEdge { u, v, color: c.color(u) })
        .collect();
    if !violations.is_empty() {
        return Verdict::from_violations(violations, None);
    }
    violations.extend(grundy_violations(g, c));
    let flags = dominating_flags(g, c);
    for (i, v) in first_dominating_per_class(c, &flags).into_iter().enumerate() {
        if v.is_none() {
            violations.push(Violation::NoDominatingVertex { class: i as u32 + 1 });
        }
    }
    let star =
        g.vertices().filter(|&v| c.color(v) == c.k() && flags[v]).find_map(|v| star_around(g, c, &flags, v));
    if star.is_none() {
        violations.push(Violation::NoDominatingStar { top: c.k() });
    }
    Verdict::from_violations(violations, star.map(|vertices| Witness::Star { vertices }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[u32]) -> Coloring {
        Coloring::new(v.to_vec()).unwrap()
    }

    #[test]
    fn proper_examples() {
        let k2 = Graph::complete(2);
        assert!(check_proper(&k2, &col(&[1, 2])).unwrap().pass);
        let bad = check_proper(&k2, &col(&[1, 1])).unwrap();
        assert!(!bad.pass);
        assert_eq!(bad.violations, vec![Violation::MonochromaticEdge { u: 0, v: 1, color: 1 }]);
        assert!(check_proper(&Graph::cycle(6), &col(&[3, 2, 1, 3, 2, 1])).unwrap().pass);
        assert!(check_proper(&k2, &col(&[1])).is_err());
    }

    #[test]
    fn grundy_examples() {
        let p4 = Graph::path(4);
        assert!(check_grundy(&p4, &col(&[1, 2, 3, 1])).unwrap().pass);
        let v = check_grundy(&p4, &col(&[1, 2, 1, 3])).unwrap();
        assert!(!v.pass);
        assert_eq!(v.violations, vec![Violation::MissingLowerColor { vertex: 3, color: 3, missing: 2 }]);
        assert!(check_grundy(&Graph::empty(4), &col(&[1, 1, 1, 1])).unwrap().pass);
        assert!(check_grundy(&Graph::complete(2), &col(&[1, 1])).is_err());
    }

    #[test]
    fn dominating_examples() {
        let c6 = Graph::cycle(6);
        let c = col(&[3, 2, 1, 3, 2, 1]);
        for class in 1..=3 {
            assert_eq!(dominating_vertices(&c6, &c, class).unwrap(), c.class(class));
        }
        let k5 = Graph::complete(5);
        let ck = Coloring::all_distinct(5);
        assert_eq!(dominating_vertices(&k5, &ck, 4).unwrap(), vec![3]);
        let p5 = Graph::path(5);
        assert_eq!(dominating_vertices(&p5, &col(&[1, 2, 3, 1, 2]), 3).unwrap(), vec![2]);
        assert!(dominating_vertices(&p5, &col(&[1, 2, 3, 1, 2]), 4).is_err());
    }

    #[test]
    fn cd_examples() {
        assert!(check_cd(&Graph::cycle(6), &col(&[3, 2, 1, 3, 2, 1])).unwrap().pass);
        assert!(check_cd(&Graph::empty(1), &col(&[1])).unwrap().pass);
    }

    #[test]
    fn nice_examples() {
        assert!(is_nice_vertex(&Graph::complete(3), &col(&[1, 2, 3]), 2));
        assert!(is_nice_vertex(&Graph::path(5), &col(&[1, 2, 3, 1, 2]), 2));
        assert!(!is_nice_vertex(&Graph::cycle(6), &col(&[3, 2, 1, 3, 2, 1]), 2));
    }

    #[test]
    fn z_examples() {
        let v = check_z(&Graph::path(5), &col(&[1, 2, 3, 1, 2]));
        assert!(v.pass);
        assert_eq!(v.witness, Some(Witness::Star { vertices: vec![3, 1, 2] }));
        assert!(check_z(&Graph::cycle(6), &col(&[3, 2, 1, 3, 2, 1])).pass);
        let p4 = check_z(&Graph::path(4), &col(&[1, 2, 3, 1]));
        assert!(!p4.pass);
        assert!(p4.violations.contains(&Violation::NoDominatingVertex { class: 1 }));
        assert!(p4.violations.contains(&Violation::NoDominatingStar { top: 3 }));
    }

    #[test]
    fn complete_graph_is_z() {
        for n in 1..8 {
            let v = check_z(&Graph::complete(n), &Coloring::all_distinct(n));
            assert!(v.pass, "K_{n}");
        }
    }

    #[test]
    fn star_validation() {
        let p5 = Graph::path(5);
        let c = col(&[1, 2, 3, 1, 2]);
        assert!(check_star(&p5, &c, &[3, 1, 2]).is_ok());
        assert!(check_star(&p5, &c, &[0, 1, 2]).is_err());
    }
}
