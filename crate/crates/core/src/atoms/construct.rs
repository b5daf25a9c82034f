//! Phase I (star completion), the Grundify operation and the catalog
//! generator built from them.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Atom, AtomCatalog, CatalogStats, Filters};
use crate::canon::{canonical_form, Certificate};
use crate::coloring::{ColoredGraph, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::verify;

/// Largest `t` generated without the override flag.
pub const MAX_T: usize = 4;

/// Phase I choice for color `j`: the indices `p < j` whose color-`j`
/// neighbor is `u_j` itself, and the blocks of indices sharing a fresh
/// color-`j` neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarChoice {
    pub j: u32,
    pub to_star: Vec<u32>,
    pub blocks: Vec<Vec<u32>>,
}

/// Grundify choice for one color `i < k`: `linked` pairs `(u, f(u))` join
/// class-`k` vertices to existing color-`i` vertices, and each block of
/// class-`k` vertices shares one fresh color-`i` neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorChoice {
    pub i: u32,
    pub linked: Vec<[usize; 2]>,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrundifyStep {
    pub k: u32,
    pub choices: Vec<ColorChoice>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub phase1: Vec<StarChoice>,
    pub phase2: Vec<GrundifyStep>,
}

/// A colored graph under construction; vertices are only ever appended.
#[derive(Debug, Clone)]
struct Work {
    edges: Vec<(usize, usize)>,
    colors: Vec<u32>,
    provenance: Provenance,
}

impl Work {
    fn graph(&self) -> Graph {
        Graph::from_edges(self.colors.len(), self.edges.iter().copied()).expect("valid edges")
    }

    fn certificate(&self) -> Certificate {
        canonical_form(&self.graph(), &self.colors)
    }
}

/// All set partitions of `items`, blocks in order of first element.
pub fn set_partitions<T: Copy>(items: &[T]) -> Vec<Vec<Vec<T>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<T>> = Vec::new();
    fn rec<T: Copy>(items: &[T], blocks: &mut Vec<Vec<T>>, out: &mut Vec<Vec<Vec<T>>>) {
        let Some((&first, rest)) = items.split_first() else {
            out.push(blocks.clone());
            return;
        };
        for b in 0..blocks.len() {
            blocks[b].push(first);
            rec(rest, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![first]);
        rec(rest, blocks, out);
        blocks.pop();
    }
    rec(items, &mut blocks, &mut out);
    out
}

fn subsets<T: Copy>(items: &[T]) -> impl Iterator<Item = (Vec<T>, Vec<T>)> + '_ {
    (0u64..1 << items.len()).map(move |mask| {
        let (mut inside, mut outside) = (Vec::new(), Vec::new());
        for (b, &x) in items.iter().enumerate() {
            if mask >> b & 1 == 1 {
                inside.push(x);
            } else {
                outside.push(x);
            }
        }
        (inside, outside)
    })
}

fn check_t(t: usize, allow_large: bool) -> Result<()> {
    if t > MAX_T && !allow_large {
        return Err(Error::OutOfRange {
            value: t,
            msg: format!("atom generation is capped at t = {MAX_T} without the override"),
        });
    }
    Ok(())
}

/// Star layout used by Phase I on `S_{1,s}`: vertex `p - 1` is `u_p`
/// (color `p`) for `p = 1..=s`, vertex `s` is the centre (color `s + 1`).
fn star_work(s: usize) -> Work {
    Work {
        edges: (0..s).map(|p| (p, s)).collect(),
        colors: (1..=s as u32 + 1).collect(),
        provenance: Provenance::default(),
    }
}

/// Condition ♣ on the star layout: the star is present with its colors and
/// every `u_p` has a neighbor of each color `p+1..=s`.
pub fn satisfies_club(g: &Graph, colors: &[u32], s: usize) -> bool {
    if g.n() <= s || colors[s] != s as u32 + 1 {
        return false;
    }
    (0..s).all(|p| {
        colors[p] == p as u32 + 1
            && g.has_edge(p, s)
            && (p as u32 + 2..=s as u32).all(|l| g.neighbors(p).iter().any(|&w| colors[w] == l))
    })
}

/// Phase I on the star `S_{1,s}` (so `s + 1` colors). For every color
/// `j = 2..=s` the leaves `u_1..u_{j-1}` each receive one color-`j`
/// neighbor: either `u_j` or one of `m_j` fresh vertices, every fresh vertex
/// being used. Outputs are ♣-edge-minimal and deduplicated, in
/// enumeration order.
pub fn phase1_generate(s: usize) -> Result<Vec<ColoredGraph>> {
    Ok(phase1_work(s, false)?
        .into_iter()
        .map(|w| {
            let c = Coloring::new(w.colors.clone()).expect("contiguous");
            ColoredGraph::plain(w.graph(), c).expect("Phase I colorings are proper")
        })
        .collect())
}

fn phase1_work(s: usize, allow_large: bool) -> Result<Vec<Work>> {
    check_t(s, allow_large)?;
    let mut family = vec![star_work(s)];
    for j in 2..=s as u32 {
        let lower: Vec<u32> = (1..j).collect();
        let mut options = Vec::new();
        for (to_star, rest) in subsets(&lower) {
            for blocks in set_partitions(&rest) {
                options.push(StarChoice { j, to_star: to_star.clone(), blocks });
            }
        }
        let mut next = Vec::with_capacity(family.len() * options.len());
        for w in &family {
            for opt in &options {
                let mut w = w.clone();
                let uj = j as usize - 1;
                for &p in &opt.to_star {
                    w.edges.push((p as usize - 1, uj));
                }
                for block in &opt.blocks {
                    let fresh = w.colors.len();
                    w.colors.push(j);
                    for &p in block {
                        w.edges.push((p as usize - 1, fresh));
                    }
                }
                w.provenance.phase1.push(opt.clone());
                next.push(w);
            }
        }
        family = next;
    }
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for w in family {
        let g = w.graph();
        assert!(satisfies_club(&g, &w.colors, s), "Phase I output violates ♣");
        let star_edge = |u: usize, v: usize| u == s || v == s;
        let minimal = g
            .edges()
            .filter(|&(u, v)| !star_edge(u, v))
            .all(|(u, v)| !satisfies_club(&g.without_edge(u, v), &w.colors, s));
        assert!(minimal, "Phase I output is not ♣-edge-minimal");
        if seen.insert(w.certificate()) {
            out.push(w);
        }
    }
    Ok(out)
}

fn to_colored(w: &Work, s: usize) -> ColoredGraph {
    let star: Vec<usize> = (0..=s).collect();
    ColoredGraph::new(w.graph(), Coloring::new(w.colors.clone()).expect("contiguous"), Some(star))
        .expect("star is dominating by construction")
}

fn grundy_class(g: &Graph, colors: &[u32], k: u32) -> bool {
    g.vertices()
        .filter(|&v| colors[v] == k)
        .all(|v| (1..k).all(|i| g.neighbors(v).iter().any(|&w| colors[w] == i)))
}

/// Options for one color `i`: subsets `S` of the class-`k` vertices lacking
/// color `i`, maps `f: S -> C_i`, and partitions of the remainder into
/// fresh-vertex blocks.
fn color_options(g: &Graph, colors: &[u32], k: u32, i: u32, triangle_free: bool) -> Vec<ColorChoice> {
    let lacking: Vec<usize> =
        g.vertices().filter(|&v| colors[v] == k && !g.neighbors(v).iter().any(|&w| colors[w] == i)).collect();
    let targets: Vec<usize> = g.vertices().filter(|&v| colors[v] == i).collect();
    let mut out = Vec::new();
    for (s, rest) in subsets(&lacking) {
        let mut maps: Vec<Vec<[usize; 2]>> = vec![Vec::new()];
        for &u in &s {
            let mut grown = Vec::new();
            for m in &maps {
                for &x in &targets {
                    if triangle_free && g.neighbors(u).iter().any(|&y| g.has_edge(x, y)) {
                        continue;
                    }
                    let mut m = m.clone();
                    m.push([u, x]);
                    grown.push(m);
                }
            }
            maps = grown;
        }
        let partitions = set_partitions(&rest);
        for linked in &maps {
            for blocks in &partitions {
                out.push(ColorChoice { i, linked: linked.clone(), blocks: blocks.clone() });
            }
        }
    }
    out
}

fn apply(w: &Work, k: u32, choices: &[&ColorChoice]) -> Work {
    let mut w = w.clone();
    for c in choices {
        for &[u, x] in &c.linked {
            w.edges.push((u, x));
        }
        for block in &c.blocks {
            let fresh = w.colors.len();
            w.colors.push(c.i);
            for &u in block {
                w.edges.push((u, fresh));
            }
        }
    }
    w.provenance.phase2.push(GrundifyStep { k, choices: choices.iter().map(|c| (*c).clone()).collect() });
    w
}

fn grundify_work(w: &Work, k: u32, triangle_free: bool) -> Vec<Work> {
    let g = w.graph();
    if grundy_class(&g, &w.colors, k) {
        return vec![w.clone()];
    }
    let per_color: Vec<Vec<ColorChoice>> =
        (1..k).map(|i| color_options(&g, &w.colors, k, i, triangle_free)).collect();
    let mut out = Vec::new();
    let mut pick: Vec<&ColorChoice> = Vec::with_capacity(per_color.len());
    fn rec<'a>(
        w: &Work,
        k: u32,
        per_color: &'a [Vec<ColorChoice>],
        pick: &mut Vec<&'a ColorChoice>,
        triangle_free: bool,
        out: &mut Vec<Work>,
    ) {
        if pick.len() == per_color.len() {
            let next = apply(w, k, pick);
            if !triangle_free || !next.graph().has_triangle() {
                out.push(next);
            }
            return;
        }
        for c in &per_color[pick.len()] {
            pick.push(c);
            rec(w, k, per_color, pick, triangle_free, out);
            pick.pop();
        }
    }
    rec(w, k, &per_color, &mut pick, triangle_free, &mut out);
    out
}

/// Grundify class `k` of `cg`: every way of giving each class-`k` vertex its
/// missing smaller colors, by an edge to an existing vertex of that color
/// or to a fresh one. Outputs are deduplicated under colored isomorphism; a
/// class that is already Grundy is returned unchanged.
pub fn grundify(cg: &ColoredGraph, k: u32) -> Result<Vec<ColoredGraph>> {
    if k < 2 || k >= cg.coloring.k() {
        return Err(Error::OutOfRange {
            value: k as usize,
            msg: format!("class index must lie in 2..{}", cg.coloring.k()),
        });
    }
    let w = Work {
        edges: cg.graph.edges().collect(),
        colors: cg.coloring.colors().to_vec(),
        provenance: Provenance::default(),
    };
    let outs = dedupe(grundify_work(&w, k, false));
    Ok(outs
        .into_iter()
        .map(|o| {
            let g = o.graph();
            let c = Coloring::new(o.colors).expect("contiguous");
            ColoredGraph::new(g, c, cg.dominating_star.clone()).expect("star survives edge additions")
        })
        .collect())
}

fn dedupe(items: Vec<Work>) -> Vec<Work> {
    let certs: Vec<Certificate> = items.par_iter().map(Work::certificate).collect();
    let mut seen = BTreeMap::new();
    for (w, c) in items.into_iter().zip(certs) {
        seen.entry(c).or_insert(w);
    }
    seen.into_values().collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenerateOptions {
    pub triangle_free: bool,
    /// Lifts the size cap and the triangle-free requirement at `t = 4`.
    pub allow_large: bool,
}

/// The z-atom catalog `D_t`: Phase I on `S_{1,t-1}`, Grundify for
/// `k = t-1` down to 2, then the filters (canonic coloring is a z-coloring
/// with `t` colors, optional triangle-freeness, edge-minimality with
/// respect to z), deduplicated and sorted by certificate.
pub fn generate_atoms(t: usize, opts: GenerateOptions) -> Result<AtomCatalog> {
    if t == 0 {
        return Err(Error::OutOfRange { value: 0, msg: "t must be at least 1".into() });
    }
    check_t(t, opts.allow_large)?;
    if t == MAX_T && !opts.triangle_free && !opts.allow_large {
        return Err(Error::InvalidArgument(format!(
            "the full catalog at t = {MAX_T} needs the override; use the triangle-free filter"
        )));
    }
    let s = t - 1;
    let tf = opts.triangle_free;
    let mut stats = CatalogStats::default();
    let phase1 = phase1_work(s, opts.allow_large)?;
    stats.phase1 = phase1.len();
    let mut family: Vec<Work> = phase1.into_iter().filter(|w| !tf || !w.graph().has_triangle()).collect();
    for k in (2..s as u32 + 1).rev() {
        let grown: Vec<Work> = family.par_iter().flat_map_iter(|w| grundify_work(w, k, tf)).collect();
        let produced = grown.len();
        family = dedupe(grown);
        stats.removed_duplicates += produced - family.len();
    }
    stats.candidates = family.len();

    let star: Vec<usize> = (0..=s).collect();
    let t32 = t as u32;
    let verdicts: Vec<(bool, bool, bool)> = family
        .par_iter()
        .map(|w| {
            let g = w.graph();
            let c = Coloring::new(w.colors.clone()).expect("contiguous");
            let is_z =
                c.k() == t32 && verify::check_z(&g, &c).pass && verify::check_star(&g, &c, &star).is_ok();
            let tri_ok = !tf || !g.has_triangle();
            let minimal = is_z && tri_ok && edge_minimal(&g, t32);
            (is_z, tri_ok, minimal)
        })
        .collect();
    let mut atoms = Vec::new();
    for (w, (is_z, tri_ok, minimal)) in family.into_iter().zip(verdicts) {
        if !is_z {
            stats.removed_not_z += 1;
        } else if !tri_ok {
            stats.removed_triangle += 1;
        } else if !minimal {
            stats.removed_not_minimal += 1;
        } else {
            atoms.push(w);
        }
    }
    let before = atoms.len();
    let atoms = dedupe(atoms);
    stats.removed_duplicates += before - atoms.len();
    let atoms = atoms.into_iter().map(|w| Atom { cg: to_colored(&w, s), provenance: w.provenance }).collect();
    Ok(AtomCatalog { t, atoms, filters: Filters { triangle_free: tf }, stats })
}

/// No edge can be dropped while keeping a z-coloring with `t` or more
/// colors.
pub fn edge_minimal(g: &Graph, t: u32) -> bool {
    g.edges().all(|(u, v)| {
        !oracle::z_at_least(&g.without_edge(u, v), t, oracle::HARD_LIMIT)
            .expect("atoms stay within the oracle's hard limit")
    })
}
