//! Exact chromatic number χ, Grundy number Γ, b-chromatic number b and
//! z-number by backtracking, for small graphs.
//!
//! Colors are assigned vertex by vertex (highest degree first, then the
//! vertex with the most colored neighbors) with forward checks:
//!
//! * properness;
//! * Grundy feasibility: a colored vertex never misses more smaller colors
//!   than it has uncolored neighbors;
//! * dominating feasibility: every class still has a vertex that can end
//!   up seeing all other colors;
//! * for z, some potential top-color vertex still has potential dominating
//!   neighbors of every other color.
//!
//! Complete candidates are re-checked with the predicates in [`crate::verify`].
//! The maximizing oracles probe `k = Δ+1, Δ, ...` and stop at the first `k`
//! that admits a coloring with exactly `k` classes.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify;

pub const DEFAULT_LIMIT: usize = 12;
pub const DEFAULT_Z_LIMIT: usize = 14;
/// Bitmask representation bound.
pub const HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: u32,
    pub witness: Coloring,
    /// Search nodes (partial colorings) visited over all probes.
    pub explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Chi,
    Gamma,
    B,
    Z,
}

impl Param {
    pub fn default_limit(self) -> usize {
        match self {
            Param::Z => DEFAULT_Z_LIMIT,
            _ => DEFAULT_LIMIT,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Chi => "chi",
            Param::Gamma => "gamma",
            Param::B => "b",
            Param::Z => "z",
        }
    }
}

impl std::str::FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi" => Ok(Param::Chi),
            "gamma" => Ok(Param::Gamma),
            "b" => Ok(Param::B),
            "z" => Ok(Param::Z),
            other => Err(Error::InvalidArgument(format!("unknown parameter `{other}`"))),
        }
    }
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(HARD_LIMIT);
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    Ok(())
}

/// Vertex order for the search.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut seen = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (seen[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex left");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            seen[w] += 1;
        }
    }
    order
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Proper,
    Grundy,
    Dominating,
    Z,
}

impl Mode {
    fn grundy(self) -> bool {
        matches!(self, Mode::Grundy | Mode::Z)
    }

    fn dominating(self) -> bool {
        matches!(self, Mode::Dominating | Mode::Z)
    }

    /// Colors may be permuted freely without changing the property.
    fn symmetric(self) -> bool {
        matches!(self, Mode::Proper | Mode::Dominating)
    }
}

struct Search<'g> {
    g: &'g Graph,
    mode: Mode,
    k: u32,
    /// Require every one of the `k` colors to be used.
    exact: bool,
    order: Vec<usize>,
    col: Vec<u32>,
    cnt: Vec<Vec<u16>>,
    mask: Vec<u64>,
    free_nbrs: Vec<usize>,
    class_size: Vec<usize>,
    explored: u64,
}

#[inline]
fn below(c: u32) -> u64 {
    (1u64 << c) - 2
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, mode: Mode, k: u32, exact: bool) -> Self {
        let n = g.n();
        Search {
            g,
            mode,
            k,
            exact,
            order: search_order(g),
            col: vec![0; n],
            cnt: vec![vec![0; k as usize + 1]; n],
            mask: vec![0; n],
            free_nbrs: (0..n).map(|v| g.degree(v)).collect(),
            class_size: vec![0; k as usize + 1],
            explored: 0,
        }
    }

    fn all(&self) -> u64 {
        below(self.k + 1)
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.col[v] = c;
        self.class_size[c as usize] += 1;
        for &w in self.g.neighbors(v) {
            self.free_nbrs[w] -= 1;
            self.cnt[w][c as usize] += 1;
            self.mask[w] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.col[v];
        self.col[v] = 0;
        self.class_size[c as usize] -= 1;
        for &w in self.g.neighbors(v) {
            self.free_nbrs[w] += 1;
            self.cnt[w][c as usize] -= 1;
            if self.cnt[w][c as usize] == 0 {
                self.mask[w] &= !(1 << c);
            }
        }
    }

    fn grundy_ok(&self, v: usize) -> bool {
        let c = self.col[v];
        c == 0 || (below(c) & !self.mask[v]).count_ones() as usize <= self.free_nbrs[v]
    }

    /// Colors that `v` could still dominate as.
    fn potential(&self, v: usize) -> u64 {
        let all = self.all();
        let c = self.col[v];
        if c != 0 {
            let missing = (all & !(1 << c) & !self.mask[v]).count_ones() as usize;
            if missing <= self.free_nbrs[v] {
                1 << c
            } else {
                0
            }
        } else {
            let seen = (self.mask[v] & all).count_ones() as usize;
            if (self.k as usize - 1).saturating_sub(seen) <= self.free_nbrs[v] {
                all & !self.mask[v]
            } else {
                0
            }
        }
    }

    fn global_ok(&self, depth: usize) -> bool {
        if self.exact {
            let unused = (1..=self.k).filter(|&c| self.class_size[c as usize] == 0).count();
            if unused > self.g.n() - depth {
                return false;
            }
        }
        if !self.mode.dominating() {
            return true;
        }
        let all = self.all();
        let pot: Vec<u64> = self.g.vertices().map(|v| self.potential(v)).collect();
        let covered = pot.iter().fold(0, |a, p| a | p);
        if covered & all != all {
            return false;
        }
        if self.mode == Mode::Z {
            let top = 1u64 << self.k;
            let need = below(self.k);
            let centre = self.g.vertices().any(|x| {
                pot[x] & top != 0 && self.g.neighbors(x).iter().fold(0, |a, &w| a | pot[w]) & need == need
            });
            if !centre {
                return false;
            }
        }
        true
    }

    fn leaf_ok(&self) -> bool {
        if self.exact && (1..=self.k).any(|c| self.class_size[c as usize] == 0) {
            return false;
        }
        let c = Coloring::normalized(&self.col);
        match self.mode {
            Mode::Proper => true,
            Mode::Grundy => verify::check_grundy(self.g, &c).is_ok_and(|v| v.pass),
            Mode::Dominating => verify::check_cd(self.g, &c).is_ok_and(|v| v.pass),
            Mode::Z => verify::check_z(self.g, &c).pass,
        }
    }

    fn run(&mut self, depth: usize, max_used: u32) -> bool {
        self.explored += 1;
        if depth == self.order.len() {
            return self.leaf_ok();
        }
        let v = self.order[depth];
        let cap = if self.mode.symmetric() { (max_used + 1).min(self.k) } else { self.k };
        let mut cands: Vec<u32> = (1..=cap).filter(|&c| self.mask[v] & (1 << c) == 0).collect();
        if self.mode.grundy() {
            let deg = self.g.degree(v) as u32;
            cands.retain(|&c| c <= deg + 1);
        }
        if self.mode != Mode::Proper {
            cands.reverse();
        }
        for c in cands {
            self.assign(v, c);
            let mut ok = true;
            if self.mode.grundy() {
                ok = self.grundy_ok(v) && self.g.neighbors(v).iter().all(|&w| self.grundy_ok(w));
            }
            if ok && self.global_ok(depth + 1) && self.run(depth + 1, max_used.max(c)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

fn probe(g: &Graph, mode: Mode, k: u32, explored: &mut u64) -> Option<Coloring> {
    if g.n() == 0 || k == 0 {
        return None;
    }
    let mut s = Search::new(g, mode, k, mode != Mode::Proper);
    let found = s.run(0, 0);
    *explored += s.explored;
    found.then(|| Coloring::new(s.col).expect("search colors are contiguous"))
}

fn empty_result() -> OracleResult {
    OracleResult { value: 0, witness: Coloring::new(vec![]).expect("empty coloring"), explored: 0 }
}

/// Chromatic number: smallest `k` with a proper `k`-coloring.
pub fn exact_chi(g: &Graph, limit: usize) -> Result<OracleResult> {
    check_limit(g, limit)?;
    if g.n() == 0 {
        return Ok(empty_result());
    }
    let mut explored = 0;
    for k in 1..=g.max_degree() as u32 + 1 {
        if let Some(c) = probe(g, Mode::Proper, k, &mut explored) {
            let witness = Coloring::normalized(c.colors());
            return Ok(OracleResult { value: witness.k(), witness, explored });
        }
    }
    unreachable!("greedy bound: Δ+1 colors always suffice")
}

fn maximize(g: &Graph, mode: Mode, limit: usize, floor: u32) -> Result<Option<OracleResult>> {
    check_limit(g, limit)?;
    if g.n() == 0 {
        return Ok(Some(empty_result()));
    }
    let mut explored = 0;
    for k in (floor.max(1)..=g.max_degree() as u32 + 1).rev() {
        if let Some(witness) = probe(g, mode, k, &mut explored) {
            return Ok(Some(OracleResult { value: k, witness, explored }));
        }
    }
    Ok(None)
}

/// Grundy number: largest `k` over Grundy (first-fit) colorings.
pub fn exact_gamma(g: &Graph, limit: usize) -> Result<OracleResult> {
    Ok(maximize(g, Mode::Grundy, limit, 1)?.expect("one color is always Grundy"))
}

/// b-chromatic number: largest `k` over colorings in which every class has
/// a color-dominating vertex.
pub fn exact_b(g: &Graph, limit: usize) -> Result<OracleResult> {
    Ok(maximize(g, Mode::Dominating, limit, 1)?.expect("χ colors always admit a b-coloring"))
}

/// z-number: largest `k` over z-colorings.
pub fn exact_z(g: &Graph, limit: usize) -> Result<OracleResult> {
    Ok(maximize(g, Mode::Z, limit, 1)?.expect("a z-coloring exists for every graph"))
}

pub fn exact(g: &Graph, param: Param, limit: usize) -> Result<OracleResult> {
    match param {
        Param::Chi => exact_chi(g, limit),
        Param::Gamma => exact_gamma(g, limit),
        Param::B => exact_b(g, limit),
        Param::Z => exact_z(g, limit),
    }
}

/// A z-coloring with exactly `k` colors, if one exists.
pub fn find_z_coloring(g: &Graph, k: u32, limit: usize) -> Result<Option<Coloring>> {
    check_limit(g, limit)?;
    if k as usize > g.max_degree() + 1 {
        return Ok(None);
    }
    Ok(probe(g, Mode::Z, k, &mut 0))
}

/// Whether some z-coloring uses at least `t` colors.
pub fn z_at_least(g: &Graph, t: u32, limit: usize) -> Result<bool> {
    Ok(maximize(g, Mode::Z, limit, t)?.is_some_and(|r| r.value >= t))
}
