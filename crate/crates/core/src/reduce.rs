//! Color-reduction heuristics: greedy coloring, the Grundy reduction, the
//! Grundy color-dominating transform, the nice-vertex z-transform and the
//! heuristics composed from them.
//!
//! All procedures work on a plain color vector and renumber classes as soon
//! as one empties, so class indices always stay contiguous.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{self, NeighborColors};

/// A single recoloring step: `vertex` moved from class `from` to class `to`
/// (indices as they were at the time of the move).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub vertex: usize,
    pub from: u32,
    pub to: u32,
}

/// Moves and deleted class indices, both numbered as they were at the time
/// of the event.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub moves: Vec<Move>,
    pub class_deletions: Vec<u32>,
    pub iterations: usize,
}

impl ReductionTrace {
    fn absorb(&mut self, other: ReductionTrace) {
        self.moves.extend(other.moves);
        self.class_deletions.extend(other.class_deletions);
    }
}

/// Working state shared by the reductions: a color vector plus the class
/// count, with class deletion that shifts higher classes down.
struct Classes<'g> {
    g: &'g Graph,
    col: Vec<u32>,
    k: u32,
    trace: ReductionTrace,
}

impl<'g> Classes<'g> {
    fn new(g: &'g Graph, c: &Coloring) -> Self {
        Classes { g, col: c.colors().to_vec(), k: c.k(), trace: ReductionTrace::default() }
    }

    fn members(&self, i: u32) -> Vec<usize> {
        self.g.vertices().filter(|&v| self.col[v] == i).collect()
    }

    fn recolor(&mut self, v: usize, to: u32) {
        let from = self.col[v];
        if from != to {
            self.col[v] = to;
            self.trace.moves.push(Move { vertex: v, from, to });
        }
    }

    fn is_empty_class(&self, i: u32) -> bool {
        !self.col.contains(&i)
    }

    fn delete_class(&mut self, i: u32) {
        for c in self.col.iter_mut() {
            debug_assert_ne!(*c, i);
            if *c > i {
                *c -= 1;
            }
        }
        self.k -= 1;
        self.trace.class_deletions.push(i);
    }

    fn dominating(&self, nc: &mut NeighborColors, v: usize) -> bool {
        nc.load(self.g, &self.col, v);
        (1..=self.k).all(|i| i == self.col[v] || nc.has(i))
    }

    fn finish(self) -> (Coloring, ReductionTrace) {
        let coloring = Coloring::new(self.col).expect("reductions keep classes contiguous");
        (coloring, self.trace)
    }
}

/// Greedy (first-fit) coloring along `order`: each vertex takes the smallest
/// color absent from its already-colored neighbors.
pub fn greedy(g: &Graph, order: &[usize]) -> Result<Coloring> {
    check_permutation(g, order)?;
    let mut col = vec![0u32; g.n()];
    let mut nc = NeighborColors::new(g.max_degree() as u32 + 1);
    for &v in order {
        nc.load(g, &col, v);
        col[v] = (1..).find(|&c| !nc.has(c)).expect("some color is free");
    }
    Ok(Coloring::new(col).expect("greedy colors are contiguous"))
}

fn check_permutation(g: &Graph, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    if order.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "vertex order has {} entries, graph has {} vertices",
            order.len(),
            g.n()
        )));
    }
    for &v in order {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidArgument(format!("vertex order is not a permutation ({v})")));
        }
    }
    Ok(())
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<()> {
    c.check_total(g)?;
    match c.conflicts(g).first() {
        Some(&(u, v)) => Err(Error::Improper(u, v)),
        None => Ok(()),
    }
}

fn require_grundy(g: &Graph, c: &Coloring) -> Result<()> {
    let v = verify::check_grundy(g, c)?;
    match v.violations.first() {
        Some(verify::Violation::MissingLowerColor { vertex, missing, .. }) => {
            Err(Error::NotGrundy { vertex: *vertex, missing: *missing })
        }
        _ => Ok(()),
    }
}

/// Grundy-type reduction. Classes are scanned upwards from 2; a vertex that
/// misses some lower color moves to the smallest missing one. Emptied
/// classes are deleted on the spot and the scan resumes at the same index.
///
/// Each vertex moves at most once: after moving to class `j` it sees every
/// color below `j`, and those lower classes are never touched again.
pub fn grundy_reduce(g: &Graph, c: &Coloring) -> Result<(Coloring, ReductionTrace)> {
    require_proper(g, c)?;
    let mut st = Classes::new(g, c);
    let mut nc = NeighborColors::new(st.k);
    let mut i = 2;
    while i <= st.k {
        for v in st.members(i) {
            nc.load(g, &st.col, v);
            if let Some(j) = nc.first_missing_below(i) {
                st.recolor(v, j);
            }
        }
        if st.is_empty_class(i) {
            st.delete_class(i);
        } else {
            i += 1;
        }
    }
    Ok(st.finish())
}

/// Turns a Grundy coloring into one that is both Grundy and color-dominating.
///
/// Classes are scanned from `k - 2` down to 1 (the two top classes of a
/// Grundy coloring always hold dominating vertices). A class without a
/// dominating vertex is dissolved: each member moves to the smallest higher
/// class containing none of its neighbors, then the class is deleted. Moves
/// only go upward into classes that were already scanned, so every vertex
/// moves at most once.
pub fn cd_gcd_transform(g: &Graph, c: &Coloring) -> Result<(Coloring, ReductionTrace)> {
    require_grundy(g, c)?;
    let mut st = Classes::new(g, c);
    let mut nc = NeighborColors::new(st.k);
    let mut j = st.k.saturating_sub(2);
    while j >= 1 {
        let members = st.members(j);
        if !members.iter().any(|&v| st.dominating(&mut nc, v)) {
            // Members of one class are pairwise non-adjacent, so each target
            // can be computed independently of the other moves.
            for v in members {
                nc.load(g, &st.col, v);
                let to = (j + 1..=st.k)
                    .find(|&p| !nc.has(p))
                    .expect("a non-dominating Grundy vertex misses a higher color");
                st.recolor(v, to);
            }
            st.delete_class(j);
        }
        j -= 1;
    }
    debug_assert!(verify::check_cd(g, &Coloring::new(st.col.clone()).unwrap()).unwrap().pass);
    Ok(st.finish())
}

/// Nice-vertex transform: repeatedly recolors a top-class vertex until the
/// top class contains a nice vertex, restoring the Grundy and
/// color-dominating properties after every local recoloring.
///
/// When no vertex of the top class `t` is nice, the smallest-index `u` in
/// that class moves to `i(u)`, the least color with no dominating vertex
/// next to `u`. Every neighbor `w` of `u` colored `i(u)` moves to the
/// smallest color other than `i(u)` missing around `w` (which lies strictly
/// between `i(u)` and `t`). Both reductions are then re-run on the result.
pub fn z_transform(g: &Graph, c: &Coloring) -> Result<(Coloring, ReductionTrace)> {
    require_grundy(g, c)?;
    if let Some(class) = verify::check_cd(g, c)?.violations.iter().find_map(|v| match v {
        verify::Violation::NoDominatingVertex { class } => Some(*class),
        _ => None,
    }) {
        return Err(Error::NotDominating(class));
    }
    let mut current = c.clone();
    let mut trace = ReductionTrace::default();
    if g.n() == 0 {
        return Ok((current, trace));
    }
    loop {
        let t = current.k();
        let flags = verify::dominating_flags(g, &current);
        let top = current.class(t);
        if top.iter().any(|&u| is_nice(g, &current, &flags, u)) {
            break;
        }
        let u = top[0];
        let cols = current.colors();
        let mut nc = NeighborColors::new(t);
        let mut covered = vec![false; t as usize + 1];
        for &w in g.neighbors(u) {
            if flags[w] {
                covered[cols[w] as usize] = true;
            }
        }
        let iu = (1..t).find(|&i| !covered[i as usize]).expect("u is not nice");
        let mut raw = cols.to_vec();
        let mut moves = vec![Move { vertex: u, from: t, to: iu }];
        for &w in g.neighbors(u) {
            if cols[w] != iu {
                continue;
            }
            nc.load(g, cols, w);
            let jw =
                (1..=t).find(|&j| j != iu && !nc.has(j)).expect("a non-dominating vertex misses some color");
            debug_assert!(iu < jw && jw < t);
            raw[w] = jw;
            moves.push(Move { vertex: w, from: iu, to: jw });
        }
        raw[u] = iu;
        trace.moves.extend(moves);
        trace.iterations += 1;

        let local = Coloring::normalized(&raw);
        if local.k() < t {
            trace.class_deletions.push(t);
        }
        let (grundy, t1) = grundy_reduce(g, &local)?;
        trace.absorb(t1);
        let (gcd, t2) = cd_gcd_transform(g, &grundy)?;
        trace.absorb(t2);
        current = gcd;
    }
    Ok((current, trace))
}

fn is_nice(g: &Graph, c: &Coloring, flags: &[bool], u: usize) -> bool {
    let t = c.k();
    let mut covered = vec![false; t as usize + 1];
    for &w in g.neighbors(u) {
        if flags[w] {
            covered[c.color(w) as usize] = true;
        }
    }
    c.color(u) == t && (1..t).all(|i| covered[i as usize])
}

/// Greedy over `order`, then the Grundy reduction, the color-dominating
/// transform and the nice-vertex transform.
pub fn z_pipeline(g: &Graph, order: &[usize]) -> Result<(Coloring, ReductionTrace)> {
    let initial = greedy(g, order)?;
    let (c1, mut trace) = grundy_reduce(g, &initial)?;
    let (c2, t2) = cd_gcd_transform(g, &c1)?;
    trace.absorb(t2);
    let (c3, t3) = z_transform(g, &c2)?;
    trace.iterations = t3.iterations;
    trace.absorb(t3);
    Ok((c3, trace))
}

/// The z-coloring heuristic. `seed_order` defaults to `0..n`.
pub fn z_heuristic(g: &Graph, seed_order: Option<&[usize]>) -> Result<(Coloring, ReductionTrace)> {
    match seed_order {
        Some(order) => z_pipeline(g, order),
        None => z_pipeline(g, &(0..g.n()).collect::<Vec<_>>()),
    }
}

/// Options for [`complementary`].
#[derive(Debug, Clone, Copy)]
pub struct ComplementaryOptions {
    /// Maximum number of tuples tried.
    pub budget: usize,
    pub seed: u64,
}

impl Default for ComplementaryOptions {
    fn default() -> Self {
        ComplementaryOptions { budget: 1000, seed: 0 }
    }
}

/// Complementary augmentation: for tuples `(v_1, ..., v_t)` picking one
/// vertex per class of the z-coloring `c`, add a vertex adjacent to the
/// tuple, run the z-heuristic on the augmented graph and keep the
/// restriction to `g` with the fewest colors.
///
/// All tuples are tried when the product of class sizes fits in the budget;
/// otherwise `budget` tuples are sampled uniformly with the given seed.
/// `c` itself is returned if no restriction beats it.
pub fn complementary(g: &Graph, c: &Coloring, opts: ComplementaryOptions) -> Result<Coloring> {
    if opts.budget == 0 {
        return Err(Error::InvalidArgument("complementary budget must be positive".into()));
    }
    let verdict = verify::check_z(g, c);
    if !verdict.pass {
        return Err(Error::InvalidColoring("complementary needs a z-coloring".into()));
    }
    let classes = c.classes();
    let product = classes.iter().try_fold(1usize, |acc, cl| acc.checked_mul(cl.len())).unwrap_or(usize::MAX);
    let tuples: Vec<Vec<usize>> = if product <= opts.budget {
        let mut out = Vec::with_capacity(product);
        let mut idx = vec![0usize; classes.len()];
        'outer: loop {
            out.push(idx.iter().zip(&classes).map(|(&i, cl)| cl[i]).collect());
            for pos in (0..idx.len()).rev() {
                idx[pos] += 1;
                if idx[pos] < classes[pos].len() {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
        out
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..opts.budget).map(|_| classes.iter().map(|cl| cl[rng.gen_range(0..cl.len())]).collect()).collect()
    };

    let mut best: Option<Coloring> = None;
    for tuple in tuples {
        let aug = g.with_vertex(&tuple)?;
        let (coloring, _) = z_heuristic(&aug, None)?;
        let restricted = coloring.restrict_prefix(g.n());
        if best.as_ref().is_none_or(|b| restricted.k() < b.k()) {
            best = Some(restricted);
        }
    }
    let best = best.expect("at least one tuple");
    Ok(if best.k() <= c.k() { best } else { c.clone() })
}

/// Result of [`iterated_z`].
#[derive(Debug, Clone)]
pub struct IteratedResult {
    pub best: Coloring,
    /// Colors used by each round's output.
    pub round_colors: Vec<u32>,
    /// Best color count seen up to and including each round.
    pub running_best: Vec<u32>,
}

/// Iterated z-heuristic. Round 1 is the plain heuristic. Each later round
/// lists the previous round's classes in some order (reversed in round 2,
/// a seeded random permutation afterwards), greedily colors the vertices in
/// that order and re-runs the reductions.
pub fn iterated_z(g: &Graph, rounds: usize, seed: u64) -> Result<IteratedResult> {
    if rounds == 0 {
        return Err(Error::InvalidArgument("rounds must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut current, _) = z_heuristic(g, None)?;
    let mut best = current.clone();
    let mut round_colors = vec![current.k()];
    let mut running_best = vec![current.k()];
    for round in 2..=rounds {
        let mut classes = current.classes();
        if round == 2 {
            classes.reverse();
        } else {
            classes.shuffle(&mut rng);
        }
        let order: Vec<usize> = classes.into_iter().flatten().collect();
        let (next, _) = z_pipeline(g, &order)?;
        if next.k() < best.k() {
            best = next.clone();
        }
        round_colors.push(next.k());
        running_best.push(best.k());
        current = next;
    }
    Ok(IteratedResult { best, round_colors, running_best })
}
