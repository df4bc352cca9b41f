//! Flips and the blind flipper game.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::game::Radius;
use crate::graph::Graph;
use crate::VertexSet;

/// A partition of the vertices into parts `0..p` and a symmetric relation on parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipRound {
    part_of: Vec<usize>,
    parts: usize,
    /// Normalised `(a, b)` with `a ≤ b`, sorted, deduplicated. `(a, a)` is a loop.
    flips: Vec<(usize, usize)>,
}

impl FlipRound {
    /// Part ids must be dense: every id in `0..max+1` is used.
    pub fn new(part_of: Vec<usize>, flips: &[(usize, usize)]) -> Result<Self> {
        let parts = part_of.iter().map(|&p| p + 1).max().unwrap_or(0);
        let mut used = vec![false; parts];
        part_of.iter().for_each(|&p| used[p] = true);
        if let Some(p) = used.iter().position(|&u| !u) {
            return Err(Error::input(format!("part {p} is empty; part ids must be dense")));
        }
        let mut norm = Vec::with_capacity(flips.len());
        for &(a, b) in flips {
            if a >= parts || b >= parts {
                return Err(Error::input(format!("flip ({a},{b}) names a part outside 0..{parts}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(FlipRound { part_of, parts, flips: norm })
    }

    /// Builds a round from explicit parts, which must cover `0..n` exactly once.
    pub fn from_parts(n: usize, parts: &[Vec<usize>], flips: &[(usize, usize)]) -> Result<Self> {
        let mut part_of = vec![usize::MAX; n];
        for (p, members) in parts.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(Error::input(format!("vertex {v} out of range")));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::input(format!("vertex {v} is in two parts")));
                }
                part_of[v] = p;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::input(format!("vertex {v} is not assigned to a part")));
        }
        Self::new(part_of, flips)
    }

    /// The partition with one part and no flips.
    pub fn identity(n: usize) -> Self {
        FlipRound { part_of: vec![0; n], parts: usize::from(n > 0), flips: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    pub fn width(&self) -> usize {
        self.parts
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn flips(&self) -> &[(usize, usize)] {
        &self.flips
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.parts];
        for (v, &p) in self.part_of.iter().enumerate() {
            out[p].push(v);
        }
        out
    }

    pub fn is_flipped(&self, p: usize, q: usize) -> bool {
        self.flips.binary_search(&(p.min(q), p.max(q))).is_ok()
    }
}

/// A sequence of flips; the radius is supplied when simulating.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FlipStrategy {
    pub rounds: Vec<FlipRound>,
}

impl FlipStrategy {
    pub fn new(rounds: Vec<FlipRound>) -> Self {
        FlipStrategy { rounds }
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    /// Largest number of parts in a round.
    pub fn width(&self) -> usize {
        self.rounds.iter().map(FlipRound::width).max().unwrap_or(0)
    }
}

/// XOR of the adjacency of `g` with the flipped part pairs.
pub fn apply_flip(g: &Graph, round: &FlipRound) -> Result<Graph> {
    let n = g.n();
    if round.n() != n {
        return Err(Error::input(format!("flip assigns {} vertices, graph has {n}", round.n())));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        let nbrs = g.neighbors(u);
        let pu = round.part_of[u];
        for v in u + 1..n {
            let adjacent = nbrs.binary_search(&v).is_ok();
            if adjacent != round.is_flipped(pu, round.part_of[v]) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unique(n, edges))
}

/// When a robber on an isolated vertex is caught.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CaptureRule {
    /// Isolated vertices of every `G_i` are removed from `A_i`.
    #[default]
    Immediate,
    /// Only isolated vertices of the final flipped graph catch the robber.
    AtEnd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipTrace {
    /// `A_0..A_m`.
    pub robber: Vec<VertexSet>,
    pub win: bool,
    pub cleared_at: Option<usize>,
}

/// Vertices within distance `r` of `a` in `g`.
pub fn ball(g: &Graph, a: &VertexSet, r: Radius) -> VertexSet {
    let limit = match r {
        Radius::Finite(x) => x as usize,
        Radius::Infinite => usize::MAX,
    };
    let mut seen = a.clone();
    let mut q: VecDeque<(usize, usize)> = a.iter().map(|v| (v, 0)).collect();
    while let Some((v, d)) = q.pop_front() {
        if d == limit {
            continue;
        }
        for &u in g.neighbors(v) {
            if seen.insert(u) {
                q.push_back((u, d + 1));
            }
        }
    }
    seen
}

/// Plays a flip strategy against an invisible robber of speed `r`.
///
/// `A'_i` is the radius-`r` ball around `A_{i-1}` in `G_{i-1}` (with `G_0 = G`);
/// `G_i` is round `i` applied to the original graph.
pub fn flip_simulate(g: &Graph, s: &FlipStrategy, r: Radius, rule: CaptureRule) -> Result<FlipTrace> {
    let n = g.n();
    let mut a = VertexSet::full(n);
    let mut robber = vec![a.clone()];
    let mut prev = g.clone();
    let mut cleared_at = if n == 0 { Some(0) } else { None };
    let m = s.rounds.len();
    for (i, round) in s.rounds.iter().enumerate() {
        let gi = apply_flip(g, round)?;
        let mut next = ball(&prev, &a, r);
        if rule == CaptureRule::Immediate || i + 1 == m {
            next.difference_with(&gi.isolated_vertices());
        }
        if next.is_empty() && cleared_at.is_none() {
            cleared_at = Some(i + 1);
        }
        robber.push(next.clone());
        a = next;
        prev = gi;
    }
    Ok(FlipTrace { robber, win: cleared_at.is_some(), cleared_at })
}
