//! Set dynamics of the blind games and strategy verification.
//!
//! Every game tracks the set `A_i` of vertices an invisible robber may occupy
//! after round `i`, starting from `A_0 = V` with no cops placed (`C_0 = ∅`).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GameKind {
    /// Blind cop-width: cops relocate freely, the robber moves at speed `r`.
    Bcw,
    /// Inspection: the `pc`/`fc` cleaning recursion.
    Search,
    /// Hunters and rabbit: the robber must move every round.
    Hunt,
    /// Zero-visibility cops that walk along edges.
    Zerovis,
}

impl GameKind {
    pub fn name(self) -> &'static str {
        match self {
            GameKind::Bcw => "bcw",
            GameKind::Search => "search",
            GameKind::Hunt => "hunt",
            GameKind::Zerovis => "zerovis",
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GameKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bcw" => Ok(GameKind::Bcw),
            "search" => Ok(GameKind::Search),
            "hunt" => Ok(GameKind::Hunt),
            "zerovis" => Ok(GameKind::Zerovis),
            _ => Err(Error::input(format!("unknown game {s:?}"))),
        }
    }
}

/// Robber speed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radius {
    Finite(u32),
    Infinite,
}

impl Radius {
    pub const ONE: Radius = Radius::Finite(1);

    /// Doubles a finite radius (saturating); infinity stays infinite.
    pub fn doubled(self) -> Radius {
        match self {
            Radius::Finite(r) => Radius::Finite(r.saturating_mul(2)),
            Radius::Infinite => Radius::Infinite,
        }
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Finite(r) => write!(f, "{r}"),
            Radius::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Radius {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Radius::Infinite);
        }
        s.parse::<u32>()
            .map(Radius::Finite)
            .map_err(|_| Error::input(format!("bad radius {s:?}")))
    }
}

/// A blind strategy: the sets `C_1..C_m` occupied in each round.
///
/// Rounds are kept as sorted, duplicate-free vertex lists so that long
/// strategies on large graphs stay compact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopStrategy {
    pub game: GameKind,
    pub radius: Radius,
    pub budget: usize,
    pub rounds: Vec<Vec<usize>>,
}

impl CopStrategy {
    /// Normalises each round (sort + dedup).
    pub fn new(game: GameKind, radius: Radius, budget: usize, rounds: Vec<Vec<usize>>) -> Self {
        let rounds = rounds
            .into_iter()
            .map(|mut r| {
                r.sort_unstable();
                r.dedup();
                r
            })
            .collect();
        CopStrategy { game, radius, budget, rounds }
    }

    pub fn bcw(radius: Radius, budget: usize, rounds: Vec<Vec<usize>>) -> Self {
        Self::new(GameKind::Bcw, radius, budget, rounds)
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    /// Largest round.
    pub fn max_round_size(&self) -> usize {
        self.rounds.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn round_sets(&self, n: usize) -> Vec<VertexSet> {
        self.rounds.iter().map(|r| VertexSet::from_slice(n, r)).collect()
    }
}

/// Per-round record of a simulated game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameTrace {
    /// `A_0..A_m`. For the search game this is `V ∖ fc_i`.
    pub contaminated: Vec<VertexSet>,
    /// `pc_1..pc_m` (search game only).
    pub pc: Vec<VertexSet>,
    /// `fc_0..fc_m` (search game only).
    pub fc: Vec<VertexSet>,
    pub win: bool,
    /// First round after which nothing is contaminated.
    pub cleared_at: Option<usize>,
}

/// Outcome of [`verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Win { cleared_at: usize },
    Lose { residual: VertexSet },
    Invalid(String),
}

impl Verdict {
    pub fn is_win(&self) -> bool {
        matches!(self, Verdict::Win { .. })
    }
}

/// One round of the radius-`r` game.
///
/// `A' = {u ∉ C_next : some path of length ≤ r from A to u avoids C_prev ∩ C_next}`.
pub fn bcw_step(g: &Graph, a: &VertexSet, c_prev: &VertexSet, c_next: &VertexSet, r: Radius) -> VertexSet {
    if let Radius::Finite(1) = r {
        let mut s = g.spread_unchecked(a);
        s.difference_with(c_next);
        return s;
    }
    let blocked = c_prev.intersection(c_next);
    let mut reach = a.difference(&blocked);
    let mut frontier = reach.clone();
    let mut depth = 0u32;
    while !frontier.is_empty() {
        if let Radius::Finite(r) = r {
            if depth >= r {
                break;
            }
        }
        let mut next = g.adjacent_to(&frontier);
        next.difference_with(&blocked);
        next.difference_with(&reach);
        reach.union_with(&next);
        frontier = next;
        depth += 1;
    }
    reach.difference_with(c_next);
    reach
}

/// One hunting round: the rabbit must move, so `A' = ⋃_{v ∈ A∖S} N(v)`.
pub fn hunt_step(g: &Graph, a: &VertexSet, s: &VertexSet) -> VertexSet {
    g.adjacent_to(&a.difference(s))
}

/// One zero-visibility round: capture on arrival, then the robber moves one
/// step without passing through occupied vertices.
pub fn zerovis_step(g: &Graph, a: &VertexSet, c: &VertexSet) -> VertexSet {
    let survivors = a.difference(c);
    let mut s = g.spread_unchecked(&survivors);
    s.difference_with(c);
    s
}

/// `pc_i = fc_{i-1} ∪ S_i`, `fc_i = pc_i ∖ N(V ∖ pc_i)`; returns `(pc_1..pc_m, fc_0..fc_m)`.
pub fn search_trace(g: &Graph, rounds: &[VertexSet]) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let n = g.n();
    let mut fc = vec![VertexSet::new(n)];
    let mut pc = Vec::with_capacity(rounds.len());
    for s in rounds {
        let p = fc.last().expect("fc_0 present").union(s);
        let outside = p.complement();
        let threatened = g.adjacent_to(&outside);
        let f = p.difference(&threatened);
        pc.push(p);
        fc.push(f);
    }
    (pc, fc)
}

fn check_ids(g: &Graph, s: &CopStrategy) -> core::result::Result<(), String> {
    for (i, r) in s.rounds.iter().enumerate() {
        if let Some(&v) = r.iter().find(|&&v| v >= g.n()) {
            return Err(format!("round {}: vertex {v} outside 0..{}", i + 1, g.n()));
        }
        if r.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("round {}: vertex list not sorted and distinct", i + 1));
        }
    }
    Ok(())
}

fn check_budget(s: &CopStrategy) -> core::result::Result<(), String> {
    for (i, r) in s.rounds.iter().enumerate() {
        if r.len() > s.budget {
            return Err(format!("round {} uses {} cops, budget is {}", i + 1, r.len(), s.budget));
        }
    }
    Ok(())
}

/// Minimum number of walking cops needed to go from `prev` to `next`, each cop
/// moving at most one edge; `None` if impossible.
pub fn zerovis_transition_cost(g: &Graph, prev: &[usize], next: &[usize]) -> Option<usize> {
    if prev.is_empty() || next.is_empty() {
        return if prev.is_empty() && next.is_empty() { Some(0) } else { None };
    }
    let near = |a: usize, b: usize| a == b || g.has_edge(a, b);
    let adj: Vec<Vec<usize>> = prev
        .iter()
        .map(|&a| (0..next.len()).filter(|&j| near(a, next[j])).collect())
        .collect();
    if adj.iter().any(Vec::is_empty) {
        return None;
    }
    if (0..next.len()).any(|j| !adj.iter().any(|l| l.contains(&j))) {
        return None;
    }
    let nu = max_matching(&adj, next.len());
    Some(prev.len() + next.len() - nu)
}

fn max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [usize]) -> bool {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                if owner[v] == usize::MAX || augment(owner[v], adj, seen, owner) {
                    owner[v] = u;
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; right];
    let mut count = 0;
    for u in 0..adj.len() {
        let mut seen = vec![false; right];
        if augment(u, adj, &mut seen, &mut owner) {
            count += 1;
        }
    }
    count
}

fn check_movement(g: &Graph, s: &CopStrategy) -> core::result::Result<(), String> {
    for (i, w) in s.rounds.windows(2).enumerate() {
        match zerovis_transition_cost(g, &w[0], &w[1]) {
            None => {
                return Err(format!(
                    "rounds {} -> {}: no walk of the cops realises the move",
                    i + 1,
                    i + 2
                ))
            }
            Some(c) if c > s.budget => {
                return Err(format!(
                    "rounds {} -> {}: move needs {c} walking cops, budget is {}",
                    i + 1,
                    i + 2,
                    s.budget
                ))
            }
            _ => {}
        }
    }
    Ok(())
}

/// Checks ids, budget, radius and movement constraints.
pub fn validate(g: &Graph, s: &CopStrategy) -> core::result::Result<(), String> {
    check_ids(g, s)?;
    check_budget(s)?;
    if s.game != GameKind::Bcw && s.radius != Radius::ONE {
        return Err(format!("game {} is played at radius 1, strategy declares r={}", s.game, s.radius));
    }
    if s.game == GameKind::Zerovis {
        check_movement(g, s)?;
    }
    Ok(())
}

/// Full trace of a strategy. Fails with `InvalidStrategy` if [`validate`] fails.
pub fn simulate(g: &Graph, s: &CopStrategy) -> Result<GameTrace> {
    validate(g, s).map_err(Error::InvalidStrategy)?;
    let n = g.n();
    let sets = s.round_sets(n);
    let mut trace = GameTrace {
        contaminated: vec![VertexSet::full(n)],
        pc: Vec::new(),
        fc: Vec::new(),
        win: false,
        cleared_at: None,
    };
    if s.game == GameKind::Search {
        let (pc, fc) = search_trace(g, &sets);
        trace.contaminated = fc.iter().map(VertexSet::complement).collect();
        trace.pc = pc;
        trace.fc = fc;
    } else {
        let mut prev = VertexSet::new(n);
        for c in &sets {
            let a = trace.contaminated.last().expect("A_0 present");
            let next = match s.game {
                GameKind::Bcw => bcw_step(g, a, &prev, c, s.radius),
                GameKind::Hunt => hunt_step(g, a, c),
                GameKind::Zerovis => zerovis_step(g, a, c),
                GameKind::Search => unreachable!(),
            };
            trace.contaminated.push(next);
            prev = c.clone();
        }
    }
    trace.cleared_at = trace.contaminated.iter().position(VertexSet::is_empty);
    trace.win = trace.contaminated.last().is_some_and(VertexSet::is_empty);
    Ok(trace)
}

/// Decides whether a strategy wins, without storing the trace.
pub fn verify(g: &Graph, s: &CopStrategy) -> Verdict {
    if let Err(e) = validate(g, s) {
        return Verdict::Invalid(e);
    }
    if s.game == GameKind::Bcw && s.radius == Radius::ONE {
        let mut sim = RadiusOneSim::new(g);
        let mut cleared = sim.is_clear().then_some(0);
        for (i, c) in s.rounds.iter().enumerate() {
            sim.step(c);
            if cleared.is_none() && sim.is_clear() {
                cleared = Some(i + 1);
            }
        }
        return match cleared {
            Some(i) => Verdict::Win { cleared_at: i },
            None => Verdict::Lose { residual: sim.contaminated() },
        };
    }
    match simulate(g, s) {
        Ok(t) => match t.cleared_at {
            Some(i) => Verdict::Win { cleared_at: i },
            None => Verdict::Lose {
                residual: t.contaminated.last().cloned().unwrap_or_else(|| VertexSet::full(g.n())),
            },
        },
        Err(e) => Verdict::Invalid(format!("{e}")),
    }
}

/// [`verify`] as a `Result`, for constructions that must produce a winner.
pub fn ensure_win(g: &Graph, s: &CopStrategy) -> Result<()> {
    match verify(g, s) {
        Verdict::Win { .. } => Ok(()),
        Verdict::Lose { residual } => Err(Error::NotWinning(format!(
            "{} vertices remain contaminated",
            residual.len()
        ))),
        Verdict::Invalid(e) => Err(Error::InvalidStrategy(e)),
    }
}

/// Incremental radius-1 simulator.
///
/// Work per round is proportional to the contaminated boundary and the cop set,
/// not to `|A|`, which keeps verification of very long strategies on large
/// subdivisions cheap.
pub struct RadiusOneSim<'g> {
    g: &'g Graph,
    inside: Vec<bool>,
    size: usize,
    boundary: Vec<usize>,
    in_boundary: Vec<bool>,
    mark: Vec<u32>,
    epoch: u32,
}

impl<'g> RadiusOneSim<'g> {
    /// Starts from `A_0 = V`.
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        RadiusOneSim {
            g,
            inside: vec![true; n],
            size: n,
            boundary: Vec::new(),
            in_boundary: vec![false; n],
            mark: vec![0; n],
            epoch: 0,
        }
    }

    pub fn is_clear(&self) -> bool {
        self.size == 0
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.inside[v]
    }

    pub fn contaminated(&self) -> VertexSet {
        let mut s = VertexSet::new(self.g.n());
        for (v, &b) in self.inside.iter().enumerate() {
            if b {
                s.insert(v);
            }
        }
        s
    }

    /// `A ← (A ∪ N(A)) ∖ C`. `c` must hold valid ids.
    pub fn step(&mut self, c: &[usize]) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.epoch = 1;
        }
        let ep = self.epoch;
        let g = self.g;
        let mut candidates: Vec<usize> = Vec::new();
        let mut added: Vec<usize> = Vec::new();
        for &b in &self.boundary {
            for &u in g.neighbors(b) {
                if !self.inside[u] && self.mark[u] != ep {
                    self.mark[u] = ep;
                    added.push(u);
                }
            }
        }
        for &u in &added {
            self.inside[u] = true;
            self.size += 1;
        }
        for &v in c {
            if self.inside[v] {
                self.inside[v] = false;
                self.size -= 1;
            }
        }
        candidates.extend_from_slice(&self.boundary);
        candidates.extend_from_slice(&added);
        for &v in c {
            candidates.extend_from_slice(g.neighbors(v));
        }
        for &b in &self.boundary {
            self.in_boundary[b] = false;
        }
        self.boundary.clear();
        for v in candidates {
            if self.in_boundary[v] || !self.inside[v] {
                continue;
            }
            if g.neighbors(v).iter().any(|&u| !self.inside[u]) {
                self.in_boundary[v] = true;
                self.boundary.push(v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, v)
    }

    #[test]
    fn bcw_step_examples() {
        let p3 = path(3);
        let a = bcw_step(&p3, &set(3, &[0]), &set(3, &[]), &set(3, &[1]), Radius::ONE);
        assert_eq!(a.to_vec(), [0]);
        let e = bcw_step(&p3, &set(3, &[]), &set(3, &[]), &set(3, &[1]), Radius::ONE);
        assert!(e.is_empty());
        let p5 = path(5);
        let a = bcw_step(&p5, &set(5, &[0]), &set(5, &[2]), &set(5, &[2, 4]), Radius::Infinite);
        assert_eq!(a.to_vec(), [0, 1]);
    }

    #[test]
    fn hunt_step_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let a = hunt_step(&star, &VertexSet::full(4), &set(4, &[0]));
        assert_eq!(a.to_vec(), [0]);
        assert!(hunt_step(&star, &set(4, &[1, 2]), &set(4, &[1, 2])).is_empty());
        let iso = Graph::empty(3);
        assert!(hunt_step(&iso, &VertexSet::full(3), &set(3, &[])).is_empty());
    }

    #[test]
    fn search_examples() {
        let p3 = path(3);
        let (pc, fc) = search_trace(&p3, &[set(3, &[1])]);
        assert!(fc[0].is_empty());
        assert_eq!(pc[0].to_vec(), [1]);
        assert!(fc[1].is_empty());
        let (_, fc) = search_trace(&p3, &[VertexSet::full(3)]);
        assert!(fc[1].is_full());
    }

    #[test]
    fn verify_examples() {
        let p4 = path(4);
        let s = CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let t = simulate(&p4, &s).unwrap();
        assert_eq!(t.contaminated[1].to_vec(), [2, 3]);
        assert_eq!(t.contaminated[2].to_vec(), [3]);
        assert!(t.win);
        assert_eq!(verify(&p4, &s), Verdict::Win { cleared_at: 3 });
        let k2 = complete(2);
        assert!(verify(&k2, &CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1]])).is_win());
        let lose = CopStrategy::bcw(Radius::ONE, 1, vec![vec![0], vec![3]]);
        match verify(&p4, &lose) {
            Verdict::Lose { residual } => assert!(!residual.is_empty()),
            v => panic!("{v:?}"),
        }
        let over = CopStrategy::bcw(Radius::ONE, 1, vec![vec![0, 1]]);
        assert!(matches!(verify(&p4, &over), Verdict::Invalid(_)));
    }

    #[test]
    fn zerovis_examples() {
        let k2 = complete(2);
        let s = CopStrategy::new(GameKind::Zerovis, Radius::ONE, 1, vec![vec![0], vec![1]]);
        let t = simulate(&k2, &s).unwrap();
        assert_eq!(t.contaminated[1].to_vec(), [1]);
        assert!(t.contaminated[2].is_empty());
        let idle = CopStrategy::new(GameKind::Zerovis, Radius::ONE, 0, vec![vec![]; 5]);
        assert!(!verify(&cycle(5), &idle).is_win());
        let jump = CopStrategy::new(GameKind::Zerovis, Radius::ONE, 1, vec![vec![0], vec![2]]);
        assert!(matches!(verify(&path(3), &jump), Verdict::Invalid(_)));
        let p3 = path(3);
        let single = CopStrategy::new(GameKind::Zerovis, Radius::ONE, 1, vec![vec![1], vec![1], vec![0]]);
        let t = simulate(&p3, &single).unwrap();
        assert!(!t.win);
        assert_eq!(t.contaminated[3].to_vec(), [1, 2]);
    }

    #[test]
    fn transition_cost() {
        let p3 = path(3);
        assert_eq!(zerovis_transition_cost(&p3, &[0, 2], &[1]), Some(2));
        assert_eq!(zerovis_transition_cost(&p3, &[1], &[0, 2]), Some(2));
        assert_eq!(zerovis_transition_cost(&p3, &[0], &[2]), None);
        assert_eq!(zerovis_transition_cost(&p3, &[], &[]), Some(0));
        assert_eq!(zerovis_transition_cost(&p3, &[], &[1]), None);
    }

    #[test]
    fn incremental_matches_plain() {
        let g = cycle(7);
        let rounds = [vec![0, 3], vec![1], vec![], vec![2, 5, 6], vec![0, 1, 2]];
        let mut sim = RadiusOneSim::new(&g);
        let mut a = VertexSet::full(7);
        let empty = VertexSet::new(7);
        for r in &rounds {
            sim.step(r);
            a = bcw_step(&g, &a, &empty, &set(7, r), Radius::ONE);
            assert_eq!(sim.contaminated(), a);
            assert_eq!(sim.len(), a.len());
        }
    }
}
