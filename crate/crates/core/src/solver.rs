//! Exact game values on graphs with at most 127 vertices.
//!
//! The cops' problem is single-player reachability over contamination states:
//! from `A_0 = V` find a shortest sequence of cop sets that reaches the empty
//! set (or `fc = V` in the search game). States are `u128` bitmasks. The
//! search is breadth-first and level-synchronous so that expanding a level can
//! be farmed out to threads through [`FrontierMap`] while the merge, which
//! decides the witness, stays sequential and canonical.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::game::{bcw_step, zerovis_transition_cost, CopStrategy, GameKind, Radius};
use crate::graph::Graph;
use crate::VertexSet;

pub const MAX_SOLVER_VERTICES: usize = 127;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Upper bound on the number of distinct visited states.
    pub max_states: usize,
    /// Skip a state when an already visited state with the same cop component
    /// is at least as good (a subset for contaminated sets, a superset for `fc`).
    pub dominance: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_states: 1 << 27, dominance: false }
    }
}

/// Applies a function to every frontier state, preserving order.
pub trait FrontierMap {
    fn map<S, T, F>(&self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send;
}

/// Single-threaded [`FrontierMap`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl FrontierMap for Sequential {
    fn map<S, T, F>(&self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        items.iter().map(f).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct State {
    a: u128,
    c: u128,
    /// Zero-visibility start, where the first placement is free.
    start: bool,
}

struct Problem {
    n: usize,
    full: u128,
    adj: Vec<u128>,
    game: GameKind,
    radius: Radius,
    k: usize,
    graph: Graph,
}

#[inline]
fn bits(mut x: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let t = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(t)
        }
    })
}

/// All `size`-subsets of `mask`, in increasing numeric order.
fn combinations(mask: u128, size: usize, mut f: impl FnMut(u128)) {
    let pos: Vec<usize> = bits(mask).collect();
    let m = pos.len();
    if size > m {
        return;
    }
    if size == 0 {
        f(0);
        return;
    }
    let limit: u128 = if m == 128 { u128::MAX } else { 1u128 << m };
    let mut x: u128 = if size == 128 { u128::MAX } else { (1u128 << size) - 1 };
    loop {
        let mut out = 0u128;
        for i in bits(x) {
            out |= 1u128 << pos[i];
        }
        f(out);
        let c = x & x.wrapping_neg();
        let (r, overflow) = x.overflowing_add(c);
        if overflow || r >= limit {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
        if x >= limit {
            break;
        }
    }
}

impl Problem {
    fn new(g: &Graph, game: GameKind, radius: Radius, k: usize) -> Result<Self> {
        let n = g.n();
        if n > MAX_SOLVER_VERTICES {
            return Err(Error::input(format!("solver handles at most {MAX_SOLVER_VERTICES} vertices, got {n}")));
        }
        let full = if n == 0 { 0 } else { u128::MAX >> (128 - n) };
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1u128 << u))
            .collect();
        Ok(Problem {
            n,
            full,
            adj,
            game,
            radius: if game == GameKind::Bcw { radius } else { Radius::ONE },
            k,
            graph: g.clone(),
        })
    }

    #[inline]
    fn nbrs(&self, s: u128) -> u128 {
        bits(s).fold(0, |m, v| m | self.adj[v])
    }

    fn start(&self) -> State {
        match self.game {
            GameKind::Search => State { a: 0, c: 0, start: false },
            GameKind::Zerovis => State { a: self.full, c: 0, start: true },
            _ => State { a: self.full, c: 0, start: false },
        }
    }

    fn is_goal(&self, s: &State) -> bool {
        match self.game {
            GameKind::Search => s.a == self.full,
            _ => s.a == 0,
        }
    }

    fn step_radius(&self, a: u128, c_prev: u128, c_next: u128) -> u128 {
        let to = |x: u128| VertexSet::from_u128(self.n, x);
        bcw_step(&self.graph, &to(a), &to(c_prev), &to(c_next), self.radius).to_u128()
    }

    fn successors(&self, s: &State) -> Vec<(u128, State)> {
        let mut out = Vec::new();
        let k = self.k;
        match self.game {
            GameKind::Bcw if self.radius == Radius::ONE => {
                let cand = s.a | self.nbrs(s.a);
                let size = k.min(cand.count_ones() as usize);
                combinations(cand, size, |c| {
                    out.push((c, State { a: cand & !c, c: 0, start: false }));
                });
            }
            GameKind::Bcw => {
                let size = k.min(self.n);
                combinations(self.full, size, |c| {
                    let a = self.step_radius(s.a, s.c, c);
                    out.push((c, State { a, c, start: false }));
                });
            }
            GameKind::Search => {
                let cand = self.full & !s.a;
                let size = k.min(cand.count_ones() as usize);
                combinations(cand, size, |c| {
                    let p = s.a | c;
                    let threatened = self.nbrs(self.full & !p);
                    out.push((c, State { a: p & !threatened, c: 0, start: false }));
                });
            }
            GameKind::Hunt => {
                let size = k.min(s.a.count_ones() as usize);
                combinations(s.a, size, |c| {
                    out.push((c, State { a: self.nbrs(s.a & !c), c: 0, start: false }));
                });
            }
            GameKind::Zerovis => {
                let zstep = |c: u128| {
                    let surv = s.a & !c;
                    (surv | self.nbrs(surv)) & !c
                };
                if s.start || s.c == 0 {
                    if k == 0 || !s.start {
                        out.push((0, State { a: zstep(0), c: 0, start: false }));
                    } else {
                        for size in 1..=k.min(self.n) {
                            combinations(self.full, size, |c| {
                                out.push((c, State { a: zstep(c), c, start: false }));
                            });
                        }
                    }
                } else {
                    let reach = s.c | self.nbrs(s.c);
                    let prev: Vec<usize> = bits(s.c).collect();
                    for size in 1..=k.min(reach.count_ones() as usize) {
                        combinations(reach, size, |c| {
                            let next: Vec<usize> = bits(c).collect();
                            if zerovis_transition_cost(&self.graph, &prev, &next).is_some_and(|x| x <= k) {
                                out.push((c, State { a: zstep(c), c, start: false }));
                            }
                        });
                    }
                }
            }
        }
        out
    }

    fn dominated(&self, seen: &[u128], a: u128) -> bool {
        match self.game {
            GameKind::Search => seen.iter().any(|&s| a & !s == 0),
            _ => seen.iter().any(|&s| s & !a == 0),
        }
    }
}

/// Whether `k` cops win; on success returns a shortest winning strategy.
///
/// Among shortest strategies the witness is canonical: levels are processed in
/// increasing state order and moves in increasing bitmask order, the first
/// discovery of a state fixing its parent.
pub fn decide(g: &Graph, game: GameKind, radius: Radius, k: usize, cfg: &SolverConfig) -> Result<Option<CopStrategy>> {
    decide_with(g, game, radius, k, cfg, &Sequential)
}

pub fn decide_with<M: FrontierMap>(
    g: &Graph,
    game: GameKind,
    radius: Radius,
    k: usize,
    cfg: &SolverConfig,
    mapper: &M,
) -> Result<Option<CopStrategy>> {
    let p = Problem::new(g, game, radius, k)?;
    let out_radius = p.radius;
    let finish = |rounds: Vec<Vec<usize>>| Some(CopStrategy::new(game, out_radius, k, rounds));
    let start = p.start();
    if p.is_goal(&start) {
        return Ok(finish(Vec::new()));
    }
    let mut parent: HashMap<State, (State, u128)> = HashMap::new();
    let mut by_cops: HashMap<(u128, bool), Vec<u128>> = HashMap::new();
    parent.insert(start, (start, 0));
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let expanded = mapper.map(&frontier, |s| p.successors(s));
        let mut next = Vec::new();
        for (s, succ) in frontier.iter().zip(expanded) {
            for (mv, t) in succ {
                if parent.contains_key(&t) {
                    continue;
                }
                if cfg.dominance {
                    let bucket = by_cops.entry((t.c, t.start)).or_default();
                    if p.dominated(bucket, t.a) {
                        continue;
                    }
                    bucket.push(t.a);
                }
                parent.insert(t, (*s, mv));
                if p.is_goal(&t) {
                    let mut rounds = Vec::new();
                    let mut cur = t;
                    while cur != start {
                        let (prev, mv) = parent[&cur];
                        rounds.push(bits(mv).collect());
                        cur = prev;
                    }
                    rounds.reverse();
                    return Ok(finish(rounds));
                }
                next.push(t);
                if parent.len() > cfg.max_states {
                    return Err(Error::limit(format!("more than {} solver states", cfg.max_states)));
                }
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    Ok(None)
}

/// Least `k` for which [`decide`] succeeds, with its witness.
pub fn compute(g: &Graph, game: GameKind, radius: Radius, cfg: &SolverConfig) -> Result<(usize, CopStrategy)> {
    compute_with(g, game, radius, cfg, &Sequential)
}

pub fn compute_with<M: FrontierMap>(
    g: &Graph,
    game: GameKind,
    radius: Radius,
    cfg: &SolverConfig,
    mapper: &M,
) -> Result<(usize, CopStrategy)> {
    for k in 0..=g.n() {
        if let Some(w) = decide_with(g, game, radius, k, cfg, mapper)? {
            return Ok((k, w));
        }
    }
    Err(Error::Internal(format!("{game} not won even with {} cops", g.n())))
}

/// Exact pathwidth via vertex separation.
///
/// Decides `pw ≤ k` for growing `k` by depth-first search over vertex-ordering
/// prefixes `S`, keeping `|N(S)| ≤ k`. A vertex whose addition does not grow
/// `|N(S)|` is always taken greedily; this is safe because `|N(·)|` is
/// submodular. Failed prefixes are memoised.
pub fn pathwidth_oracle(g: &Graph) -> Result<usize> {
    pathwidth_oracle_capped(g, 1 << 24)
}

pub fn pathwidth_oracle_capped(g: &Graph, max_states: usize) -> Result<usize> {
    let n = g.n();
    if n > MAX_SOLVER_VERTICES {
        return Err(Error::input(format!("pathwidth oracle handles at most {MAX_SOLVER_VERTICES} vertices")));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = 0;
    for comp in g.components() {
        let h = g.induced(&comp)?;
        best = best.max(component_pathwidth(&h, max_states)?);
    }
    Ok(best)
}

struct PwSearch<'a> {
    adj: &'a [u128],
    full: u128,
    k: u32,
    failed: hashbrown::HashSet<u128>,
    budget: usize,
}

impl PwSearch<'_> {
    fn boundary(&self, s: u128) -> u32 {
        (bits(s).fold(0u128, |m, v| m | self.adj[v]) & !s).count_ones()
    }

    fn close(&self, mut s: u128) -> u128 {
        loop {
            let b = self.boundary(s);
            let mut grew = false;
            for v in bits(self.full & !s) {
                if self.boundary(s | 1u128 << v) <= b {
                    s |= 1u128 << v;
                    grew = true;
                    break;
                }
            }
            if !grew {
                return s;
            }
        }
    }

    fn dfs(&mut self, s: u128) -> Result<bool> {
        let s = self.close(s);
        if s == self.full {
            return Ok(true);
        }
        if self.failed.contains(&s) {
            return Ok(false);
        }
        if self.failed.len() >= self.budget {
            return Err(Error::limit("pathwidth search state cap"));
        }
        let mut options: Vec<(u32, usize)> = bits(self.full & !s)
            .map(|v| (self.boundary(s | 1u128 << v), v))
            .filter(|&(b, _)| b <= self.k)
            .collect();
        options.sort_unstable();
        for (_, v) in options {
            if self.dfs(s | 1u128 << v)? {
                return Ok(true);
            }
        }
        self.failed.insert(s);
        Ok(false)
    }
}

fn component_pathwidth(g: &Graph, max_states: usize) -> Result<usize> {
    let n = g.n();
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let adj: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1u128 << u))
        .collect();
    for k in 0..n as u32 {
        let mut search = PwSearch { adj: &adj, full, k, failed: hashbrown::HashSet::new(), budget: max_states };
        if search.dfs(0)? {
            return Ok(k as usize);
        }
    }
    Ok(n.saturating_sub(1))
}

pub const MAX_TREEWIDTH_VERTICES: usize = 20;

/// Exact treewidth with an optimal elimination ordering (first eliminated first).
///
/// Dynamic programme over vertex subsets: `TW(S) = min_{v ∈ S} max(TW(S∖v), |Q(S∖v, v)|)`
/// where `Q(S, v)` are the vertices outside `S ∪ {v}` reachable from `v` through `S`.
pub fn treewidth_oracle(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n > MAX_TREEWIDTH_VERTICES {
        return Err(Error::input(format!("treewidth oracle handles at most {MAX_TREEWIDTH_VERTICES} vertices")));
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1u32 << u))
        .collect();
    let q = |s: u32, v: usize| -> u32 {
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut nb = 0u32;
            let mut f = frontier;
            while f != 0 {
                let t = f.trailing_zeros() as usize;
                f &= f - 1;
                nb |= adj[t];
            }
            let grow = nb & s & !comp;
            comp |= grow;
            frontier = grow;
        }
        let mut nb = 0u32;
        let mut c = comp;
        while c != 0 {
            let t = c.trailing_zeros() as usize;
            c &= c - 1;
            nb |= adj[t];
        }
        (nb & !comp & !s).count_ones()
    };
    let size = 1usize << n;
    let mut tw = vec![0u8; size];
    let mut choice = vec![0u8; size];
    for s in 1..size as u32 {
        let mut best = u8::MAX;
        let mut arg = 0u8;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1u32 << v);
            let val = tw[without as usize].max(q(without, v) as u8);
            if val < best {
                best = val;
                arg = v as u8;
            }
        }
        tw[s as usize] = best;
        choice[s as usize] = arg;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = (size - 1) as u32;
    while s != 0 {
        let v = choice[s as usize];
        order.push(v as usize);
        s &= !(1u32 << v);
    }
    order.reverse();
    Ok((tw[size - 1] as usize, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::verify;
    use crate::generators::{cbt, complete, cycle, path};

    fn value(g: &Graph, game: GameKind, r: Radius) -> usize {
        let (k, w) = compute(g, game, r, &SolverConfig::default()).unwrap();
        assert!(verify(g, &w).is_win(), "witness for {game} must win");
        k
    }

    #[test]
    fn combinations_are_ordered() {
        let mut v = Vec::new();
        combinations(0b10110, 2, |c| v.push(c));
        assert_eq!(v, [0b00110, 0b10010, 0b10100]);
        let mut all = 0;
        combinations(u128::MAX >> 1, 1, |_| all += 1);
        assert_eq!(all, 127);
    }

    #[test]
    fn decide_examples() {
        let cfg = SolverConfig::default();
        let k3 = complete(3);
        assert!(decide(&k3, GameKind::Bcw, Radius::ONE, 2, &cfg).unwrap().is_none());
        assert!(decide(&k3, GameKind::Bcw, Radius::ONE, 3, &cfg).unwrap().is_some());
        let w = decide(&path(4), GameKind::Bcw, Radius::ONE, 2, &cfg).unwrap().unwrap();
        assert!(verify(&path(4), &w).is_win());
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn compute_examples() {
        assert_eq!(value(&complete(4), GameKind::Bcw, Radius::ONE), 4);
        assert_eq!(value(&cycle(5), GameKind::Bcw, Radius::ONE), 3);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(value(&star, GameKind::Hunt, Radius::ONE), 1);
        assert_eq!(value(&Graph::empty(3), GameKind::Hunt, Radius::ONE), 0);
        assert_eq!(value(&complete(2), GameKind::Zerovis, Radius::ONE), 1);
    }

    #[test]
    fn dominance_keeps_values() {
        let cfg = SolverConfig { dominance: true, ..SolverConfig::default() };
        for g in [cycle(6), path(5), complete(4)] {
            for game in [GameKind::Bcw, GameKind::Search, GameKind::Hunt] {
                let plain = value(&g, game, Radius::ONE);
                let (k, w) = compute(&g, game, Radius::ONE, &cfg).unwrap();
                assert_eq!(k, plain);
                assert!(verify(&g, &w).is_win());
            }
        }
    }

    #[test]
    fn resource_cap() {
        let cfg = SolverConfig { max_states: 3, dominance: false };
        let r = decide(&cycle(7), GameKind::Bcw, Radius::Infinite, 2, &cfg);
        assert!(matches!(r, Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn pathwidth_examples() {
        assert_eq!(pathwidth_oracle(&path(4)).unwrap(), 1);
        assert_eq!(pathwidth_oracle(&complete(4)).unwrap(), 3);
        assert_eq!(pathwidth_oracle(&cbt(4)).unwrap(), 2);
        assert_eq!(pathwidth_oracle(&Graph::empty(3)).unwrap(), 0);
        assert_eq!(pathwidth_oracle(&cycle(6)).unwrap(), 2);
    }

    #[test]
    fn treewidth_examples() {
        assert_eq!(treewidth_oracle(&cbt(2)).unwrap().0, 1);
        assert_eq!(treewidth_oracle(&cycle(5)).unwrap().0, 2);
        assert_eq!(treewidth_oracle(&complete(4)).unwrap().0, 3);
        assert_eq!(treewidth_oracle(&crate::generators::grid(3, 3)).unwrap().0, 3);
    }
}
