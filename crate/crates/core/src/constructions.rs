//! Explicit subdivisions with short radius-1 strategies.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::game::{ensure_win, CopStrategy, Radius};
use crate::generators::complete;
use crate::graph::{Graph, DEFAULT_SUBDIVISION_CAP};
use crate::minors::MinorModel;

/// A subdivided complete binary tree with a 3-cop strategy.
#[derive(Clone, Debug)]
pub struct BintreeSubdivision {
    pub graph: Graph,
    pub strategy: CopStrategy,
}

fn shifted(rounds: &[Vec<usize>], offset: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    rounds.iter().map(move |r| r.iter().map(|&v| v + offset).collect())
}

/// `T_h`: `T_1 = K_1`, and `T_{i+1}` joins a new root `u` to the root of one copy
/// of `T_i` by an edge and to the root of another by a path with `ℓ_i` edges,
/// where `ℓ_i` is the length of the strategy for `T_i`. Vertex 0 is the root.
pub fn bintree_subdivision(h: usize) -> Result<BintreeSubdivision> {
    bintree_subdivision_capped(h, DEFAULT_SUBDIVISION_CAP)
}

pub fn bintree_subdivision_capped(h: usize, max_vertices: u64) -> Result<BintreeSubdivision> {
    if h == 0 {
        return Err(Error::input("h must be at least 1"));
    }
    let mut n = 1usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut rounds: Vec<Vec<usize>> = vec![vec![0]];
    for _ in 1..h {
        let l = rounds.len() - 1;
        let total = 2 * n as u64 + l as u64 + 1;
        if total > max_vertices {
            return Err(Error::limit(format!("T_h needs more than {max_vertices} vertices")));
        }
        let (left, path, right) = (1, n + 1, n + 1 + l);
        let p = |j: usize| path + j - 1;
        let mut e = vec![(0, left)];
        e.extend(edges.iter().map(|&(a, b)| (a + left, b + left)));
        let mut prev = 0;
        for j in 1..=l {
            e.push((prev, p(j)));
            prev = p(j);
        }
        e.push((prev, right));
        e.extend(edges.iter().map(|&(a, b)| (a + right, b + right)));

        let mut s = vec![vec![0]];
        match l {
            0 => {}
            1 => s.push(vec![0, p(1)]),
            _ => s.extend((1..l).map(|j| vec![0, p(j), p(j + 1)])),
        }
        s.push(if l == 0 { vec![0, left] } else { vec![0, left, p(l)] });
        s.extend(shifted(&rounds[1..], left));
        match l {
            0 => s.push(vec![0, left, right]),
            1 => {
                s.push(vec![0, left, p(1)]);
                s.push(vec![p(1), right]);
            }
            _ => {
                s.push(vec![0, left, p(1)]);
                s.extend((2..=l).map(|j| vec![right, p(j - 1), p(j)]));
            }
        }
        s.extend(shifted(&rounds, right));

        n = total as usize;
        edges = e;
        rounds = s;
    }
    let graph = Graph::from_edges(n, &edges)?;
    let strategy = CopStrategy::bcw(Radius::ONE, 3, rounds);
    ensure_win(&graph, &strategy).map_err(|e| Error::Internal(format!("bintree strategy does not win: {e}")))?;
    Ok(BintreeSubdivision { graph, strategy })
}

/// One phase-(3) segment: cops on `x` clean the listed vertices of the `x`–`y` path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub x: usize,
    pub y: usize,
    pub cleaned: Vec<usize>,
}

/// Output of [`k2t_example`].
#[derive(Clone, Debug)]
pub struct K2tExample {
    pub graph: Graph,
    pub strategy: CopStrategy,
    /// Balanced `K_{2t}` model in `graph`.
    pub model: MinorModel,
    pub segments: Vec<Segment>,
}

/// `K_{2t}` on `0..2t` with every edge inside `t..2t` subdivided by `2^{t(t-1)}`
/// vertices and a pendant path of `|V|+1` vertices on each of `0..t`.
///
/// The strategy camps on `0..t`, sweeps the pendant paths, then for each ordered
/// pair `(x_i, y_i)` cleans the `2^{t(t-1)-i}` path vertices nearest `x_i`, moves
/// all camping cops onto `t..2t` and sweeps the subdivided paths.
pub fn k2t_example(t: usize) -> Result<K2tExample> {
    k2t_example_capped(t, DEFAULT_SUBDIVISION_CAP)
}

pub fn k2t_example_capped(t: usize, max_vertices: u64) -> Result<K2tExample> {
    if t < 2 {
        return Err(Error::input("t must be at least 2"));
    }
    let big_t = t * (t - 1);
    if big_t >= 40 {
        return Err(Error::limit(format!("2^{big_t} subdivision vertices per edge")));
    }
    let seg = 1u64 << big_t;
    let k = complete(2 * t);
    let lengths: Vec<u64> = k.edges().iter().map(|&(a, _)| if a >= t { seg + 1 } else { 1 }).collect();
    let (sub, map) = k.subdivide_capped(&lengths, max_vertices)?;
    let base = sub.n();
    let tail = base as u64 + 1;
    if base as u64 + t as u64 * tail > max_vertices {
        return Err(Error::limit(format!("example needs more than {max_vertices} vertices")));
    }
    let tail = tail as usize;
    let mut edges = sub.edges().to_vec();
    let pendant = |i: usize| -> Vec<usize> { (0..tail).map(|j| base + i * tail + j).collect() };
    for i in 0..t {
        let p = pendant(i);
        edges.push((i, p[0]));
        edges.extend(p.windows(2).map(|w| (w[0], w[1])));
    }
    let graph = Graph::from_edges(base + t * tail, &edges)?;
    let internal = |a: usize, b: usize| map.internal_from(a, b).expect("subdivided edge");

    let camp: Vec<usize> = (0..t).collect();
    let hold: Vec<usize> = (t..2 * t).collect();
    let with = |set: &[usize], extra: &[usize]| -> Vec<usize> { set.iter().chain(extra).copied().collect() };
    let mut rounds = vec![camp.clone()];
    for i in 0..t {
        let p = pendant(i);
        rounds.extend(p.windows(2).map(|w| with(&camp, w)));
    }
    let mut segments = Vec::new();
    let pairs = (t..2 * t).flat_map(|x| (t..2 * t).filter(move |&y| y != x).map(move |y| (x, y)));
    for (i, (x, y)) in pairs.enumerate() {
        let s = 1usize << (big_t - 1 - i);
        let w = internal(x, y)[..s].to_vec();
        let guard = with(&camp, &[x]);
        if s == 1 {
            rounds.push(with(&guard, &w));
        } else {
            rounds.extend(w.windows(2).map(|p| with(&guard, p)));
        }
        segments.push(Segment { x, y, cleaned: w });
    }
    rounds.push(hold.clone());
    for x in t..2 * t {
        for y in x + 1..2 * t {
            rounds.extend(internal(x, y).windows(2).map(|p| with(&hold, p)));
        }
    }
    let strategy = CopStrategy::bcw(Radius::ONE, t + 3, rounds);
    ensure_win(&graph, &strategy).map_err(|e| Error::Internal(format!("K_2t strategy does not win: {e}")))?;

    let half = (seg / 2) as usize;
    let mut branch = Vec::with_capacity(2 * t);
    for i in 0..t {
        let mut b = vec![i];
        b.extend(&pendant(i)[..(t - 1) * half]);
        branch.push(b);
    }
    for x in t..2 * t {
        let mut b = vec![x];
        for y in (t..2 * t).filter(|&y| y != x) {
            b.extend(&internal(x, y)[..half]);
        }
        branch.push(b);
    }
    let model = MinorModel::new(complete(2 * t), graph.clone(), branch);
    model
        .verify()
        .map_err(|v| Error::Internal(format!("K_2t model is invalid: {v}")))?;
    Ok(K2tExample { graph, strategy, model, segments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::lb_balanced_clique;
    use crate::game::{simulate, GameKind};
    use crate::solver::{decide, SolverConfig};

    #[test]
    fn bintree_small() {
        let t1 = bintree_subdivision(1).unwrap();
        assert_eq!(t1.graph.n(), 1);
        assert_eq!(t1.strategy.rounds, vec![vec![0]]);
        for h in 2..=6 {
            let t = bintree_subdivision(h).unwrap();
            assert!(t.strategy.max_round_size() <= 3);
            assert_eq!(t.graph.m() + 1, t.graph.n());
            let branch = (0..t.graph.n()).filter(|&v| t.graph.degree(v) != 2 || v == 0).count();
            assert_eq!(branch, (1 << h) - 1);
        }
        assert!(bintree_subdivision(0).is_err());
        assert!(matches!(bintree_subdivision_capped(8, 100), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn bintree_root_stays_clean() {
        let t = bintree_subdivision(4).unwrap();
        let trace = simulate(&t.graph, &t.strategy).unwrap();
        assert!(trace.contaminated.iter().skip(1).all(|a| !a.contains(0)));
    }

    #[test]
    fn bintree_solver_agrees() {
        for h in 1..=3 {
            let t = bintree_subdivision(h).unwrap();
            let w = decide(&t.graph, GameKind::Bcw, Radius::ONE, 3, &SolverConfig::default()).unwrap();
            assert!(w.is_some());
        }
    }

    #[test]
    fn k2t_two() {
        let ex = k2t_example(2).unwrap();
        assert!(ex.strategy.max_round_size() <= 5);
        assert_eq!(ex.graph.n(), 8 + 2 * 9);
        assert!(ex.model.is_balanced());
        assert_eq!(lb_balanced_clique(&ex.model).unwrap(), 4);
        let sizes: Vec<usize> = ex.segments.iter().map(|s| s.cleaned.len()).collect();
        assert_eq!(sizes, [2, 1]);
        assert_eq!((ex.segments[0].x, ex.segments[0].y), (2, 3));
    }

    #[test]
    fn k2t_three() {
        let ex = k2t_example(3).unwrap();
        assert!(ex.strategy.max_round_size() <= 6);
        let sizes: Vec<usize> = ex.segments.iter().map(|s| s.cleaned.len()).collect();
        assert_eq!(sizes, [32, 16, 8, 4, 2, 1]);
        assert_eq!(lb_balanced_clique(&ex.model).unwrap(), 5);
        assert!(k2t_example(1).is_err());
    }
}
