//! Minor models, balanced models and explicit embeddings into grids.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::generators::{complete, grid};
use crate::graph::Graph;
use crate::VertexSet;

/// Branch sets `X_u ⊆ V(host)` for every pattern vertex `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pattern: Graph,
    host: Graph,
    branch: Vec<Vec<usize>>,
}

/// First failed condition found by [`verify_model`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    BranchCount { expected: usize, found: usize },
    OutOfRange { pattern_vertex: usize, host_vertex: usize },
    Empty(usize),
    Overlap { first: usize, second: usize, host_vertex: usize },
    Disconnected(usize),
    MissingEdge(usize, usize),
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::BranchCount { expected, found } => {
                write!(f, "expected {expected} branch sets, found {found}")
            }
            ModelViolation::OutOfRange { pattern_vertex, host_vertex } => {
                write!(f, "branch set {pattern_vertex} names host vertex {host_vertex} out of range")
            }
            ModelViolation::Empty(u) => write!(f, "branch set {u} is empty"),
            ModelViolation::Overlap { first, second, host_vertex } => {
                write!(f, "disjointness: branch sets {first} and {second} share host vertex {host_vertex}")
            }
            ModelViolation::Disconnected(u) => write!(f, "branch set {u} is not connected"),
            ModelViolation::MissingEdge(a, b) => write!(f, "no host edge between branch sets {a} and {b}"),
        }
    }
}

impl MinorModel {
    /// Stores the branch sets sorted; does not verify.
    pub fn new(pattern: Graph, host: Graph, branch: Vec<Vec<usize>>) -> Self {
        let branch = branch
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        MinorModel { pattern, host, branch }
    }

    /// Every vertex of `g` as its own branch set.
    pub fn identity(g: &Graph) -> Self {
        MinorModel { pattern: g.clone(), host: g.clone(), branch: (0..g.n()).map(|v| vec![v]).collect() }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn branch_sets(&self) -> &[Vec<usize>] {
        &self.branch
    }

    pub fn branch(&self, u: usize) -> &[usize] {
        &self.branch[u]
    }

    pub fn verify(&self) -> core::result::Result<(), ModelViolation> {
        verify_model(self)
    }

    pub fn is_balanced(&self) -> bool {
        is_balanced(self)
    }

    /// Common branch-set size of a balanced model.
    pub fn branch_size(&self) -> Option<usize> {
        let first = self.branch.first().map_or(0, Vec::len);
        self.is_balanced().then_some(first)
    }

    fn ensure_valid(&self, what: &str) -> Result<()> {
        verify_model(self).map_err(|v| Error::input(format!("{what}: {v}")))
    }
}

/// Nonempty, pairwise disjoint, connected branch sets covering every pattern edge.
pub fn verify_model(m: &MinorModel) -> core::result::Result<(), ModelViolation> {
    let (h, g) = (&m.pattern, &m.host);
    if m.branch.len() != h.n() {
        return Err(ModelViolation::BranchCount { expected: h.n(), found: m.branch.len() });
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (u, set) in m.branch.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::Empty(u));
        }
        for &x in set {
            if x >= g.n() {
                return Err(ModelViolation::OutOfRange { pattern_vertex: u, host_vertex: x });
            }
            if owner[x] != usize::MAX {
                return Err(ModelViolation::Overlap { first: owner[x], second: u, host_vertex: x });
            }
            owner[x] = u;
        }
    }
    for (u, set) in m.branch.iter().enumerate() {
        if !g.induces_connected(&VertexSet::from_slice(g.n(), set)) {
            return Err(ModelViolation::Disconnected(u));
        }
    }
    for &(a, b) in h.edges() {
        let touches = m.branch[a]
            .iter()
            .any(|&x| g.neighbors(x).iter().any(|&y| owner[y] == b));
        if !touches {
            return Err(ModelViolation::MissingEdge(a, b));
        }
    }
    Ok(())
}

/// All branch sets have the same size.
pub fn is_balanced(m: &MinorModel) -> bool {
    m.branch.windows(2).all(|w| w[0].len() == w[1].len())
}

fn bfs_prefix(g: &Graph, sources: &[usize], allowed: &[bool], want: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut q = VecDeque::new();
    for &s in sources {
        if !seen[s] {
            seen[s] = true;
            q.push_back(s);
        }
    }
    while let Some(x) = q.pop_front() {
        if out.len() == want {
            break;
        }
        out.push(x);
        for &y in g.neighbors(x) {
            if allowed[y] && !seen[y] {
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    out
}

/// Turns a model of `K_{2n-1}` into a balanced model of `K_n`.
///
/// Branch sets are sorted by `(size, index)`; with `t = |X_n|`, each
/// `X_i` (`i < n`) absorbs a connected chunk of `X_{2n-i}` of size `t - |X_i|`
/// grown by BFS from the least vertex of `X_{2n-i}` adjacent to `X_i`.
/// Pattern vertex `i` of the output corresponds to the `i`-th smallest input set.
pub fn balance_clique(model: &MinorModel) -> Result<MinorModel> {
    model.ensure_valid("input model")?;
    let p = model.pattern.n();
    if p % 2 == 0 || model.pattern.m() != p * (p - 1) / 2 {
        return Err(Error::input(format!("pattern must be a complete graph on an odd number of vertices, got n={p}")));
    }
    let n = p.div_ceil(2);
    let g = &model.host;
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&u| (model.branch[u].len(), u));
    let sets: Vec<&Vec<usize>> = order.iter().map(|&u| &model.branch[u]).collect();
    let t = sets[n - 1].len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = sets[i].clone();
        let need = t - x.len();
        if need > 0 {
            let donor = sets[2 * n - 2 - i];
            let mut mine = vec![false; g.n()];
            x.iter().for_each(|&v| mine[v] = true);
            let contact = donor
                .iter()
                .copied()
                .find(|&v| g.neighbors(v).iter().any(|&y| mine[y]))
                .ok_or_else(|| Error::Internal(format!("branch sets {i} and {} are not adjacent", 2 * n - 2 - i)))?;
            let mut allowed = vec![false; g.n()];
            donor.iter().for_each(|&v| allowed[v] = true);
            let z = bfs_prefix(g, &[contact], &allowed, need);
            if z.len() != need {
                return Err(Error::Internal("donor branch set too small".into()));
            }
            x.extend(z);
        }
        out.push(x);
    }
    let result = MinorModel::new(complete(n), g.clone(), out);
    check_output(&result, true)?;
    Ok(result)
}

fn check_output(m: &MinorModel, balanced: bool) -> Result<()> {
    verify_model(m).map_err(|v| Error::Internal(format!("constructed model fails verification: {v}")))?;
    if balanced && !m.is_balanced() {
        return Err(Error::Internal("constructed model is not balanced".into()));
    }
    Ok(())
}

/// Chords `(a, b)` and `(c, d)` of a convex polygon given by positions.
fn crossing(a: usize, b: usize, c: usize, d: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let inside = |x: usize| a < x && x < b;
    let distinct = c != a && c != b && d != a && d != b;
    distinct && inside(c) != inside(d)
}

/// A circular order of the vertices in which all edges are pairwise non-crossing chords.
pub fn outerplanar_order(p: &Graph) -> Option<Vec<usize>> {
    let n = p.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut pos = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    pos[0] = 0;
    order.push(0);
    if place_next(p, &mut pos, &mut order) {
        Some(order)
    } else {
        None
    }
}

fn place_next(p: &Graph, pos: &mut [usize], order: &mut Vec<usize>) -> bool {
    let n = p.n();
    if order.len() == n {
        return true;
    }
    let here = order.len();
    for v in 0..n {
        if pos[v] != usize::MAX {
            continue;
        }
        pos[v] = here;
        order.push(v);
        if placement_ok(p, pos, order, v) && place_next(p, pos, order) {
            return true;
        }
        order.pop();
        pos[v] = usize::MAX;
    }
    false
}

fn placement_ok(p: &Graph, pos: &[usize], order: &[usize], v: usize) -> bool {
    let placed_edges: Vec<(usize, usize)> = p
        .edges()
        .iter()
        .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
        .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
        .collect();
    let pv = pos[v];
    for &u in p.neighbors(v) {
        if pos[u] == usize::MAX {
            continue;
        }
        if placed_edges.iter().any(|&(a, b)| crossing(a, b, pos[u], pv)) {
            return false;
        }
    }
    // A placed vertex strictly inside a chord cannot reach later positions.
    for (q, &x) in order.iter().enumerate() {
        let open = p.neighbors(x).iter().any(|&y| pos[y] == usize::MAX);
        if open && placed_edges.iter().any(|&(a, b)| a < q && q < b) {
            return false;
        }
    }
    true
}

/// Edges (as position pairs) of a maximal outerplanar supergraph on the circle `0..n`.
fn triangulate(n: usize, chords: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for i in 0..n.saturating_sub(1) {
        edges.push((i, i + 1));
    }
    if n >= 3 {
        edges.push((0, n - 1));
    }
    edges.sort_unstable();
    edges.dedup();
    let mut stack = vec![(0..n).collect::<Vec<_>>()];
    while let Some(poly) = stack.pop() {
        let l = poly.len();
        if l <= 3 {
            continue;
        }
        let mut split = None;
        'find: for i in 0..l {
            for j in i + 2..l {
                if i == 0 && j == l - 1 {
                    continue;
                }
                let (a, b) = (poly[i].min(poly[j]), poly[i].max(poly[j]));
                if edges.binary_search(&(a, b)).is_ok() {
                    split = Some((i, j));
                    break 'find;
                }
            }
        }
        match split {
            Some((i, j)) => {
                stack.push(poly[i..=j].to_vec());
                let mut rest = poly[j..].to_vec();
                rest.extend_from_slice(&poly[..=i]);
                stack.push(rest);
            }
            None => {
                let lo = (0..l).min_by_key(|&i| poly[i]).unwrap_or(0);
                for d in 2..l - 1 {
                    let w = poly[(lo + d) % l];
                    let e = (poly[lo].min(w), poly[lo].max(w));
                    if let Err(at) = edges.binary_search(&e) {
                        edges.insert(at, e);
                    }
                }
            }
        }
    }
    edges
}

/// Model of an outerplanar graph in the `n × n` grid (`n = |V(p)|`).
///
/// Grid vertex `(i, j)` (1-based) has id `(i-1)·n + (j-1)`. Every branch set
/// contains exactly one diagonal vertex `(k, k)` and no `(a, b)` with `a > b`.
pub fn embed_outerplanar(p: &Graph) -> Result<MinorModel> {
    let n = p.n();
    if n == 0 {
        return Err(Error::input("pattern must have at least one vertex"));
    }
    let host = grid(n, n);
    if n == 1 {
        return Ok(MinorModel::new(p.clone(), host, vec![vec![0]]));
    }
    let order = outerplanar_order(p).ok_or_else(|| Error::input("graph is not outerplanar"))?;
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let chords: Vec<(usize, usize)> = p.edges().iter().map(|&(a, b)| (pos[a], pos[b])).collect();
    let tri = triangulate(n, &chords);
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in &tri {
        adj[a + 1].push(b + 1);
        adj[b + 1].push(a + 1);
    }
    let left = |k: usize| adj[k].iter().copied().filter(|&x| x < k).min().unwrap_or(k);
    let right = |k: usize| adj[k].iter().copied().filter(|&x| x > k).max().unwrap_or(k);
    let id = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut branch = vec![Vec::new(); n];
    for k in 1..=n {
        let mut x = Vec::new();
        if k == 1 {
            x.extend((1..right(1)).map(|j| id(1, j)));
        } else if k == n {
            x.extend((left(n)..=n).map(|i| id(i, n)));
        } else {
            x.extend((left(k) + 1..=k).map(|i| id(i, k)));
            x.extend((k..right(k)).map(|j| id(k, j)));
        }
        branch[order[k - 1]] = x;
    }
    let m = MinorModel::new(p.clone(), host, branch);
    check_output(&m, false)?;
    Ok(m)
}

/// Each branch set meets the diagonal of the `n × n` grid exactly once and avoids `(a, b)` with `a > b`.
pub fn has_diagonal_property(m: &MinorModel, n: usize) -> bool {
    m.branch.iter().all(|set| {
        let diag = set.iter().filter(|&&x| x / n == x % n).count();
        diag == 1 && set.iter().all(|&x| x / n <= x % n)
    })
}

/// Balanced model of an `n`-vertex outerplanar graph through a model of the `n² × 4n` grid.
///
/// Pattern vertex `(i, j)` of the grid model (1-based, `i ≤ n²`, `j ≤ 4n`) has
/// id `(i-1)·4n + (j-1)`. The `n × n` block of least host weight carries the
/// outerplanar model; each branch set is then padded through a private path in
/// the neighbouring band of blocks into a private block two steps away.
pub fn balanced_outerplanar_in_grid(p: &Graph, host_model: &MinorModel) -> Result<MinorModel> {
    let n = p.n();
    if n == 0 {
        return Err(Error::input("pattern must have at least one vertex"));
    }
    let (rows, cols) = (n * n, 4 * n);
    let expected = grid(rows, cols);
    if host_model.pattern.n() != expected.n() || host_model.pattern.edges() != expected.edges() {
        return Err(Error::input(format!("host model must be a model of the {rows}x{cols} grid")));
    }
    host_model.ensure_valid("host model")?;
    let h = &host_model.host;
    let gid = |i: usize, j: usize| (i - 1) * cols + (j - 1);
    let weight = |i: usize, j: usize| host_model.branch[gid(i, j)].len();
    let block = |a: usize| (a - 1) * n + 1..=a * n;
    let block_weight = |a: usize, b: usize| -> usize {
        block(a).map(|i| block(b).map(|j| weight(i, j)).sum::<usize>()).sum()
    };
    let mut best = (usize::MAX, 0, 0);
    for a in 1..=n {
        for b in 1..=4 {
            let w = block_weight(a, b);
            if w < best.0 {
                best = (w, a, b);
            }
        }
    }
    let (_, a0, b0) = best;
    let far = b0 >= 3;
    let local = |x: usize, y: usize| -> (usize, usize) {
        let i = (a0 - 1) * n + x;
        let j = if far { (b0 - 1) * n + y } else { b0 * n + 1 - y };
        (i, j)
    };
    let band = |d: usize| if far { (b0 - 1) * n + 1 - d } else { b0 * n + d };
    let cell_cols = if far { block(b0 - 2) } else { block(b0 + 2) };

    let embed = embed_outerplanar(p)?;
    let mut zs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n);
    let mut diag_of = vec![0; n];
    for (v, set) in embed.branch.iter().enumerate() {
        let mut z: Vec<(usize, usize)> = set.iter().map(|&id| local(id / n + 1, id % n + 1)).collect();
        let k = set
            .iter()
            .find(|&&id| id / n == id % n)
            .map(|&id| id / n + 1)
            .ok_or_else(|| Error::Internal("outerplanar model lacks a diagonal vertex".into()))?;
        diag_of[v] = k;
        z.extend((1..k).map(|y| local(k, y)));
        zs.push(z);
    }

    let start = |k: usize| (a0 - 1) * n + k;
    let target = |k: usize| start(k).clamp((k - 1) * n + 1, k * n);
    let mut depth = vec![1; n + 1];
    let right: Vec<usize> = (1..=n).filter(|&k| target(k) > start(k)).collect();
    let leftward: Vec<usize> = (1..=n).filter(|&k| target(k) < start(k)).collect();
    for (idx, &k) in right.iter().enumerate() {
        depth[k] = n - idx;
    }
    for (idx, &k) in leftward.iter().enumerate() {
        depth[k] = idx + 1;
    }
    let reservoir = |k: usize| -> Vec<(usize, usize)> {
        let (s, c, d) = (start(k), target(k), depth[k]);
        let mut cells: Vec<(usize, usize)> = (1..=d).map(|t| (s, band(t))).collect();
        if c > s {
            cells.extend((s + 1..=c).map(|i| (i, band(d))));
        } else {
            cells.extend((c..s).rev().map(|i| (i, band(d))));
        }
        cells.extend((d + 1..=n).map(|t| (c, band(t))));
        for i in block(k) {
            cells.extend(cell_cols.clone().map(|j| (i, j)));
        }
        cells
    };

    let hosts_of = |cells: &[(usize, usize)]| -> Vec<usize> {
        cells.iter().flat_map(|&(i, j)| host_model.branch[gid(i, j)].iter().copied()).collect()
    };
    let bases: Vec<Vec<usize>> = zs.iter().map(|z| hosts_of(z)).collect();
    let size = bases.iter().map(Vec::len).max().unwrap_or(0);
    let mut branch = Vec::with_capacity(n);
    for (v, base) in bases.into_iter().enumerate() {
        let mut allowed = vec![false; h.n()];
        for x in hosts_of(&reservoir(diag_of[v])) {
            allowed[x] = true;
        }
        base.iter().for_each(|&x| allowed[x] = true);
        let grown = bfs_prefix(h, &base, &allowed, size);
        if grown.len() != size {
            return Err(Error::Internal(format!("not enough room to pad branch set {v}")));
        }
        branch.push(grown);
    }
    let m = MinorModel::new(p.clone(), h.clone(), branch);
    check_output(&m, true)?;
    Ok(m)
}

/// Human-readable summary used in reports.
pub fn describe(m: &MinorModel) -> String {
    let sizes: Vec<String> = m.branch.iter().map(|b| format!("{}", b.len())).collect();
    format!("model of a {}-vertex pattern in a {}-vertex host, branch sizes [{}]", m.pattern.n(), m.host.n(), sizes.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, generate, path, Family};

    #[test]
    fn verify_examples() {
        let g = cycle(5);
        let id = MinorModel::identity(&g);
        assert!(id.verify().is_ok() && id.is_balanced());
        let bad = MinorModel::new(complete(2), path(3), vec![vec![0, 1], vec![1, 2]]);
        assert!(matches!(bad.verify(), Err(ModelViolation::Overlap { .. })));
        let k3 = MinorModel::new(complete(3), cycle(6), vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert!(k3.verify().is_ok() && k3.is_balanced());
        let split = MinorModel::new(complete(2), path(4), vec![vec![0, 2], vec![1]]);
        assert_eq!(split.verify(), Err(ModelViolation::Disconnected(0)));
        let far = MinorModel::new(complete(2), path(4), vec![vec![0], vec![3]]);
        assert_eq!(far.verify(), Err(ModelViolation::MissingEdge(0, 1)));
    }

    fn subdivided_k5_model() -> MinorModel {
        let k5 = complete(5);
        let mut lengths = vec![1u64; k5.m()];
        for (a, b) in [(2, 3), (3, 4), (0, 4), (1, 4)] {
            lengths[k5.edge_index(a, b).unwrap()] = 2;
        }
        let (h, map) = k5.subdivide(&lengths).unwrap();
        let mid = |a, b| map.internal_from(a, b).unwrap()[0];
        let branch = vec![
            vec![0],
            vec![1],
            vec![2, mid(2, 3)],
            vec![3, mid(3, 4)],
            vec![4, mid(4, 0), mid(4, 1)],
        ];
        MinorModel::new(k5, h, branch)
    }

    #[test]
    fn balance_clique_examples() {
        let id = MinorModel::identity(&complete(5));
        let out = balance_clique(&id).unwrap();
        assert_eq!(out.branch_size(), Some(1));
        assert_eq!(out.branch_sets(), &[vec![0], vec![1], vec![2]]);

        let m = subdivided_k5_model();
        assert!(m.verify().is_ok());
        let out = balance_clique(&m).unwrap();
        assert_eq!(out.pattern().n(), 3);
        assert_eq!(out.branch_size(), Some(2));

        let k3 = MinorModel::new(complete(3), cycle(6), vec![vec![0], vec![1, 2, 3], vec![4, 5]]);
        let out = balance_clique(&k3).unwrap();
        assert_eq!(out.branch_size(), Some(2));
        assert!(balance_clique(&MinorModel::identity(&complete(4))).is_err());
    }

    #[test]
    fn embed_triangle() {
        let m = embed_outerplanar(&complete(3)).unwrap();
        assert_eq!(m.branch_sets(), &[vec![0, 1], vec![4], vec![2, 5, 8]]);
        assert!(has_diagonal_property(&m, 3));
        let single = embed_outerplanar(&Graph::empty(1)).unwrap();
        assert_eq!(single.branch_sets(), &[vec![0]]);
    }

    #[test]
    fn embed_random_outerplanar() {
        for seed in 0..30 {
            for n in 2..=9 {
                let p = generate(&Family::RandomMaximalOuterplanar { n }, seed).unwrap();
                let m = embed_outerplanar(&p).unwrap();
                assert!(m.verify().is_ok());
                assert!(has_diagonal_property(&m, n));
            }
        }
        let forest = Graph::from_edges(5, &[(0, 3), (1, 4)]).unwrap();
        assert!(embed_outerplanar(&forest).unwrap().verify().is_ok());
    }

    #[test]
    fn rejects_non_outerplanar() {
        assert!(matches!(embed_outerplanar(&complete(4)), Err(Error::InvalidInput(_))));
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(embed_outerplanar(&k23).is_err());
    }

    #[test]
    fn balanced_in_grid() {
        let host = MinorModel::identity(&grid(9, 12));
        let m = balanced_outerplanar_in_grid(&complete(3), &host).unwrap();
        assert!(m.verify().is_ok() && m.is_balanced());
        let host = MinorModel::identity(&grid(16, 16));
        let m = balanced_outerplanar_in_grid(&path(4), &host).unwrap();
        assert!(m.verify().is_ok() && m.is_balanced());
        let host = MinorModel::identity(&grid(1, 4));
        assert_eq!(balanced_outerplanar_in_grid(&Graph::empty(1), &host).unwrap().branch_size(), Some(1));
        assert!(balanced_outerplanar_in_grid(&complete(3), &MinorModel::identity(&grid(9, 11))).is_err());
    }

    #[test]
    fn balanced_in_weighted_grid() {
        // Subdividing some grid edges gives branch sets of varying size.
        let g = grid(16, 16);
        let lengths: Vec<u64> = (0..g.m()).map(|e| 1 + (e % 3 == 0) as u64).collect();
        let (h, map) = g.subdivide(&lengths).unwrap();
        let mut branch: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
        for &(a, b) in g.edges() {
            branch[a].extend(map.internal_from(a, b).unwrap());
        }
        let host = MinorModel::new(g, h, branch);
        assert!(host.verify().is_ok());
        for seed in 0..3 {
            let p = generate(&Family::RandomMaximalOuterplanar { n: 4 }, seed).unwrap();
            let m = balanced_outerplanar_in_grid(&p, &host).unwrap();
            assert!(m.verify().is_ok() && m.is_balanced());
        }
    }
}
