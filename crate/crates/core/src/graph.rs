//! Simple undirected graphs on dense ids and the subdivision operation.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Default cap on the vertex count of a subdivision.
pub const DEFAULT_SUBDIVISION_CAP: u64 = 1 << 24;

/// Finite simple undirected graph with vertex ids `0..n`.
///
/// Edges are stored as sorted pairs `(u, v)` with `u < v`, in lexicographic order;
/// edge indices used elsewhere in the crate refer to this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Diameter of a graph; disconnected graphs have infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::input(format!("edge ({a},{b}) has an id outside 0..{n}")));
            }
            if a == b {
                return Err(Error::input(format!("self-loop at {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate edge ({},{})", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted_unique(n, norm))
    }

    /// Like [`from_edges`](Self::from_edges) but silently drops duplicates.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::input(format!("bad edge ({a},{b}) for n={n}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Self::from_sorted_unique(n, norm))
    }

    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Index of edge `{a, b}` in [`edges`](Self::edges).
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn vertex_set(&self, ids: &[usize]) -> Result<VertexSet> {
        VertexSet::try_from_slice(self.n, ids)
            .map_err(|v| Error::input(format!("vertex {v} outside 0..{}", self.n)))
    }

    fn check_set(&self, a: &VertexSet) -> Result<()> {
        if a.universe() != self.n {
            return Err(Error::input(format!(
                "vertex set over universe {} used with a graph on {} vertices",
                a.universe(),
                self.n
            )));
        }
        Ok(())
    }

    /// Open neighbourhood `N(A)`: vertices outside `A` adjacent to some vertex of `A`.
    pub fn neighborhood(&self, a: &VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        let mut s = self.spread_unchecked(a);
        s.difference_with(a);
        Ok(s)
    }

    /// `A ∪ N(A)`.
    pub fn spread(&self, a: &VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        Ok(self.spread_unchecked(a))
    }

    pub(crate) fn spread_unchecked(&self, a: &VertexSet) -> VertexSet {
        let mut s = a.clone();
        for v in a {
            for &u in &self.adj[v] {
                s.insert(u);
            }
        }
        s
    }

    /// Union of the neighbour lists of `A` (may intersect `A`).
    pub(crate) fn adjacent_to(&self, a: &VertexSet) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        for v in a {
            for &u in &self.adj[v] {
                s.insert(u);
            }
        }
        s
    }

    /// Closed neighbourhood `N[S]`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.spread(s)
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut q = VecDeque::new();
        dist[src] = Some(0);
        q.push_back(src);
        while let Some(v) = q.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    q.push_back(u);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances(0).iter().all(Option::is_some)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True if `set` induces a connected subgraph (the empty set counts as connected).
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return true;
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if set.contains(u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == set.len()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        for v in 0..self.n {
            if self.adj[v].is_empty() {
                s.insert(v);
            }
        }
        s
    }

    /// Subgraph induced on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            if v >= self.n {
                return Err(Error::input(format!("vertex {v} out of range")));
            }
            pos[v] = i;
        }
        let mut es = Vec::new();
        for &(a, b) in &self.edges {
            if pos[a] != usize::MAX && pos[b] != usize::MAX {
                es.push((pos[a], pos[b]));
            }
        }
        Graph::from_edges(vs.len(), &es)
    }

    /// Replaces edge `e` (index into [`edges`](Self::edges)) by a path with
    /// `lengths[e]` edges. New vertices get ids from `n` upward, edge by edge in
    /// sorted order, each path listed from its smaller endpoint.
    pub fn subdivide(&self, lengths: &[u64]) -> Result<(Graph, SubdivisionMap)> {
        self.subdivide_capped(lengths, DEFAULT_SUBDIVISION_CAP)
    }

    pub fn subdivide_capped(&self, lengths: &[u64], max_vertices: u64) -> Result<(Graph, SubdivisionMap)> {
        if lengths.len() != self.edges.len() {
            return Err(Error::input(format!(
                "{} lengths given for {} edges",
                lengths.len(),
                self.edges.len()
            )));
        }
        let mut total = self.n as u64;
        for (i, &l) in lengths.iter().enumerate() {
            if l == 0 {
                let (a, b) = self.edges[i];
                return Err(Error::input(format!("edge ({a},{b}) has length 0")));
            }
            total = total
                .checked_add(l - 1)
                .filter(|&t| t <= max_vertices)
                .ok_or_else(|| Error::limit(format!("subdivision exceeds {max_vertices} vertices")))?;
        }
        let total = total as usize;
        let mut edges = Vec::with_capacity(self.edges.len() + total - self.n);
        let mut paths = Vec::with_capacity(self.edges.len());
        let mut next = self.n;
        for (&(a, b), &l) in self.edges.iter().zip(lengths) {
            let mut path = Vec::with_capacity(l as usize + 1);
            path.push(a);
            for _ in 1..l {
                path.push(next);
                next += 1;
            }
            path.push(b);
            for w in path.windows(2) {
                edges.push((w[0].min(w[1]), w[0].max(w[1])));
            }
            paths.push(((a, b), path));
        }
        edges.sort_unstable();
        Ok((Graph::from_sorted_unique(total, edges), SubdivisionMap { original_n: self.n, paths }))
    }
}

/// Records, for each original edge, the path that replaced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionMap {
    original_n: usize,
    paths: Vec<((usize, usize), Vec<usize>)>,
}

impl SubdivisionMap {
    pub fn original_n(&self) -> usize {
        self.original_n
    }

    /// `(edge, path)` pairs in edge order; paths include both endpoints.
    pub fn paths(&self) -> &[((usize, usize), Vec<usize>)] {
        &self.paths
    }

    pub fn path(&self, a: usize, b: usize) -> Option<&[usize]> {
        let key = (a.min(b), a.max(b));
        self.paths
            .binary_search_by(|(e, _)| e.cmp(&key))
            .ok()
            .map(|i| self.paths[i].1.as_slice())
    }

    /// Internal vertices of the path for `{a, b}`, listed starting next to `a`.
    pub fn internal_from(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let p = self.path(a, b)?;
        let inner = &p[1..p.len() - 1];
        Some(if a < b { inner.to_vec() } else { inner.iter().rev().copied().collect() })
    }

    /// Edge set obtained by contracting every path back to a single edge.
    pub fn contracted_edges(&self, h: &Graph) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::with_capacity(self.paths.len());
        for ((a, b), p) in &self.paths {
            if p.first() != Some(a) || p.last() != Some(b) {
                return Err(Error::Internal(format!("path for ({a},{b}) has wrong endpoints")));
            }
            if p.windows(2).any(|w| !h.has_edge(w[0], w[1])) {
                return Err(Error::Internal(format!("path for ({a},{b}) is not a path in H")));
            }
            out.push((*a, *b));
        }
        Ok(out)
    }
}
