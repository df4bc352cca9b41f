//! Tree decompositions, nice decompositions and subdivision strategies.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::game::{ensure_win, CopStrategy, Radius};
use crate::graph::{Graph, SubdivisionMap, DEFAULT_SUBDIVISION_CAP};
use crate::VertexSet;

/// A rooted tree with ordered children and a bag per node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl TreeDecomposition {
    /// Orients undirected tree edges away from `root`. Children keep the order
    /// in which their edges appear.
    pub fn new(bags: Vec<Vec<usize>>, edges: &[(usize, usize)], root: usize) -> Result<Self> {
        let t = bags.len();
        if t == 0 {
            return Err(Error::input("a tree decomposition needs at least one node"));
        }
        if root >= t {
            return Err(Error::input(format!("root {root} out of range")));
        }
        if edges.len() + 1 != t {
            return Err(Error::input(format!("{t} nodes need {} tree edges, got {}", t - 1, edges.len())));
        }
        let mut adj = vec![Vec::new(); t];
        for &(a, b) in edges {
            if a >= t || b >= t || a == b {
                return Err(Error::input(format!("bad tree edge ({a},{b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut children = vec![Vec::new(); t];
        let mut seen = vec![false; t];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    children[x].push(y);
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::input("tree edges do not form a tree"));
        }
        Ok(Self::from_children(bags, children, root))
    }

    fn from_children(bags: Vec<Vec<usize>>, children: Vec<Vec<usize>>, root: usize) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, children, root }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn bag(&self, x: usize) -> &[usize] {
        &self.bags[x]
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn children(&self, x: usize) -> &[usize] {
        &self.children[x]
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// `(parent, child)` pairs in depth-first order.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        self.preorder()
            .into_iter()
            .flat_map(|x| self.children[x].iter().map(move |&c| (x, c)))
            .collect()
    }

    /// Nodes with every node before its children, left subtrees first.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.children[x].iter().rev());
        }
        out
    }

    /// Nodes with every node after its children.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = self.preorder();
        out.reverse();
        out
    }

    fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.len()];
        for x in self.postorder() {
            for &c in &self.children[x] {
                size[x] += size[c];
            }
        }
        size
    }

    /// `V_u` for every node: the union of bags below `u`.
    fn below(&self, n: usize) -> Vec<VertexSet> {
        let mut sets: Vec<VertexSet> = self.bags.iter().map(|b| VertexSet::from_slice(n, b)).collect();
        for x in self.postorder() {
            for i in 0..self.children[x].len() {
                let c = self.children[x][i];
                let child = sets[c].clone();
                sets[x].union_with(&child);
            }
        }
        sets
    }
}

/// Bags cover all vertices and edges, and each vertex's bags form a subtree.
pub fn verify_td(g: &Graph, td: &TreeDecomposition) -> Result<()> {
    let n = g.n();
    let mut count = vec![0usize; n];
    for (x, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::input(format!("bag {x} contains vertex {v} outside the graph")));
            }
            count[v] += 1;
        }
    }
    if let Some(v) = count.iter().position(|&c| c == 0) {
        return Err(Error::input(format!("vertex {v} is in no bag")));
    }
    let sets: Vec<VertexSet> = td.bags.iter().map(|b| VertexSet::from_slice(n, b)).collect();
    for &(a, b) in g.edges() {
        if !sets.iter().any(|s| s.contains(a) && s.contains(b)) {
            return Err(Error::input(format!("edge ({a},{b}) is in no bag")));
        }
    }
    // Connectivity: count nodes containing v whose parent does not contain v.
    let mut tops = vec![0usize; n];
    for &v in &td.bags[td.root] {
        tops[v] += 1;
    }
    for (x, kids) in td.children.iter().enumerate() {
        for &c in kids {
            for &v in &td.bags[c] {
                if !sets[x].contains(v) {
                    tops[v] += 1;
                }
            }
        }
    }
    if let Some(v) = tops.iter().position(|&t| t > 1) {
        return Err(Error::input(format!("bags containing vertex {v} are not connected")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Start,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// A rooted decomposition whose nodes are start, introduce, forget or join nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    td: TreeDecomposition,
    kinds: Vec<NodeKind>,
}

impl NiceTreeDecomposition {
    /// Classifies the nodes of `td`, failing if it is not nice.
    pub fn from_td(g: &Graph, td: TreeDecomposition) -> Result<Self> {
        verify_td(g, &td)?;
        let mut kinds = Vec::with_capacity(td.len());
        for x in 0..td.len() {
            let bag = &td.bags[x];
            let kind = match td.children[x][..] {
                [] => NodeKind::Start,
                [c] => {
                    let child = &td.bags[c];
                    if bag.len() == child.len() + 1 && child.iter().all(|v| bag.binary_search(v).is_ok()) {
                        NodeKind::Introduce(*bag.iter().find(|v| child.binary_search(v).is_err()).expect("size differs"))
                    } else if bag.len() + 1 == child.len() && bag.iter().all(|v| child.binary_search(v).is_ok()) {
                        NodeKind::Forget(*child.iter().find(|v| bag.binary_search(v).is_err()).expect("size differs"))
                    } else {
                        return Err(Error::input(format!("node {x} is neither an introduce nor a forget node")));
                    }
                }
                [b, c] if td.bags[b] == *bag && td.bags[c] == *bag => NodeKind::Join,
                [_, _] => return Err(Error::input(format!("join node {x} has children with different bags"))),
                _ => return Err(Error::input(format!("node {x} has more than two children"))),
            };
            kinds.push(kind);
        }
        if g.n() > 0 && td.bags[td.root].len() != 1 {
            return Err(Error::input("root bag must have exactly one vertex"));
        }
        Ok(NiceTreeDecomposition { td, kinds })
    }

    pub fn td(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn kind(&self, x: usize) -> NodeKind {
        self.kinds[x]
    }

    pub fn kinds(&self) -> &[NodeKind] {
        &self.kinds
    }

    pub fn width(&self) -> usize {
        self.td.width()
    }

    pub fn len(&self) -> usize {
        self.td.len()
    }

    pub fn is_empty(&self) -> bool {
        self.td.is_empty()
    }
}

/// Converts a tree decomposition into a nice one of the same width with a root bag of size 1.
///
/// Each child is connected through forgets of its private vertices followed by
/// introduces of the parent's missing ones; several children are combined by
/// a left-leaning chain of joins.
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    verify_td(g, td)?;
    if td.bags[td.root].is_empty() {
        return Err(Error::input("root bag is empty"));
    }
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut children: Vec<Vec<usize>> = Vec::new();
    let mut add = |bag: Vec<usize>, kids: Vec<usize>| {
        bags.push(bag);
        children.push(kids);
        bags.len() - 1
    };
    let mut image = vec![usize::MAX; td.len()];
    for x in td.postorder() {
        let bag = &td.bags[x];
        if td.children[x].is_empty() {
            image[x] = add(bag.clone(), Vec::new());
            continue;
        }
        let mut heads = Vec::new();
        for &c in &td.children[x] {
            let mut cur = image[c];
            let mut cur_bag = td.bags[c].clone();
            for v in td.bags[c].iter().filter(|v| bag.binary_search(v).is_err()) {
                cur_bag.retain(|u| u != v);
                cur = add(cur_bag.clone(), vec![cur]);
            }
            for &v in bag.iter().filter(|v| td.bags[c].binary_search(v).is_err()) {
                let at = cur_bag.binary_search(&v).unwrap_err();
                cur_bag.insert(at, v);
                cur = add(cur_bag.clone(), vec![cur]);
            }
            heads.push(cur);
        }
        let mut acc = heads[0];
        for &h in &heads[1..] {
            acc = add(bag.clone(), vec![acc, h]);
        }
        image[x] = acc;
    }
    let mut cur = image[td.root];
    let mut cur_bag = td.bags[td.root].clone();
    while cur_bag.len() > 1 {
        cur_bag.pop();
        cur = add(cur_bag.clone(), vec![cur]);
    }
    let nice = TreeDecomposition::from_children(bags, children, cur);
    NiceTreeDecomposition::from_td(g, nice).map_err(|e| Error::Internal(format!("make_nice produced an invalid decomposition: {e}")))
}

/// Tree decomposition from an elimination ordering (first eliminated first).
///
/// Node `i` holds the `i`-th eliminated vertex together with its later
/// neighbours in the filled graph; its parent is the earliest of those
/// neighbours. Components are chained to the last eliminated vertex.
pub fn from_elimination_order(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return Err(Error::input("empty graph"));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::input("elimination order must be a permutation of the vertices"));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(Error::input("elimination order must be a permutation of the vertices"));
    }
    let mut later: Vec<Vec<usize>> = (0..n)
        .map(|i| g.neighbors(order[i]).iter().map(|&u| pos[u]).filter(|&j| j > i).collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n - 1);
    for i in 0..n {
        let mut hi = core::mem::take(&mut later[i]);
        hi.sort_unstable();
        hi.dedup();
        for (a, &x) in hi.iter().enumerate() {
            for &y in &hi[a + 1..] {
                later[x].push(y);
            }
        }
        let mut bag: Vec<usize> = hi.iter().map(|&j| order[j]).collect();
        bag.push(order[i]);
        bags.push(bag);
        match hi.first() {
            Some(&p) => edges.push((p, i)),
            None if i + 1 < n => edges.push((n - 1, i)),
            None => {}
        }
    }
    TreeDecomposition::new(bags, &edges, n - 1)
}

/// Edges of `g` as indices into `g.edges()`.
fn edge_sets(g: &Graph, x: &VertexSet, vb: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut e_ac = Vec::new();
    let mut i_ab = Vec::new();
    for (idx, &(a, b)) in g.edges().iter().enumerate() {
        let outside = |v: usize| vb.contains(v) && !x.contains(v);
        if (x.contains(a) && outside(b)) || (x.contains(b) && outside(a)) {
            e_ac.push(idx);
        }
        if outside(a) || outside(b) {
            i_ab.push(idx);
        }
    }
    (e_ac, i_ab)
}

struct JoinData {
    left_size: usize,
    e_ac: Vec<usize>,
    i_ab: Vec<usize>,
}

fn joins(g: &Graph, nice: &NiceTreeDecomposition) -> Vec<JoinData> {
    let td = &nice.td;
    let n = g.n();
    let below = td.below(n);
    let sizes = td.subtree_sizes();
    let mut out = Vec::new();
    for a in td.preorder() {
        if let [b, c] = td.children[a][..] {
            let x = VertexSet::from_slice(n, &td.bags[a]);
            let (e_ac, _) = edge_sets(g, &x, &below[c]);
            let (_, i_ab) = edge_sets(g, &x, &below[b]);
            out.push(JoinData { left_size: sizes[b], e_ac, i_ab });
        }
    }
    out
}

fn join_bound(j: &JoinData, lengths: &[u64]) -> Option<u128> {
    let q = u32::try_from(j.e_ac.len()).ok()?;
    let sum: u128 = j.i_ab.iter().map(|&f| (lengths[f] - 1) as u128).sum();
    1u128
        .checked_shl(q)
        .filter(|_| q < 127)?
        .checked_mul(j.left_size as u128)?
        .checked_mul(sum + 1)
}

/// Edge lengths (aligned with `g.edges()`) such that at every join node `a` with
/// children `b`, `c` and every `e ∈ E_{a,c}`:
/// `ℓ(e) ≥ 2^{|E_{a,c}|} · |T[b]| · (1 + Σ_{f ∈ I_{a,b}} (ℓ(f) − 1))`.
pub fn subdivision_lengths(g: &Graph, nice: &NiceTreeDecomposition, max_length: u64) -> Result<Vec<u64>> {
    let m = g.m();
    let js = joins(g, nice);
    let mut deps: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut indeg = vec![0usize; m];
    for j in &js {
        for &f in &j.i_ab {
            for &e in &j.e_ac {
                deps[f].push(e);
                indeg[e] += 1;
            }
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..m).filter(|&e| indeg[e] == 0).map(Reverse).collect();
    let mut topo = Vec::with_capacity(m);
    while let Some(Reverse(e)) = heap.pop() {
        topo.push(e);
        for &x in &deps[e] {
            indeg[x] -= 1;
            if indeg[x] == 0 {
                heap.push(Reverse(x));
            }
        }
    }
    if topo.len() != m {
        return Err(Error::Internal("edge dependency graph has a cycle".into()));
    }
    let mut rank = vec![0; m];
    for (i, &e) in topo.iter().enumerate() {
        rank[e] = i;
    }
    let mut constraints: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ji, j) in js.iter().enumerate() {
        for &e in &j.e_ac {
            constraints[e].push(ji);
        }
    }
    let mut lengths = vec![1u64; m];
    for &e in &topo {
        let mut best: u128 = 1;
        for &ji in &constraints[e] {
            debug_assert!(js[ji].i_ab.iter().all(|&f| rank[f] < rank[e]));
            let bound = join_bound(&js[ji], &lengths).ok_or_else(|| Error::limit("edge length overflow"))?;
            best = best.max(bound);
        }
        if best > max_length as u128 {
            return Err(Error::limit(format!("edge length {best} exceeds the cap {max_length}")));
        }
        lengths[e] = best as u64;
    }
    Ok(lengths)
}

/// Whether `lengths` satisfies the join inequalities of [`subdivision_lengths`].
pub fn lengths_satisfy_joins(g: &Graph, nice: &NiceTreeDecomposition, lengths: &[u64]) -> bool {
    joins(g, nice).iter().all(|j| match join_bound(j, lengths) {
        Some(b) => j.e_ac.iter().all(|&e| lengths[e] as u128 >= b),
        None => false,
    })
}

/// Output of [`treesub_strategy`].
#[derive(Clone, Debug)]
pub struct TreeSubdivision {
    pub graph: Graph,
    pub map: SubdivisionMap,
    pub lengths: Vec<u64>,
    pub strategy: CopStrategy,
}

/// Subdivision of `g` with a radius-1 strategy for `width + 3` cops.
///
/// Per node `u` the strategy starts with `X_u` and clears `V'_u` (branch
/// vertices below `u` plus the paths of edges not inside `X_u`) while never
/// letting the robber into `X_u`. Start, introduce, forget and join nodes
/// follow the recursive construction; budget and the round bound
/// `m_u ≤ |T[u]|·(1 + |V'_u| − |V_u|)` are asserted at every node, and the
/// final strategy is verified.
pub fn treesub_strategy(g: &Graph, nice: &NiceTreeDecomposition) -> Result<TreeSubdivision> {
    treesub_strategy_capped(g, nice, DEFAULT_SUBDIVISION_CAP)
}

pub fn treesub_strategy_capped(g: &Graph, nice: &NiceTreeDecomposition, max_vertices: u64) -> Result<TreeSubdivision> {
    let td = &nice.td;
    NiceTreeDecomposition::from_td(g, td.clone())?;
    let n = g.n();
    if n == 0 {
        return Err(Error::input("empty graph"));
    }
    let lengths = subdivision_lengths(g, nice, max_vertices)?;
    let (h, map) = g.subdivide_capped(&lengths, max_vertices)?;
    let k = nice.width();
    let budget = k + 3;
    let below = td.below(n);
    let sizes = td.subtree_sizes();
    let extra = |u: usize| -> u128 {
        let x = &td.bags[u];
        g.edges()
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| {
                below[u].contains(a) && below[u].contains(b) && !(x.binary_search(&a).is_ok() && x.binary_search(&b).is_ok())
            })
            .map(|(i, _)| (lengths[i] - 1) as u128)
            .sum()
    };
    let internal = |a: usize, b: usize| map.internal_from(a, b).expect("edge of g");
    let mut plans: Vec<Option<Vec<Vec<usize>>>> = vec![None; td.len()];
    for u in td.postorder() {
        let xu = td.bags[u].clone();
        let plan = match nice.kinds[u] {
            NodeKind::Start => vec![xu],
            NodeKind::Introduce(_) => {
                let child = plans[td.children[u][0]].take().expect("child planned");
                let mut p = vec![xu];
                p.extend(child.into_iter().skip(1));
                p
            }
            NodeKind::Forget(p) => {
                let v = td.children[u][0];
                let child = plans[v].take().expect("child planned");
                let xv = &td.bags[v];
                let mut fresh = Vec::new();
                for &y in g.neighbors(p) {
                    if xv.binary_search(&y).is_ok() {
                        fresh.extend(internal(p, y));
                    }
                }
                let t = fresh.len();
                let mut out = vec![xu];
                if t <= 2 {
                    let mut r = xv.clone();
                    r.extend(&fresh);
                    out.push(r);
                } else {
                    for i in 0..t - 1 {
                        let mut r = xv.clone();
                        r.push(fresh[i]);
                        r.push(fresh[i + 1]);
                        out.push(r);
                    }
                }
                out.extend(child.into_iter().skip(1));
                out
            }
            NodeKind::Join => {
                let (v, w) = (td.children[u][0], td.children[u][1]);
                let left = plans[v].take().expect("left planned");
                let right = plans[w].take().expect("right planned");
                let xs = VertexSet::from_slice(n, &xu);
                let (e_uw, _) = edge_sets(g, &xs, &below[w]);
                let q = e_uw.len() as u32;
                let mm = sizes[v] as u128 * (1 + extra(v));
                let mut seq = Vec::new();
                for (i, &e) in e_uw.iter().enumerate() {
                    let (a, b) = g.edges()[e];
                    let (x, y) = if xs.contains(a) { (a, b) } else { (b, a) };
                    let take = (1u128 << (q - 1 - i as u32)) * mm;
                    let path = internal(x, y);
                    if (path.len() as u128) < take {
                        return Err(Error::Internal(format!("path for edge ({a},{b}) is too short")));
                    }
                    seq.extend_from_slice(&path[..take as usize]);
                }
                let mut out = vec![xu.clone()];
                for i in 1..seq.len() {
                    let mut r = xu.clone();
                    r.push(seq[i]);
                    r.push(seq[i - 1]);
                    out.push(r);
                }
                if let Some(&last) = seq.last() {
                    let mut r = xu.clone();
                    r.push(last);
                    out.push(r);
                }
                out.extend(left.into_iter().skip(1));
                out.push(xu);
                out.extend(right.into_iter().skip(1));
                out
            }
        };
        let bound = sizes[u] as u128 * (1 + extra(u));
        if plan.len() as u128 > bound {
            return Err(Error::Internal(format!("node {u}: {} rounds exceed the bound {bound}", plan.len())));
        }
        if let Some(r) = plan.iter().find(|r| r.len() > budget) {
            return Err(Error::Internal(format!("node {u}: round with {} cops exceeds {budget}", r.len())));
        }
        plans[u] = Some(plan);
    }
    let rounds = plans[td.root].take().expect("root planned");
    let strategy = CopStrategy::bcw(Radius::ONE, budget, rounds);
    ensure_win(&h, &strategy).map_err(|e| Error::Internal(format!("subdivision strategy does not win: {e}")))?;
    Ok(TreeSubdivision { graph: h, map, lengths, strategy })
}
