//! Lower-bound certificates for `bcw₁` and subtree counting in complete binary trees.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::MinorModel;
use crate::naf::g_of_k;

/// Result of [`expansion_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// Every `a`-set has at least `k` outside neighbours, so `bcw₁ > k`.
    Certified { a: usize, k: usize },
    /// The colex-first `a`-set with fewer than `k` outside neighbours.
    Violation { set: Vec<usize>, boundary: usize },
}

impl Expansion {
    pub fn is_certified(&self) -> bool {
        matches!(self, Expansion::Certified { .. })
    }
}

fn binomial_capped(n: usize, k: usize, cap: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap {
            return cap + 1;
        }
    }
    acc
}

/// Checks `|N(A)| ≥ k` for every `A` with `|A| = a`, scanning sets in colex order.
pub fn expansion_certificate(g: &Graph, a: usize, k: usize, max_sets: u64) -> Result<Expansion> {
    let n = g.n();
    if a == 0 || a > n {
        return Err(Error::input(format!("need 1 ≤ a ≤ n, got a={a}, n={n}")));
    }
    if binomial_capped(n, a, max_sets as u128) > max_sets as u128 {
        return Err(Error::limit(format!("more than {max_sets} subsets of size {a}")));
    }
    let mut c: Vec<usize> = (0..a).collect();
    let mut mark = vec![0u32; n];
    let mut stamp = 0u32;
    loop {
        stamp += 1;
        for &v in &c {
            mark[v] = stamp;
        }
        let mut boundary = 0;
        for &v in &c {
            for &u in g.neighbors(v) {
                if mark[u] != stamp {
                    mark[u] = stamp;
                    boundary += 1;
                }
            }
        }
        if boundary < k {
            return Ok(Expansion::Violation { set: c, boundary });
        }
        let mut i = 0;
        while i < a && c[i] + 1 == if i + 1 < a { c[i + 1] } else { n } {
            i += 1;
        }
        if i == a {
            return Ok(Expansion::Certified { a, k });
        }
        c[i] += 1;
        for (j, slot) in c.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
}

/// `⌈min(h, (h+3)/2)⌉`, the bound forced by a balanced `K_h` minor.
pub fn clique_bound(h: usize) -> usize {
    h.min((h + 4) / 2)
}

/// Lower bound on `bcw₁(host)` from a balanced clique model.
pub fn lb_balanced_clique(model: &MinorModel) -> Result<usize> {
    let h = model.pattern().n();
    if model.pattern().m() != h * h.saturating_sub(1) / 2 {
        return Err(Error::input("pattern is not a complete graph"));
    }
    model.verify().map_err(|v| Error::input(format!("model: {v}")))?;
    if !model.is_balanced() {
        return Err(Error::input("model is not balanced"));
    }
    Ok(clique_bound(h))
}

/// `1 + max{k : g(k) ≤ nodes}`, or 1 when `nodes < g(1)`.
pub fn bintree_bound(nodes: &BigUint) -> Result<usize> {
    let mut k = 0u64;
    while g_of_k(k + 1)? <= *nodes {
        k += 1;
    }
    Ok(k as usize + 1)
}

/// Depth of a graph that is a complete binary tree, with its root.
pub fn complete_binary_tree_shape(t: &Graph) -> Option<(usize, usize)> {
    let n = t.n();
    if n == 1 {
        return Some((0, 0));
    }
    if n == 0 || t.m() + 1 != n || !t.is_connected() {
        return None;
    }
    let mut roots = (0..n).filter(|&v| t.degree(v) == 2);
    let root = roots.next()?;
    if roots.next().is_some() {
        return None;
    }
    let dist = t.distances(root);
    let depth = dist.iter().flatten().copied().max()?;
    let leaves_ok = (0..n).all(|v| (t.degree(v) == 1) == (dist[v] == Some(depth)));
    (leaves_ok && n + 1 == 2usize.checked_pow(depth as u32 + 1)?).then_some((depth, root))
}

/// Lower bound on `bcw₁(host)` from a balanced complete-binary-tree model.
pub fn lb_balanced_bintree(model: &MinorModel) -> Result<usize> {
    complete_binary_tree_shape(model.pattern()).ok_or_else(|| Error::input("pattern is not a complete binary tree"))?;
    model.verify().map_err(|v| Error::input(format!("model: {v}")))?;
    if !model.is_balanced() {
        return Err(Error::input("model is not balanced"));
    }
    bintree_bound(&BigUint::from(model.pattern().n()))
}

/// `2^{h(u)+1} - 1 - Σ_{w∈N} (2^{h(w)+1} - 1)`.
///
/// `h_u` is the height below the subtree root and `boundary` the heights
/// below the vertices just outside the subtree.
pub fn subtree_count(h_u: u32, boundary: &[u32]) -> Result<u128> {
    let full = |h: u32| -> Result<u128> {
        1u128
            .checked_shl(h + 1)
            .map(|x| x - 1)
            .filter(|_| h < 127)
            .ok_or_else(|| Error::input("height too large"))
    };
    let mut total = full(h_u)?;
    for &h in boundary {
        total = total
            .checked_sub(full(h)?)
            .ok_or_else(|| Error::input("boundary heights exceed the subtree"))?;
    }
    if total == 0 {
        return Err(Error::input("boundary heights exceed the subtree"));
    }
    Ok(total)
}

/// Applies [`subtree_count`] to a connected vertex set of `cbt(h)` in heap order.
pub fn subtree_count_in_cbt(h: u32, nodes: &[usize]) -> Result<u128> {
    let n = (1usize << (h + 1)) - 1;
    let mut inside = vec![false; n];
    for &v in nodes {
        if v >= n {
            return Err(Error::input(format!("vertex {v} not in cbt({h})")));
        }
        inside[v] = true;
    }
    let depth = |v: usize| usize::BITS - (v + 1).leading_zeros() - 1;
    let tops: Vec<usize> = (0..n).filter(|&v| inside[v] && (v == 0 || !inside[(v - 1) / 2])).collect();
    let [top] = tops[..] else {
        return Err(Error::input("vertex set is not a connected subtree"));
    };
    let mut boundary = Vec::new();
    for v in 0..n {
        if inside[v] {
            for c in [2 * v + 1, 2 * v + 2] {
                if c < n && !inside[c] {
                    boundary.push(h - depth(c));
                }
            }
        }
    }
    subtree_count(h - depth(top), &boundary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cbt, complete, cycle, grid, path};

    #[test]
    fn expansion_examples() {
        assert_eq!(expansion_certificate(&cycle(5), 2, 2, 1000).unwrap(), Expansion::Certified { a: 2, k: 2 });
        assert!(expansion_certificate(&complete(5), 1, 4, 1000).unwrap().is_certified());
        assert_eq!(
            expansion_certificate(&path(4), 2, 2, 1000).unwrap(),
            Expansion::Violation { set: vec![0, 1], boundary: 1 }
        );
        assert!(matches!(expansion_certificate(&grid(6, 6), 10, 3, 1000), Err(Error::ResourceLimit(_))));
        assert!(expansion_certificate(&path(4), 0, 1, 10).is_err());
    }

    #[test]
    fn clique_bounds() {
        let got: Vec<usize> = (1..=8).map(clique_bound).collect();
        assert_eq!(got, [1, 2, 3, 4, 4, 5, 5, 6]);
        let m = MinorModel::new(complete(3), cycle(6), vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert_eq!(lb_balanced_clique(&m).unwrap(), 3);
        let unbalanced = MinorModel::new(complete(3), cycle(6), vec![vec![0], vec![1, 2, 3], vec![4, 5]]);
        assert!(lb_balanced_clique(&unbalanced).is_err());
    }

    #[test]
    fn bintree_bounds() {
        let b = |x: u32| bintree_bound(&BigUint::from(x)).unwrap();
        assert_eq!(b(1364), 1);
        assert_eq!(b(1365), 2);
        assert_eq!(b(87380), 2);
        assert_eq!(b(87381), 3);
        assert_eq!(b(349525), 3);
        assert_eq!(complete_binary_tree_shape(&cbt(3)), Some((3, 0)));
        assert_eq!(complete_binary_tree_shape(&path(4)), None);
        assert_eq!(lb_balanced_bintree(&MinorModel::identity(&cbt(2))).unwrap(), 1);
        assert!(lb_balanced_bintree(&MinorModel::identity(&path(5))).is_err());
    }

    #[test]
    fn subtree_counts() {
        assert_eq!(subtree_count(3, &[]).unwrap(), 15);
        assert_eq!(subtree_count(2, &[1, 1]).unwrap(), 1);
        assert!(subtree_count(1, &[1]).is_err());
        assert_eq!(subtree_count_in_cbt(2, &[0]).unwrap(), 1);
        assert_eq!(subtree_count_in_cbt(3, &[1, 3, 4, 9]).unwrap(), 4);
        assert!(subtree_count_in_cbt(2, &[1, 2]).is_err());
    }
}
