//! Deterministic graph families. Random families are pure functions of their seed.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// `rows × cols` grid; vertex `(i, j)` (1-based) has id `(i-1)*cols + (j-1)`.
    Grid { rows: usize, cols: usize },
    /// Grid on `{(i, j) : 1 ≤ i ≤ j ≤ n}`, ids in row-major order of that set.
    HalfGrid { n: usize },
    /// Complete binary tree of height `h` (`2^(h+1) - 1` vertices), heap order.
    Cbt { h: usize },
    /// `i ~ j` iff `0 < |i - j| ≤ p`.
    PathPower { n: usize, p: usize },
    RandomMaximalOuterplanar { n: usize },
    /// Erdős–Rényi `G(n, p)`.
    RandomGraph { n: usize, p: f64 },
    /// Random labelled tree with maximum degree at most `max_degree` (≥ 2).
    RandomTree { n: usize, max_degree: usize },
}

pub const FAMILY_NAMES: &[&str] = &[
    "complete",
    "complete_bipartite",
    "path",
    "cycle",
    "grid",
    "half_grid",
    "cbt",
    "path_power",
    "random_maximal_outerplanar",
    "random_graph",
    "random_tree",
];

fn positive(name: &str, v: usize) -> Result<usize> {
    if v == 0 {
        Err(Error::input(format!("{name} must be positive")))
    } else {
        Ok(v)
    }
}

impl Family {
    /// Parses a family name with its numeric parameters (as given on a command line).
    pub fn parse(name: &str, params: &[&str]) -> Result<Family> {
        let int = |i: usize| -> Result<usize> {
            let s = params
                .get(i)
                .ok_or_else(|| Error::input(format!("{name}: missing parameter {}", i + 1)))?;
            s.parse::<usize>()
                .map_err(|_| Error::input(format!("{name}: parameter {s:?} is not a non-negative integer")))
        };
        let want = |k: usize| -> Result<()> {
            if params.len() != k {
                Err(Error::input(format!("{name} takes {k} parameter(s), got {}", params.len())))
            } else {
                Ok(())
            }
        };
        let fam = match name {
            "complete" => {
                want(1)?;
                Family::Complete { n: int(0)? }
            }
            "complete_bipartite" => {
                want(2)?;
                Family::CompleteBipartite { a: int(0)?, b: int(1)? }
            }
            "path" => {
                want(1)?;
                Family::Path { n: int(0)? }
            }
            "cycle" => {
                want(1)?;
                Family::Cycle { n: int(0)? }
            }
            "grid" => {
                want(2)?;
                Family::Grid { rows: int(0)?, cols: int(1)? }
            }
            "half_grid" => {
                want(1)?;
                Family::HalfGrid { n: int(0)? }
            }
            "cbt" => {
                want(1)?;
                Family::Cbt { h: int(0)? }
            }
            "path_power" => {
                want(2)?;
                Family::PathPower { n: int(0)?, p: int(1)? }
            }
            "random_maximal_outerplanar" => {
                want(1)?;
                Family::RandomMaximalOuterplanar { n: int(0)? }
            }
            "random_graph" => {
                want(2)?;
                let p: f64 = params[1]
                    .parse()
                    .map_err(|_| Error::input(format!("random_graph: bad probability {:?}", params[1])))?;
                Family::RandomGraph { n: int(0)?, p }
            }
            "random_tree" => {
                want(2)?;
                Family::RandomTree { n: int(0)?, max_degree: int(1)? }
            }
            other => {
                let mut known = String::new();
                for (i, f) in FAMILY_NAMES.iter().enumerate() {
                    if i > 0 {
                        known.push_str(", ");
                    }
                    known.push_str(f);
                }
                return Err(Error::input(format!("unknown family {other:?} (known: {known})")));
            }
        };
        Ok(fam)
    }
}

/// Builds a member of `family`; `seed` only affects the random families.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::Complete { n } => {
            positive("n", n)?;
            Ok(complete(n))
        }
        Family::CompleteBipartite { a, b } => {
            positive("a", a)?;
            positive("b", b)?;
            let mut es = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    es.push((i, a + j));
                }
            }
            Graph::from_edges(a + b, &es)
        }
        Family::Path { n } => {
            positive("n", n)?;
            Ok(path(n))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(Error::input("cycle needs at least 3 vertices"));
            }
            let mut es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            es.push((0, n - 1));
            Graph::from_edges(n, &es)
        }
        Family::Grid { rows, cols } => {
            positive("rows", rows)?;
            positive("cols", cols)?;
            Ok(grid(rows, cols))
        }
        Family::HalfGrid { n } => {
            positive("n", n)?;
            let mut id = vec![vec![usize::MAX; n]; n];
            let mut c = 0;
            for (i, row) in id.iter_mut().enumerate() {
                for cell in row.iter_mut().skip(i) {
                    *cell = c;
                    c += 1;
                }
            }
            let mut es = Vec::new();
            for i in 0..n {
                for j in i..n {
                    if j + 1 < n {
                        es.push((id[i][j], id[i][j + 1]));
                    }
                    if i < j {
                        es.push((id[i][j], id[i + 1][j]));
                    }
                }
            }
            Graph::from_edges(c, &es)
        }
        Family::Cbt { h } => {
            if h >= 26 {
                return Err(Error::limit("cbt height above 25"));
            }
            Ok(cbt(h))
        }
        Family::PathPower { n, p } => {
            positive("n", n)?;
            let mut es = Vec::new();
            for i in 0..n {
                for j in i + 1..n.min(i + p + 1) {
                    es.push((i, j));
                }
            }
            Graph::from_edges(n, &es)
        }
        Family::RandomMaximalOuterplanar { n } => {
            positive("n", n)?;
            Ok(random_maximal_outerplanar(n, &mut rng))
        }
        Family::RandomGraph { n, p } => {
            positive("n", n)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input("edge probability must lie in [0, 1]"));
            }
            let mut es = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        es.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &es)
        }
        Family::RandomTree { n, max_degree } => {
            positive("n", n)?;
            if max_degree < 2 && n > 2 {
                return Err(Error::input("random_tree needs max_degree ≥ 2 for n > 2"));
            }
            Ok(random_tree(n, max_degree, &mut rng))
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut es = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            es.push((i, j));
        }
    }
    Graph::from_sorted_unique(n, es)
}

pub fn path(n: usize) -> Graph {
    Graph::from_sorted_unique(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Graph {
    generate(&Family::Cycle { n }, 0).expect("cycle needs n ≥ 3")
}

pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |i: usize, j: usize| i * cols + j;
    let mut es = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                es.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                es.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    es.sort_unstable();
    Graph::from_sorted_unique(rows * cols, es)
}

pub fn cbt(h: usize) -> Graph {
    let n = (1usize << (h + 1)) - 1;
    let mut es: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    es.sort_unstable();
    Graph::from_sorted_unique(n, es)
}

fn random_maximal_outerplanar(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut es: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        es.push((0, n - 1));
        let mut stack = vec![(0..n).collect::<Vec<_>>()];
        while let Some(poly) = stack.pop() {
            let k = poly.len();
            if k <= 3 {
                continue;
            }
            // Pick a chord between non-consecutive polygon positions.
            let (a, b) = loop {
                let a = rng.gen_range(0..k);
                let b = rng.gen_range(0..k);
                let (a, b) = (a.min(b), a.max(b));
                if b >= a + 2 && !(a == 0 && b == k - 1) {
                    break (a, b);
                }
            };
            es.push((poly[a].min(poly[b]), poly[a].max(poly[b])));
            stack.push(poly[a..=b].to_vec());
            let mut other = poly[b..].to_vec();
            other.extend_from_slice(&poly[..=a]);
            stack.push(other);
        }
    }
    relabel(n, &es, rng)
}

fn random_tree(n: usize, max_degree: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut deg = vec![0usize; n];
    let mut es = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < max_degree.max(1)).collect();
        let u = open[rng.gen_range(0..open.len())];
        deg[u] += 1;
        deg[v] += 1;
        es.push((u, v));
    }
    relabel(n, &es, rng)
}

fn relabel(n: usize, es: &[(usize, usize)], rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mapped: Vec<_> = es.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    Graph::from_edges_dedup(n, &mapped).expect("relabelling preserves simplicity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let g = generate(&Family::Grid { rows: 2, cols: 3 }, 0).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
        let t = generate(&Family::Cbt { h: 2 }, 0).unwrap();
        assert_eq!((t.n(), t.m()), (7, 6));
        let hg = generate(&Family::HalfGrid { n: 3 }, 0).unwrap();
        assert_eq!(hg.n(), 6);
        assert_eq!(hg.m(), 6);
        let kb = generate(&Family::CompleteBipartite { a: 1, b: 3 }, 0).unwrap();
        assert_eq!(kb.degree(0), 3);
        let pp = generate(&Family::PathPower { n: 5, p: 2 }, 0).unwrap();
        assert_eq!(pp.m(), 7);
    }

    #[test]
    fn errors() {
        assert!(generate(&Family::Path { n: 0 }, 0).is_err());
        assert!(generate(&Family::Cycle { n: 2 }, 0).is_err());
        assert!(Family::parse("hypercube", &["3"]).is_err());
        assert!(Family::parse("grid", &["3"]).is_err());
        assert_eq!(Family::parse("grid", &["2", "3"]).unwrap(), Family::Grid { rows: 2, cols: 3 });
    }

    #[test]
    fn random_families_are_seeded() {
        for n in 1..12 {
            let f = Family::RandomMaximalOuterplanar { n };
            let a = generate(&f, 7).unwrap();
            assert_eq!(a, generate(&f, 7).unwrap());
            assert_eq!(a.m(), if n == 1 { 0 } else { 2 * n - 3 });
        }
        let f = Family::RandomGraph { n: 9, p: 0.5 };
        assert_eq!(generate(&f, 3).unwrap(), generate(&f, 3).unwrap());
        let t = generate(&Family::RandomTree { n: 20, max_degree: 3 }, 1).unwrap();
        assert_eq!(t.m(), 19);
        assert!(t.is_connected() && t.max_degree() <= 3);
    }
}
