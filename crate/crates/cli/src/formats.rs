//! Plain-text file formats.

use std::fmt::Write as _;

use blindcop_core::flip::{FlipRound, FlipStrategy};
use blindcop_core::treedec::TreeDecomposition;
use blindcop_core::{CopStrategy, GameKind, Graph, Radius};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{what}, line {line}: {msg}")]
pub struct FormatError {
    pub what: &'static str,
    pub line: usize,
    pub msg: String,
}

type Result<T> = std::result::Result<T, FormatError>;

fn err(what: &'static str, line: usize, msg: impl Into<String>) -> FormatError {
    FormatError { what, line, msg: msg.into() }
}

fn ints(what: &'static str, line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| err(what, line, format!("expected a non-negative integer, got {t:?}"))))
        .collect()
}

fn join(vs: &[usize]) -> String {
    let mut s = String::new();
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{v}");
    }
    s
}

/// Numbered lines that are neither blank nor `#` comments.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// `n m` followed by `m` lines `u v`; `#` lines are comments.
pub fn parse_graph(text: &str) -> Result<Graph> {
    const W: &str = "graph";
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(W, 1, "missing `n m` header"))?;
    let [n, m] = ints(W, hl, header)?[..] else {
        return Err(err(W, hl, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let [u, v] = ints(W, ln, l)?[..] else {
            return Err(err(W, ln, "edge lines must be `u v`"));
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(W, hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges).map_err(|e| err(W, hl, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Header `game=<g> r=<r> k=<k>`, then one line per round; a blank line is an empty round.
pub fn parse_strategy(text: &str) -> Result<CopStrategy> {
    const W: &str = "strategy";
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hl, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| err(W, 1, "missing header"))?;
    let (mut game, mut radius, mut budget) = (None, None, None);
    for field in header.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| err(W, hl, format!("bad header field {field:?}")))?;
        match key {
            "game" => game = Some(value.parse::<GameKind>().map_err(|e| err(W, hl, e.to_string()))?),
            "r" => radius = Some(value.parse::<Radius>().map_err(|e| err(W, hl, e.to_string()))?),
            "k" => budget = Some(value.parse::<usize>().map_err(|_| err(W, hl, format!("bad budget {value:?}")))?),
            _ => return Err(err(W, hl, format!("unknown header field {key:?}"))),
        }
    }
    let game = game.ok_or_else(|| err(W, hl, "header lacks game="))?;
    let radius = radius.ok_or_else(|| err(W, hl, "header lacks r="))?;
    let budget = budget.ok_or_else(|| err(W, hl, "header lacks k="))?;
    let rounds = lines.map(|(ln, l)| ints(W, ln, l)).collect::<Result<Vec<_>>>()?;
    Ok(CopStrategy::new(game, radius, budget, rounds))
}

pub fn write_strategy(s: &CopStrategy) -> String {
    let mut out = format!("game={} r={} k={}\n", s.game, s.radius, s.budget);
    for r in &s.rounds {
        out.push_str(&join(r));
        out.push('\n');
    }
    out
}

/// Per round: `parts=<p>`, then `part <id>: v...` lines, then `flips: (a,b) ...`.
pub fn parse_flip_strategy(text: &str, n: usize) -> Result<FlipStrategy> {
    const W: &str = "flip strategy";
    let mut rounds = Vec::new();
    // (line of `parts=`, announced count, parts so far)
    let mut open: Option<(usize, usize, Vec<Vec<usize>>)> = None;
    for (ln, l) in data_lines(text) {
        if let Some(p) = l.strip_prefix("parts=") {
            if open.is_some() {
                return Err(err(W, ln, "previous round has no flips: line"));
            }
            let count = p.trim().parse().map_err(|_| err(W, ln, format!("bad part count {p:?}")))?;
            open = Some((ln, count, Vec::new()));
        } else if let Some(rest) = l.strip_prefix("part ") {
            let (_, _, parts) = open.as_mut().ok_or_else(|| err(W, ln, "part line before parts="))?;
            let (id, members) = rest.split_once(':').ok_or_else(|| err(W, ln, "expected `part <id>: ...`"))?;
            let id: usize = id.trim().parse().map_err(|_| err(W, ln, format!("bad part id {id:?}")))?;
            if id != parts.len() {
                return Err(err(W, ln, format!("expected part {}, got {id}", parts.len())));
            }
            parts.push(ints(W, ln, members)?);
        } else if let Some(rest) = l.strip_prefix("flips:") {
            let (pl, count, parts) = open.take().ok_or_else(|| err(W, ln, "flips: line before parts="))?;
            if parts.len() != count {
                return Err(err(W, pl, format!("announced {count} parts, found {}", parts.len())));
            }
            let flips = rest.split_whitespace().map(|tok| parse_pair(tok).ok_or_else(|| err(W, ln, format!("bad flip {tok:?}"))));
            let flips = flips.collect::<Result<Vec<_>>>()?;
            rounds.push(FlipRound::from_parts(n, &parts, &flips).map_err(|e| err(W, ln, e.to_string()))?);
        } else {
            return Err(err(W, ln, format!("unexpected line {l:?}")));
        }
    }
    if let Some((pl, _, _)) = open {
        return Err(err(W, pl, "round has no flips: line"));
    }
    Ok(FlipStrategy::new(rounds))
}

fn parse_pair(tok: &str) -> Option<(usize, usize)> {
    let (a, b) = tok.strip_prefix('(')?.strip_suffix(')')?.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

pub fn write_flip_strategy(s: &FlipStrategy) -> String {
    let mut out = String::new();
    for round in &s.rounds {
        let parts = round.parts();
        let _ = writeln!(out, "parts={}", parts.len());
        for (i, p) in parts.iter().enumerate() {
            let _ = writeln!(out, "part {i}: {}", join(p));
        }
        out.push_str("flips:");
        for (a, b) in round.flips() {
            let _ = write!(out, " ({a},{b})");
        }
        out.push('\n');
    }
    out
}

/// One line `u: h1 h2 ...` per pattern vertex, in order.
pub fn parse_model(text: &str) -> Result<Vec<Vec<usize>>> {
    const W: &str = "minor model";
    let mut out = Vec::new();
    for (ln, l) in data_lines(text) {
        let (u, rest) = l.split_once(':').ok_or_else(|| err(W, ln, "expected `u: h1 h2 ...`"))?;
        let u: usize = u.trim().parse().map_err(|_| err(W, ln, format!("bad pattern vertex {u:?}")))?;
        if u != out.len() {
            return Err(err(W, ln, format!("expected pattern vertex {}, got {u}", out.len())));
        }
        out.push(ints(W, ln, rest)?);
    }
    Ok(out)
}

pub fn write_model(branch: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (u, b) in branch.iter().enumerate() {
        let _ = writeln!(out, "{u}: {}", join(b));
    }
    out
}

/// PACE `.td`: `s td <bags> <max_bag> <n>`, `b <id> v...` (1-based), tree edges `a b`.
/// Bag 1 is the root; children are ordered by the edge lines.
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    const W: &str = "tree decomposition";
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));
    let (hl, header) = lines.next().ok_or_else(|| err(W, 1, "missing `s td` line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "s" || fields[1] != "td" {
        return Err(err(W, hl, "header must be `s td <bags> <max_bag> <n>`"));
    }
    let nums = ints(W, hl, &fields[2..].join(" "))?;
    let (count, max_bag, n) = (nums[0], nums[1], nums[2]);
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut edges = Vec::new();
    for (ln, l) in lines {
        if let Some(rest) = l.strip_prefix("b ") {
            let v = ints(W, ln, rest)?;
            let (&id, members) = v.split_first().ok_or_else(|| err(W, ln, "bag line needs an id"))?;
            if id == 0 || id > count {
                return Err(err(W, ln, format!("bag id {id} outside 1..={count}")));
            }
            if bags[id - 1].is_some() {
                return Err(err(W, ln, format!("bag {id} given twice")));
            }
            if members.len() > max_bag {
                return Err(err(W, ln, format!("bag {id} exceeds the announced size {max_bag}")));
            }
            let mut zero = Vec::with_capacity(members.len());
            for &x in members {
                if x == 0 || x > n {
                    return Err(err(W, ln, format!("vertex {x} outside 1..={n}")));
                }
                zero.push(x - 1);
            }
            bags[id - 1] = Some(zero);
        } else {
            let [a, b] = ints(W, ln, l)?[..] else {
                return Err(err(W, ln, "tree edge lines must be `a b`"));
            };
            if a == 0 || b == 0 || a > count || b > count {
                return Err(err(W, ln, format!("tree edge ({a},{b}) names a missing bag")));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| err(W, hl, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    TreeDecomposition::new(bags, &edges, 0).map_err(|e| err(W, hl, e.to_string()))
}

/// Writes `td` with its root as bag 1, nodes numbered in depth-first order.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let order = td.preorder();
    let mut id = vec![0; td.len()];
    for (i, &x) in order.iter().enumerate() {
        id[x] = i + 1;
    }
    let max_bag = td.bags().iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {max_bag} {n}\n", td.len());
    for &x in &order {
        let one: Vec<usize> = td.bag(x).iter().map(|v| v + 1).collect();
        let _ = write!(out, "b {}", id[x]);
        one.iter().for_each(|v| {
            let _ = write!(out, " {v}");
        });
        out.push('\n');
    }
    for (p, c) in td.tree_edges() {
        let _ = writeln!(out, "{} {}", id[p], id[c]);
    }
    out
}

/// Graphviz rendering; branch sets (if any) become coloured clusters.
pub fn to_dot(g: &Graph, branch: Option<&[Vec<usize>]>) -> String {
    const COLORS: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"];
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    if let Some(sets) = branch {
        for (u, set) in sets.iter().enumerate() {
            let color = COLORS[u % COLORS.len()];
            for v in set {
                let _ = writeln!(out, "  {v} [color={color}, label=\"{v}/{u}\"];");
            }
        }
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use blindcop_core::generators::{cycle, path};

    #[test]
    fn graph_round_trip() {
        let g = cycle(5);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let g = parse_graph("# a comment\n3 2\n0 1\n\n1 2\n").unwrap();
        assert_eq!(g, path(3));
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
        assert!(parse_graph("2 1\n0 x\n").is_err());
    }

    #[test]
    fn strategy_round_trip() {
        let s = CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1], vec![], vec![2]]);
        let text = write_strategy(&s);
        assert_eq!(text, "game=bcw r=1 k=2\n0 1\n\n2\n");
        assert_eq!(parse_strategy(&text).unwrap(), s);
        let inf = parse_strategy("game=search r=inf k=1\n0\n").unwrap();
        assert_eq!((inf.game, inf.radius), (GameKind::Search, Radius::Infinite));
        assert!(parse_strategy("game=bcw k=1\n0\n").is_err());
        assert!(parse_strategy("game=chess r=1 k=1\n").is_err());
    }

    #[test]
    fn flip_round_trip() {
        let r1 = FlipRound::from_parts(3, &[vec![1], vec![0, 2]], &[(0, 1)]).unwrap();
        let r2 = FlipRound::identity(3);
        let s = FlipStrategy::new(vec![r1, r2]);
        let text = write_flip_strategy(&s);
        assert!(text.starts_with("parts=2\npart 0: 1\npart 1: 0 2\nflips: (0,1)\n"));
        assert_eq!(parse_flip_strategy(&text, 3).unwrap(), s);
        assert!(parse_flip_strategy("parts=1\npart 0: 0 1\n", 2).is_err());
        assert!(parse_flip_strategy("parts=2\npart 0: 0 1\nflips:\n", 2).is_err());
    }

    #[test]
    fn model_round_trip() {
        let m = vec![vec![0, 1], vec![2]];
        assert_eq!(parse_model(&write_model(&m)).unwrap(), m);
        assert!(parse_model("1: 0\n").is_err());
    }

    #[test]
    fn td_round_trip() {
        let text = "s td 3 2 4\nb 1 2 3\nb 2 1 2\nb 3 3 4\n1 2\n1 3\n";
        let td = parse_td(text).unwrap();
        assert_eq!(td.root(), 0);
        assert_eq!(td.children(0), &[1, 2]);
        assert_eq!(td.bag(1), &[0, 1]);
        assert_eq!(write_td(&td, 4), text);
        assert!(parse_td("s td 2 2 3\nb 1 1 2\n").is_err());
        assert!(parse_td("s td 1 1 2\nb 1 3\n").is_err());
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&path(2), Some(&[vec![0], vec![1]]));
        assert!(dot.contains("0 -- 1;") && dot.contains("color=red"));
    }
}
