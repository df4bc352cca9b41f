//! Strategy transformers between the game variants.
//!
//! Every transformer checks that its input wins, builds the new strategy and
//! re-verifies the output in the target engine. An output that fails to win is
//! reported as [`Error::Internal`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::flip::{flip_simulate, CaptureRule, FlipRound, FlipStrategy};
use crate::game::{ensure_win, CopStrategy, GameKind, Radius};
use crate::graph::{Diameter, Graph};

fn require(g: &Graph, s: &CopStrategy, game: GameKind) -> Result<()> {
    if s.game != game {
        return Err(Error::input(format!("expected a {game} strategy, got {}", s.game)));
    }
    ensure_win(g, s)
}

fn certify(g: &Graph, s: CopStrategy) -> Result<CopStrategy> {
    ensure_win(g, &s).map_err(|e| Error::Internal(format!("transformed strategy does not win: {e}")))?;
    Ok(s)
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u = a.to_vec();
    u.extend_from_slice(b);
    u
}

/// `C'_i = C_{2i-1} ∪ C_{2i}`: a radius-`r` win with `k` cops becomes a radius-`2r` win with `2k`.
///
/// An odd final round is paired with itself.
pub fn double_speed(g: &Graph, s: &CopStrategy) -> Result<CopStrategy> {
    require(g, s, GameKind::Bcw)?;
    let rounds = s
        .rounds
        .chunks(2)
        .map(|pair| union(&pair[0], pair.last().unwrap_or(&pair[0])))
        .collect();
    certify(g, CopStrategy::bcw(s.radius.doubled(), 2 * s.budget, rounds))
}

/// `C_i = N[S_i]`: a hunting win becomes a radius-1 win with `(Δ+1)·k` cops.
pub fn hunter_to_cop(g: &Graph, s: &CopStrategy) -> Result<CopStrategy> {
    if !g.isolated_vertices().is_empty() {
        return Err(Error::input("graph has isolated vertices"));
    }
    require(g, s, GameKind::Hunt)?;
    let rounds = s
        .rounds
        .iter()
        .map(|r| {
            let mut c = r.clone();
            r.iter().for_each(|&v| c.extend_from_slice(g.neighbors(v)));
            c
        })
        .collect();
    certify(g, CopStrategy::bcw(Radius::ONE, (g.max_degree() + 1) * s.budget, rounds))
}

/// `C_i = S_i ∪ S_{i+1}`: a zero-visibility win becomes a radius-1 win with `2k` cops.
pub fn zerovis_to_cop(g: &Graph, s: &CopStrategy) -> Result<CopStrategy> {
    require(g, s, GameKind::Zerovis)?;
    let m = s.rounds.len();
    let rounds = (0..m)
        .map(|i| union(&s.rounds[i], s.rounds.get(i + 1).map_or(&[][..], Vec::as_slice)))
        .collect();
    certify(g, CopStrategy::bcw(Radius::ONE, 2 * s.budget, rounds))
}

/// One step along a shortest path towards `target`, preferring the smallest id.
fn step_towards(g: &Graph, dist_to: &[usize], from: usize) -> usize {
    if dist_to[from] == 0 {
        return from;
    }
    g.neighbors(from)
        .iter()
        .copied()
        .find(|&u| dist_to[u] + 1 == dist_to[from])
        .unwrap_or(from)
}

/// Zero-visibility strategy with `2k` cops from a radius-`d` strategy, `d ≥ diam(G)`.
///
/// The first round occupies `S_1 ∪ S_2`. For each later source round `i`, one
/// team holds `S_{i-1}` for `d` rounds while the other walks from `S_{i-2}` to
/// `S_i` along shortest paths; cop `j` of the moving team heads to the
/// `(j mod |S_i|)`-th vertex of `S_i`.
pub fn cop_to_zerovis(g: &Graph, s: &CopStrategy, d: u32) -> Result<CopStrategy> {
    if g.n() == 0 {
        return Err(Error::input("empty graph"));
    }
    match g.diameter() {
        Diameter::Infinite => return Err(Error::input("graph is disconnected")),
        Diameter::Finite(diam) if diam > d as usize => {
            return Err(Error::input(format!("d = {d} is below the diameter {diam}")))
        }
        Diameter::Finite(_) => {}
    }
    if d == 0 {
        return Err(Error::input("d must be positive"));
    }
    if s.radius < Radius::Finite(d) {
        return Err(Error::input(format!("strategy radius {} is below d = {d}", s.radius)));
    }
    require(g, s, GameKind::Bcw)?;
    let k = s.max_round_size();
    // Nonempty rounds only: empty ones borrow the nearest earlier (or later) nonempty set.
    let mut src: Vec<Vec<usize>> = s.rounds.clone();
    let first = src.iter().position(|r| !r.is_empty()).ok_or_else(|| Error::Internal("winning strategy never places a cop".into()))?;
    for i in 0..src.len() {
        if src[i].is_empty() {
            src[i] = if i < first { src[first].clone() } else { src[i - 1].clone() };
        }
    }
    let team = |set: &[usize]| -> Vec<usize> { (0..k).map(|j| set[j % set.len()]).collect() };
    let mut rounds = vec![union(&src[0], src.get(1).unwrap_or(&src[0]))];
    let mut moving = team(&src[0]);
    let mut holding = team(src.get(1).unwrap_or(&src[0]));
    let mut dist_cache: HashMap<usize, Vec<usize>> = HashMap::new();
    for target in src.iter().skip(2) {
        let goals: Vec<usize> = team(target);
        for &t in &goals {
            dist_cache.entry(t).or_insert_with(|| g.distances(t).into_iter().map(|x| x.unwrap_or(usize::MAX)).collect());
        }
        for _ in 0..d {
            for (pos, goal) in moving.iter_mut().zip(&goals) {
                *pos = step_towards(g, &dist_cache[goal], *pos);
            }
            rounds.push(union(&moving, &holding));
        }
        core::mem::swap(&mut moving, &mut holding);
    }
    certify(g, CopStrategy::new(GameKind::Zerovis, Radius::ONE, 2 * k, rounds))
}

/// Flip strategy isolating the cops of each round: `≤ k + 2^k` parts.
///
/// Parts are the cop singletons followed by the classes of non-cops with equal
/// neighbourhood in the cop set; all part pairs joined by a cop edge are flipped.
pub fn cop_to_flip(g: &Graph, s: &CopStrategy) -> Result<FlipStrategy> {
    require(g, s, GameKind::Bcw)?;
    let n = g.n();
    let mut rounds = Vec::with_capacity(s.rounds.len());
    for c in &s.rounds {
        let mut part_of = vec![usize::MAX; n];
        let mut is_cop = vec![false; n];
        for (p, &v) in c.iter().enumerate() {
            part_of[v] = p;
            is_cop[v] = true;
        }
        let mut classes: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = c.len();
        for v in 0..n {
            if is_cop[v] {
                continue;
            }
            let key: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| is_cop[u]).collect();
            part_of[v] = *classes.entry(key).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        let mut flips = Vec::new();
        for &v in c {
            for &u in g.neighbors(v) {
                flips.push((part_of[v], part_of[u]));
            }
        }
        rounds.push(FlipRound::new(part_of, &flips)?);
    }
    let out = FlipStrategy::new(rounds);
    let trace = flip_simulate(g, &out, s.radius, CaptureRule::Immediate)?;
    if !trace.win {
        return Err(Error::Internal("flip strategy does not win".into()));
    }
    Ok(out)
}

/// Radius-1 cop strategy from a flip strategy winning at radius 3.
///
/// Cops occupy every part of size at most `2(Δ+1)` that takes part in a flip,
/// together with the neighbours of those parts.
pub fn flip_to_cop(g: &Graph, fs: &FlipStrategy) -> Result<CopStrategy> {
    let trace = flip_simulate(g, fs, Radius::Finite(3), CaptureRule::Immediate)?;
    if !trace.win {
        return Err(Error::NotWinning("flip strategy does not win at radius 3".into()));
    }
    let delta = g.max_degree();
    let small = 2 * (delta + 1);
    let rounds = fs
        .rounds
        .iter()
        .map(|round| {
            let parts = round.parts();
            let mut touched = vec![false; parts.len()];
            for &(a, b) in round.flips() {
                touched[a] = true;
                touched[b] = true;
            }
            let mut c = Vec::new();
            for (p, members) in parts.iter().enumerate() {
                if touched[p] && members.len() <= small {
                    for &v in members {
                        c.push(v);
                        c.extend_from_slice(g.neighbors(v));
                    }
                }
            }
            c
        })
        .collect();
    let budget = 2 * fs.width() * (delta + 1) * (delta + 1);
    certify(g, CopStrategy::bcw(Radius::ONE, budget, rounds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{simulate, verify};
    use crate::generators::{complete, path};

    #[test]
    fn double_speed_examples() {
        let p4 = path(4);
        let s = CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let d = double_speed(&p4, &s).unwrap();
        assert_eq!(d.rounds, [vec![0, 1, 2], vec![2, 3]]);
        assert_eq!((d.radius, d.budget), (Radius::Finite(2), 4));
        let one = CopStrategy::bcw(Radius::ONE, 4, vec![vec![0, 1, 2, 3]]);
        assert_eq!(double_speed(&p4, &one).unwrap().rounds, one.rounds);
        let losing = CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1]]);
        assert!(matches!(double_speed(&p4, &losing), Err(Error::NotWinning(_))));
    }

    #[test]
    fn hunter_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = CopStrategy::new(GameKind::Hunt, Radius::ONE, 1, vec![vec![0], vec![0]]);
        let c = hunter_to_cop(&star, &s).unwrap();
        assert_eq!(c.rounds, [vec![0, 1, 2, 3], vec![0, 1, 2, 3]]);
        assert_eq!(c.budget, 4);
        let k2 = complete(2);
        let alternating = CopStrategy::new(GameKind::Hunt, Radius::ONE, 1, vec![vec![0], vec![1]]);
        assert!(matches!(hunter_to_cop(&k2, &alternating), Err(Error::NotWinning(_))));
        let s = CopStrategy::new(GameKind::Hunt, Radius::ONE, 1, vec![vec![0], vec![0]]);
        assert_eq!(hunter_to_cop(&k2, &s).unwrap().rounds, [vec![0, 1], vec![0, 1]]);
        let lonely = Graph::empty(2);
        assert!(hunter_to_cop(&lonely, &s).is_err());
    }

    #[test]
    fn zerovis_examples() {
        let k2 = complete(2);
        let s = CopStrategy::new(GameKind::Zerovis, Radius::ONE, 1, vec![vec![0], vec![1]]);
        let c = zerovis_to_cop(&k2, &s).unwrap();
        assert_eq!(c.rounds, [vec![0, 1], vec![1]]);
        assert_eq!(c.budget, 2);

        let s = CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1]]);
        let z = cop_to_zerovis(&k2, &s, 1).unwrap();
        assert!(verify(&k2, &z).is_win() && z.budget <= 4);

        let p3 = path(3);
        let s = CopStrategy::bcw(Radius::Finite(2), 2, vec![vec![0, 1], vec![1, 2]]);
        let z = cop_to_zerovis(&p3, &s, 2).unwrap();
        assert!(verify(&p3, &z).is_win());
        assert!(cop_to_zerovis(&Graph::empty(2), &s, 2).is_err());
    }

    #[test]
    fn flip_round_trip() {
        let k2 = complete(2);
        let s = CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1]]);
        let f = cop_to_flip(&k2, &s).unwrap();
        assert_eq!(f.rounds[0].width(), 2);
        let back = flip_to_cop(&k2, &f).unwrap();
        assert_eq!(back.len(), 1);

        let p4 = path(4);
        let s = CopStrategy::bcw(Radius::ONE, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let f = cop_to_flip(&p4, &s).unwrap();
        assert!(f.width() <= 2 + 4);
        // The flipper's robber set stays inside the cop game's contaminated set plus cops.
        let ft = flip_simulate(&p4, &f, Radius::ONE, CaptureRule::Immediate).unwrap();
        let bt = simulate(&p4, &s).unwrap();
        for (i, c) in s.round_sets(4).iter().enumerate() {
            assert!(ft.robber[i + 1].is_subset(&bt.contaminated[i + 1].union(c)));
        }

        let idle = FlipStrategy::new(vec![FlipRound::identity(2)]);
        assert!(matches!(flip_to_cop(&k2, &idle), Err(Error::NotWinning(_))));
    }
}
