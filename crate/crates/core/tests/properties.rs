use blindcop_core::bounds::{expansion_certificate, subtree_count_in_cbt, Expansion};
use blindcop_core::flip::{apply_flip, flip_simulate, CaptureRule, FlipRound};
use blindcop_core::game::{simulate, verify};
use blindcop_core::generators::cbt;
use blindcop_core::naf::{naf, naf_weight, weight_triangle_holds};
use blindcop_core::solver::{compute, pathwidth_oracle, treewidth_oracle, SolverConfig};
use blindcop_core::transforms::{cop_to_flip, cop_to_zerovis, double_speed, flip_to_cop, hunter_to_cop, zerovis_to_cop};
use blindcop_core::treedec::{from_elimination_order, lengths_satisfy_joins, make_nice, subdivision_lengths, treesub_strategy};
use blindcop_core::{Diameter, GameKind, Graph, Radius};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if it.next().unwrap() {
                        edges.push((a, b));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n).prop_filter("connected", Graph::is_connected)
}

fn value(g: &Graph, game: GameKind, r: Radius) -> usize {
    compute(g, game, r, &SolverConfig::default()).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inspection_equals_bcw1(g in graph(1, 6)) {
        prop_assert_eq!(value(&g, GameKind::Search, Radius::ONE), value(&g, GameKind::Bcw, Radius::ONE));
    }

    #[test]
    fn bcw_infinite_is_pathwidth_plus_one(g in graph(1, 6)) {
        prop_assert_eq!(value(&g, GameKind::Bcw, Radius::Infinite), pathwidth_oracle(&g).unwrap() + 1);
    }

    #[test]
    fn radius_sandwich(g in graph(1, 6)) {
        let (one, s) = compute(&g, GameKind::Bcw, Radius::ONE, &SolverConfig::default()).unwrap();
        let two = value(&g, GameKind::Bcw, Radius::Finite(2));
        prop_assert!(one <= two && two <= 2 * one);
        let d = double_speed(&g, &s).unwrap();
        prop_assert!(d.max_round_size() <= 2 * one);
        let slow = simulate(&g, &s).unwrap();
        let fast = simulate(&g, &d).unwrap();
        let m = s.len();
        for i in 1..=d.len() {
            prop_assert!(fast.contaminated[i].is_subset(&slow.contaminated[(2 * i).min(m)]));
        }
    }

    #[test]
    fn game_ordering(g in connected(1, 6)) {
        let bcw1 = value(&g, GameKind::Bcw, Radius::ONE);
        prop_assert!(value(&g, GameKind::Hunt, Radius::ONE) <= value(&g, GameKind::Search, Radius::ONE));
        prop_assert!(bcw1 <= 2 * value(&g, GameKind::Zerovis, Radius::ONE));
        prop_assert!(value(&g, GameKind::Bcw, Radius::Infinite) >= bcw1);
    }

    #[test]
    fn expansion_certificates_are_sound(g in graph(1, 6)) {
        let bcw1 = value(&g, GameKind::Bcw, Radius::ONE);
        for a in 1..=g.n() {
            for k in 0..=g.n() {
                if let Expansion::Certified { .. } = expansion_certificate(&g, a, k, 1 << 20).unwrap() {
                    prop_assert!(bcw1 > k);
                }
            }
        }
    }

    #[test]
    fn transformers_verify(g in connected(2, 6)) {
        let cfg = SolverConfig::default();
        let delta = g.max_degree();
        let (h, hs) = compute(&g, GameKind::Hunt, Radius::ONE, &cfg).unwrap();
        let c = hunter_to_cop(&g, &hs).unwrap();
        prop_assert!(verify(&g, &c).is_win() && c.max_round_size() <= (delta + 1) * h.max(1));
        let (z, zs) = compute(&g, GameKind::Zerovis, Radius::ONE, &cfg).unwrap();
        let c = zerovis_to_cop(&g, &zs).unwrap();
        prop_assert!(verify(&g, &c).is_win() && c.max_round_size() <= 2 * z);
        let Diameter::Finite(d) = g.diameter() else { unreachable!() };
        let d = d.max(1) as u32;
        let (k, ks) = compute(&g, GameKind::Bcw, Radius::Finite(d), &cfg).unwrap();
        let zv = cop_to_zerovis(&g, &ks, d).unwrap();
        prop_assert!(verify(&g, &zv).is_win() && zv.max_round_size() <= 2 * k);
        let (k, s) = compute(&g, GameKind::Bcw, Radius::ONE, &cfg).unwrap();
        let f = cop_to_flip(&g, &s).unwrap();
        prop_assert!(f.width() <= k + (1 << k));
        prop_assert!(flip_simulate(&g, &f, Radius::ONE, CaptureRule::Immediate).unwrap().win);
    }

    #[test]
    fn flip_round_trip_on_subcubic_trees(seed in 0u64..1000, n in 2usize..=9) {
        use blindcop_core::generators::{generate, Family};
        let t = generate(&Family::RandomTree { n, max_degree: 3 }, seed).unwrap();
        let (k, s) = compute(&t, GameKind::Bcw, Radius::Finite(3), &SolverConfig::default()).unwrap();
        let f = cop_to_flip(&t, &s).unwrap();
        prop_assert!(f.width() <= k + (1 << k));
        let back = flip_to_cop(&t, &f).unwrap();
        prop_assert!(verify(&t, &back).is_win());
        prop_assert!(back.max_round_size() <= 2 * f.width() * 16);
    }

    #[test]
    fn apply_flip_is_an_involution(g in graph(1, 8), seed in any::<u64>()) {
        let n = g.n();
        let parts = 1 + (seed as usize % n.min(4));
        let mut part_of: Vec<usize> = (0..n).map(|v| ((seed >> (v % 32)) as usize + v) % parts).collect();
        part_of[..parts].iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let flips: Vec<(usize, usize)> = (0..parts).flat_map(|a| (a..parts).map(move |b| (a, b)))
            .filter(|&(a, b)| (seed >> ((a * 4 + b) % 64)) & 1 == 1).collect();
        let round = FlipRound::new(part_of, &flips).unwrap();
        let once = apply_flip(&g, &round).unwrap();
        prop_assert_eq!(apply_flip(&once, &round).unwrap(), g);
    }

    #[test]
    fn naf_triangle(x in -1_000_000i64..=1_000_000, y in -1_000_000i64..=1_000_000) {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        prop_assert!(weight_triangle_holds(&x, &y));
        let f = naf(&x);
        prop_assert_eq!(f.evaluate(), x.clone());
        prop_assert!(f.digits.windows(2).all(|w| w[0] == 0 || w[1] == 0));
        prop_assert_eq!(naf_weight(&(-x.clone())), naf_weight(&x));
    }

    #[test]
    fn subtree_count_matches_enumeration(h in 1u32..=6, seed in any::<u64>()) {
        let n = (1usize << (h + 1)) - 1;
        let mut inside = vec![false; n];
        let top = seed as usize % n;
        inside[top] = true;
        let mut state = seed;
        let mut stack = vec![top];
        while let Some(v) = stack.pop() {
            for c in [2 * v + 1, 2 * v + 2] {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if c < n && (state >> 33) % 3 != 0 {
                    inside[c] = true;
                    stack.push(c);
                }
            }
        }
        let nodes: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
        prop_assert_eq!(subtree_count_in_cbt(h, &nodes).unwrap(), nodes.len() as u128);
    }

    #[test]
    fn treesub_on_random_graphs(g in connected(1, 7)) {
        let (tw, order) = treewidth_oracle(&g).unwrap();
        let nice = make_nice(&g, &from_elimination_order(&g, &order).unwrap()).unwrap();
        let lengths = subdivision_lengths(&g, &nice, 1 << 22).unwrap();
        prop_assert!(lengths_satisfy_joins(&g, &nice, &lengths));
        if lengths.iter().sum::<u64>() <= 20_000 {
            let out = treesub_strategy(&g, &nice).unwrap();
            prop_assert!(out.strategy.max_round_size() <= tw + 3);
            prop_assert!(verify(&out.graph, &out.strategy).is_win());
        }
    }
}

#[test]
fn cbt_pathwidth() {
    for h in 0..=4 {
        assert_eq!(pathwidth_oracle(&cbt(h)).unwrap(), h.div_ceil(2));
    }
}
