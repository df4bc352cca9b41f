use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use blindcop::formats::{
    parse_flip_strategy, parse_graph, parse_model, parse_strategy, parse_td, to_dot, write_flip_strategy, write_graph,
    write_model, write_strategy, write_td,
};
use blindcop::{CliError, Exit, RayonMap};
use blindcop_core::bounds::{complete_binary_tree_shape, expansion_certificate, lb_balanced_bintree, lb_balanced_clique, Expansion};
use blindcop_core::constructions::{bintree_subdivision, k2t_example};
use blindcop_core::flip::{flip_simulate, CaptureRule};
use blindcop_core::game::{verify, Verdict};
use blindcop_core::generators::{cbt, complete, generate, grid, Family};
use blindcop_core::minors::{
    balance_clique, balanced_outerplanar_in_grid, embed_outerplanar, has_diagonal_property, MinorModel,
};
use blindcop_core::naf::{g_of_k, naf, naf_lemma_check};
use blindcop_core::solver::{compute_with, treewidth_oracle, SolverConfig};
use blindcop_core::transforms;
use blindcop_core::treedec::{from_elimination_order, make_nice, treesub_strategy_capped};
use blindcop_core::{CopStrategy, Diameter, GameKind, Graph, Radius};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "blindcop", version, about = "Blind cops-and-robber games: solve, verify, construct and certify")]
struct Cli {
    /// Solver threads (results do not depend on this).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph from a named family.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compute the exact game value and a witness strategy.
    Solve {
        #[arg(long, default_value = "bcw")]
        game: GameKind,
        #[arg(long, default_value = "1")]
        radius: Radius,
        #[arg(long, default_value_t = 1 << 27)]
        max_states: usize,
        /// Prune states dominated by an already visited state.
        #[arg(long)]
        dominance: bool,
        /// Write the witness here instead of printing it.
        #[arg(short, long)]
        output: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Check a strategy: exit 0 on a win, 1 on a loss, 2 if invalid.
    Verify {
        #[arg(long)]
        strategy: PathBuf,
        /// The strategy file is a flip strategy.
        #[arg(long)]
        flip: bool,
        /// Robber radius for flip strategies.
        #[arg(long, default_value = "1")]
        radius: Radius,
        /// Catch the robber only on isolated vertices of the final flipped graph.
        #[arg(long)]
        capture_at_end: bool,
        graph: PathBuf,
    },
    /// Lower-bound certificates for the radius-1 blind cop-width.
    #[command(subcommand)]
    Certify(Certify),
    /// Build subdivisions together with short strategies.
    #[command(subcommand)]
    Construct(Construct),
    /// Turn a winning strategy for one game into one for another.
    Transform {
        name: TransformName,
        #[arg(long)]
        strategy: PathBuf,
        /// Target diameter bound for cop-to-zerovis (defaults to the graph diameter).
        #[arg(long)]
        diameter: Option<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Minor models: verification, balancing and grid embeddings.
    #[command(subcommand)]
    Minor(Minor),
    /// Non-adjacent forms and the g(k) thresholds.
    Naf {
        #[arg(allow_hyphen_values = true)]
        value: Option<String>,
        #[arg(long = "g", value_name = "K")]
        g: Option<u64>,
        #[arg(long, value_name = "K")]
        lemma_check: Option<u64>,
        /// Also run the brute-force oracle with this many partial sums.
        #[arg(long)]
        brute_cap: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Certify {
    /// Every a-set has at least k outside neighbours.
    Expansion {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10_000_000)]
        max_sets: u64,
        graph: PathBuf,
    },
    /// A balanced clique model in the graph.
    BalancedClique {
        #[arg(long)]
        model: PathBuf,
        graph: PathBuf,
    },
    /// A balanced complete-binary-tree model (pattern vertices in heap order).
    BalancedBintree {
        #[arg(long)]
        model: PathBuf,
        graph: PathBuf,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Subdivision of a graph from a tree decomposition, cleared by width+3 cops.
    Treesub {
        /// PACE tree decomposition; computed exactly when omitted (at most 20 vertices).
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, default_value_t = 1 << 24)]
        max_vertices: u64,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Subdivided complete binary tree cleared by 3 cops.
    Bintree {
        #[arg(long)]
        height: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Subdivided K_2t cleared by t+3 cops, with a balanced K_2t model.
    K2t {
        #[arg(long)]
        t: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Minor {
    /// Check that a model is a minor model of the pattern in the host.
    Verify {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        model: PathBuf,
        host: PathBuf,
    },
    /// Balanced K_n model from a K_{2n-1} model.
    BalanceClique {
        #[arg(long)]
        model: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        host: PathBuf,
    },
    /// Model of an outerplanar graph on n vertices in the n×n grid.
    EmbedOuterplanar {
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        pattern: PathBuf,
    },
    /// Balanced model of an outerplanar graph from a model of the n²×4n grid.
    BalanceOuterplanar {
        #[arg(long)]
        pattern: PathBuf,
        /// Host graph; the grid itself when omitted.
        #[arg(long, requires = "host_model")]
        host: Option<PathBuf>,
        /// Model of the n²×4n grid in the host.
        #[arg(long, requires = "host")]
        host_model: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformName {
    DoubleSpeed,
    HunterToCop,
    ZerovisToCop,
    CopToZerovis,
    CopToFlip,
    FlipToCop,
}

type Res<T> = Result<T, CliError>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn read_graph(path: &Path) -> Res<Graph> {
    Ok(parse_graph(&read(path)?)?)
}

fn read_strategy(path: &Path) -> Res<CopStrategy> {
    Ok(parse_strategy(&read(path)?)?)
}

fn emit(json_mode: bool, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    if json_mode {
        println!("{}", value());
    } else {
        print!("{}", text());
    }
}

fn strategy_json(s: &CopStrategy) -> Value {
    json!({ "game": s.game.name(), "radius": s.radius.to_string(), "budget": s.budget, "rounds": s.rounds })
}

fn write_or_print(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn ensure_dir(dir: &Path) -> Res<()> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })
}

fn run(cli: Cli) -> Res<Exit> {
    let js = cli.json;
    match cli.cmd {
        Cmd::Gen { family, params, seed, output, dot } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let g = generate(&Family::parse(&family, &params)?, seed)?;
            if let Some(d) = dot {
                write(&d, &to_dot(&g, None))?;
            }
            match output {
                Some(p) => {
                    write(&p, &write_graph(&g))?;
                    emit(js, || format!("wrote {} ({} vertices, {} edges)\n", p.display(), g.n(), g.m()), || {
                        json!({ "path": p, "n": g.n(), "m": g.m() })
                    });
                }
                None if js => println!("{}", json!({ "n": g.n(), "edges": g.edges() })),
                None => print!("{}", write_graph(&g)),
            }
            Ok(Exit::Win)
        }
        Cmd::Solve { game, radius, max_states, dominance, output, graph } => {
            let g = read_graph(&graph)?;
            let cfg = SolverConfig { max_states, dominance };
            let (value, witness) = compute_with(&g, game, radius, &cfg, &RayonMap)?;
            let text = write_strategy(&witness);
            if let Some(p) = &output {
                write(p, &text)?;
            }
            emit(
                js,
                || match &output {
                    Some(p) => format!("{value}\nwitness: {}\n", p.display()),
                    None => format!("{value}\n{text}"),
                },
                || json!({ "value": value, "witness": strategy_json(&witness) }),
            );
            Ok(Exit::Win)
        }
        Cmd::Verify { strategy, flip, radius, capture_at_end, graph } => {
            let g = read_graph(&graph)?;
            if flip {
                let fs = parse_flip_strategy(&read(&strategy)?, g.n())?;
                let rule = if capture_at_end { CaptureRule::AtEnd } else { CaptureRule::Immediate };
                let t = flip_simulate(&g, &fs, radius, rule)?;
                let residual = t.robber.last().map(|a| a.to_vec()).unwrap_or_default();
                emit(
                    js,
                    || match t.cleared_at {
                        Some(i) => format!("win: cleared after round {i}\n"),
                        None => format!("lose: robber may be on {residual:?}\n"),
                    },
                    || json!({ "win": t.win, "cleared_at": t.cleared_at, "residual": residual }),
                );
                return Ok(if t.win { Exit::Win } else { Exit::Lose });
            }
            let s = read_strategy(&strategy)?;
            let verdict = verify(&g, &s);
            let (text, value, code) = match &verdict {
                Verdict::Win { cleared_at } => (
                    format!("win: cleared after round {cleared_at}\n"),
                    json!({ "verdict": "win", "cleared_at": cleared_at }),
                    Exit::Win,
                ),
                Verdict::Lose { residual } => (
                    format!("lose: robber may be on {:?}\n", residual.to_vec()),
                    json!({ "verdict": "lose", "residual": residual.to_vec() }),
                    Exit::Lose,
                ),
                Verdict::Invalid(msg) => {
                    (format!("invalid: {msg}\n"), json!({ "verdict": "invalid", "reason": msg }), Exit::Invalid)
                }
            };
            emit(js, || text, || value);
            Ok(code)
        }
        Cmd::Certify(c) => certify(js, c),
        Cmd::Construct(c) => construct(js, c),
        Cmd::Transform { name, strategy, diameter, output, graph } => {
            let g = read_graph(&graph)?;
            let out = match name {
                TransformName::FlipToCop => {
                    let fs = parse_flip_strategy(&read(&strategy)?, g.n())?;
                    write_strategy(&transforms::flip_to_cop(&g, &fs)?)
                }
                TransformName::CopToFlip => write_flip_strategy(&transforms::cop_to_flip(&g, &read_strategy(&strategy)?)?),
                other => {
                    let s = read_strategy(&strategy)?;
                    let t = match other {
                        TransformName::DoubleSpeed => transforms::double_speed(&g, &s)?,
                        TransformName::HunterToCop => transforms::hunter_to_cop(&g, &s)?,
                        TransformName::ZerovisToCop => transforms::zerovis_to_cop(&g, &s)?,
                        _ => {
                            let d = match (diameter, g.diameter()) {
                                (Some(d), _) => d,
                                (None, Diameter::Finite(d)) => d.max(1) as u32,
                                (None, Diameter::Infinite) => {
                                    return Err(CliError::Usage("graph is disconnected".into()));
                                }
                            };
                            transforms::cop_to_zerovis(&g, &s, d)?
                        }
                    };
                    write_strategy(&t)
                }
            };
            if js {
                let p = output.as_ref().map(|p| p.display().to_string());
                if let Some(p) = &output {
                    write(p, &out)?;
                }
                println!("{}", json!({ "output": p, "text": if p.is_none() { Some(&out) } else { None } }));
            } else {
                write_or_print(output.as_deref(), &out)?;
            }
            Ok(Exit::Win)
        }
        Cmd::Minor(m) => minor(js, m),
        Cmd::Naf { value, g, lemma_check, brute_cap } => naf_cmd(js, value, g, lemma_check, brute_cap),
    }
}

fn certify(js: bool, c: Certify) -> Res<Exit> {
    let (line, value) = match c {
        Certify::Expansion { a, k, max_sets, graph } => {
            let g = read_graph(&graph)?;
            match expansion_certificate(&g, a, k, max_sets)? {
                Expansion::Certified { a, k } => (
                    format!("LB bcw1 > {k} via expansion a={a}\n"),
                    json!({ "certified": true, "method": "expansion", "a": a, "k": k }),
                ),
                Expansion::Violation { set, boundary } => {
                    emit(
                        js,
                        || format!("no certificate: {set:?} has {boundary} outside neighbours\n"),
                        || json!({ "certified": false, "set": set, "boundary": boundary }),
                    );
                    return Ok(Exit::Lose);
                }
            }
        }
        Certify::BalancedClique { model, graph } => {
            let host = read_graph(&graph)?;
            let branch = parse_model(&read(&model)?)?;
            let h = branch.len();
            let lb = lb_balanced_clique(&MinorModel::new(complete(h), host, branch))?;
            (
                format!("LB bcw1 > {} via balanced-clique h={h}\n", lb - 1),
                json!({ "certified": true, "method": "balanced-clique", "h": h, "bound": lb }),
            )
        }
        Certify::BalancedBintree { model, graph } => {
            let host = read_graph(&graph)?;
            let branch = parse_model(&read(&model)?)?;
            let nodes = branch.len();
            let depth = (nodes + 1).trailing_zeros() as usize;
            if nodes == 0 || (nodes + 1).count_ones() != 1 {
                return Err(CliError::Usage(format!("{nodes} pattern vertices is not 2^(d+1)-1")));
            }
            let pattern = cbt(depth - 1);
            debug_assert!(complete_binary_tree_shape(&pattern).is_some());
            let lb = lb_balanced_bintree(&MinorModel::new(pattern, host, branch))?;
            (
                format!("LB bcw1 > {} via balanced-bintree nodes={nodes}\n", lb - 1),
                json!({ "certified": true, "method": "balanced-bintree", "nodes": nodes, "bound": lb }),
            )
        }
    };
    emit(js, || line, || value);
    Ok(Exit::Win)
}

fn construct(js: bool, c: Construct) -> Res<Exit> {
    let (dir, dot, graph, strategy, model) = match c {
        Construct::Treesub { td, max_vertices, output, dot, graph } => {
            let g = read_graph(&graph)?;
            let td = match td {
                Some(p) => parse_td(&read(&p)?)?,
                None => {
                    let (_, order) = treewidth_oracle(&g)?;
                    from_elimination_order(&g, &order)?
                }
            };
            let nice = make_nice(&g, &td)?;
            let out = treesub_strategy_capped(&g, &nice, max_vertices)?;
            ensure_dir(&output)?;
            write(&output.join("nice.td"), &write_td(nice.td(), g.n()))?;
            let lengths: String = out.lengths.iter().map(|l| format!("{l}\n")).collect();
            write(&output.join("lengths.txt"), &lengths)?;
            (output, dot, out.graph, out.strategy, None)
        }
        Construct::Bintree { height, output, dot } => {
            let t = bintree_subdivision(height)?;
            (output, dot, t.graph, t.strategy, None)
        }
        Construct::K2t { t, output, dot } => {
            let ex = k2t_example(t)?;
            (output, dot, ex.graph, ex.strategy, Some(ex.model))
        }
    };
    ensure_dir(&dir)?;
    write(&dir.join("graph.txt"), &write_graph(&graph))?;
    write(&dir.join("strategy.txt"), &write_strategy(&strategy))?;
    if let Some(m) = &model {
        write(&dir.join("model.txt"), &write_model(m.branch_sets()))?;
    }
    if let Some(d) = dot {
        write(&d, &to_dot(&graph, model.as_ref().map(MinorModel::branch_sets)))?;
    }
    emit(
        js,
        || {
            format!(
                "wrote {}: {} vertices, {} rounds, {} cops\n",
                dir.display(),
                graph.n(),
                strategy.len(),
                strategy.max_round_size()
            )
        },
        || json!({ "dir": dir, "n": graph.n(), "rounds": strategy.len(), "cops": strategy.max_round_size() }),
    );
    Ok(Exit::Win)
}

fn finish_model(js: bool, m: &MinorModel, output: Option<PathBuf>, dot: Option<PathBuf>) -> Res<Exit> {
    if let Some(d) = dot {
        write(&d, &to_dot(m.host(), Some(m.branch_sets())))?;
    }
    let text = write_model(m.branch_sets());
    if js {
        if let Some(p) = &output {
            write(p, &text)?;
        }
        println!("{}", json!({ "branch_sets": m.branch_sets(), "branch_size": m.branch_size() }));
    } else {
        write_or_print(output.as_deref(), &text)?;
    }
    Ok(Exit::Win)
}

fn minor(js: bool, m: Minor) -> Res<Exit> {
    match m {
        Minor::Verify { pattern, model, host } => {
            let m = MinorModel::new(read_graph(&pattern)?, read_graph(&host)?, parse_model(&read(&model)?)?);
            match m.verify() {
                Ok(()) => {
                    let balanced = m.is_balanced();
                    emit(js, || format!("ok (balanced: {balanced})\n"), || json!({ "valid": true, "balanced": balanced }));
                    Ok(Exit::Win)
                }
                Err(v) => {
                    emit(js, || format!("violation: {v}\n"), || json!({ "valid": false, "violation": v.to_string() }));
                    Ok(Exit::Lose)
                }
            }
        }
        Minor::BalanceClique { model, output, dot, host } => {
            let branch = parse_model(&read(&model)?)?;
            let input = MinorModel::new(complete(branch.len()), read_graph(&host)?, branch);
            finish_model(js, &balance_clique(&input)?, output, dot)
        }
        Minor::EmbedOuterplanar { output, dot, pattern } => {
            let p = read_graph(&pattern)?;
            let m = embed_outerplanar(&p)?;
            debug_assert!(has_diagonal_property(&m, p.n()));
            finish_model(js, &m, output, dot)
        }
        Minor::BalanceOuterplanar { pattern, host, host_model, output, dot } => {
            let p = read_graph(&pattern)?;
            let n = p.n();
            let grid_pattern = grid(n * n, 4 * n);
            let host_model = match (host, host_model) {
                (Some(h), Some(hm)) => MinorModel::new(grid_pattern, read_graph(&h)?, parse_model(&read(&hm)?)?),
                _ => MinorModel::identity(&grid_pattern),
            };
            finish_model(js, &balanced_outerplanar_in_grid(&p, &host_model)?, output, dot)
        }
    }
}

fn naf_cmd(js: bool, value: Option<String>, g: Option<u64>, lemma: Option<u64>, brute_cap: Option<usize>) -> Res<Exit> {
    match (value, g, lemma) {
        (Some(v), None, None) => {
            let k: BigInt = v.parse().map_err(|_| CliError::Usage(format!("not an integer: {v:?}")))?;
            let f = naf(&k);
            let msb_first: Vec<i8> = f.digits.iter().rev().copied().collect();
            emit(
                js,
                || {
                    let digits: Vec<String> = msb_first.iter().map(i8::to_string).collect();
                    format!("digits: {}\nweight: {}\n", digits.join(" "), f.weight())
                },
                || json!({ "value": k.to_string(), "digits_lsb_first": f.digits, "weight": f.weight() }),
            );
            Ok(Exit::Win)
        }
        (None, Some(k), None) => {
            let g = g_of_k(k)?;
            emit(js, || format!("{g}\n"), || json!({ "k": k, "g": g.to_string() }));
            Ok(Exit::Win)
        }
        (None, None, Some(k)) => {
            let r = naf_lemma_check(k, brute_cap)?;
            let brute = match r.brute {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "skipped",
            };
            let sufficient = if r.sufficient { "pass" } else { "fail" };
            emit(
                js,
                || format!("k={} g={} sufficient={sufficient} brute={brute}\n", r.k, r.g),
                || json!({ "k": r.k, "g": r.g.to_string(), "sufficient": r.sufficient, "brute": r.brute }),
            );
            Ok(if r.passed() { Exit::Win } else { Exit::Lose })
        }
        _ => Err(CliError::Usage("give exactly one of <int>, --g K, --lemma-check K".into())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(Exit::Invalid as u8);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit() as u8)
        }
    }
}
