//! `kdis`: batch CLI over the k-DIS library. Results go to stdout (single
//! value first in plain mode, stable keys with `--json`), diagnostics to
//! stderr. Exit codes: 0 success, 1 domain error, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use kdis_core::codes;
use kdis_core::extremal::{
    self, expected_kdis_count, monte_carlo_expected, poly_root, RandomModelParams, ScanOptions,
};
use kdis_core::generators::parse_graph_expr;
use kdis_core::geometry;
use kdis_core::graph::{
    edge_list_decode, edge_list_encode, graph6_decode, graph6_encode, parse_edge_list, Graph,
};
use kdis_core::search::{count_kdis, enumerate_kdis, is_kdis};
use kdis_core::tree::solve_forest_kdis;

#[derive(Parser)]
#[command(name = "kdis", version, about = "Exact combinatorics of k-dominating independent sets", max_term_width = 100)]
struct Cli {
    /// Emit machine-readable JSON instead of plain values.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// Exactly one graph source.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Generator expression: K5, Kb(3,3), turan(9,3), kneser(5,2),
    /// cart(K3,K3), pow(K3,4), union(A,B), cone(A), path(7), cycle(5),
    /// star(4), multi(2,2,2), empty(4).
    #[arg(long)]
    graph: Option<String>,
    /// graph6 string, or a path to a file whose first non-empty line is one.
    #[arg(long)]
    g6: Option<String>,
    /// Edge-list file: "n m" header, then one "u v" line per edge.
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        if let Some(expr) = &self.graph {
            return Ok(parse_graph_expr(expr)?);
        }
        if let Some(g6) = &self.g6 {
            let line = resolve_g6(g6)?;
            return Ok(graph6_decode(line.trim())?);
        }
        let path = self.edges.as_ref().expect("clap enforces one source");
        let text = fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
        Ok(edge_list_decode(&text)?)
    }

    /// Raw (n, edges) form; edge-list files skip the bit-packed graph and its
    /// vertex cap, so the forest solver can take very large inputs.
    fn load_raw(&self) -> Result<(usize, Vec<(usize, usize)>)> {
        if let Some(path) = &self.edges {
            let text = fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
            return Ok(parse_edge_list(&text)?);
        }
        let g = self.load()?;
        Ok((g.vertex_count(), g.edges()))
    }
}

fn resolve_g6(value: &str) -> Result<String> {
    let path = std::path::Path::new(value);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
        return text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .map(str::to_owned)
            .ok_or_else(|| anyhow!("{value}: empty graph6 file"));
    }
    Ok(value.to_owned())
}

#[derive(Subcommand)]
enum Command {
    /// Count the k-DISes of a graph.
    Count {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short)]
        k: usize,
    },
    /// List every k-DIS, one per line, vertices ascending.
    Enumerate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short)]
        k: usize,
    },
    /// Solve a forest: print its unique k-DIS or NONE.
    Tree {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short)]
        k: usize,
    },
    /// Exact maximum k-DIS count over all labeled graphs on n vertices.
    Extremal {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// Shard count (default: KDIS_THREADS or 4x the worker threads).
        #[arg(long)]
        shards: Option<usize>,
        /// Enable the n = 9 scan (2^36 graphs; hours of CPU time).
        #[arg(long)]
        allow_long: bool,
        /// Resumable checkpoint file for long runs.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Scan connected graphs only.
        #[arg(long)]
        connected: bool,
        /// Witness cap in the report.
        #[arg(long, default_value_t = 100)]
        witnesses: usize,
    },
    /// Exact maximum k-DIS count over all labeled trees on n vertices.
    ExtremalTrees {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        shards: Option<usize>,
        #[arg(long, default_value_t = 100)]
        witnesses: usize,
    },
    /// Number of ternary length-k MDS codes of minimum distance 2, via the
    /// k-DIS count of the k-fold K3 product.
    Mds {
        #[arg(short)]
        k: usize,
    },
    /// Number of linear ternary length-k MDS codes of minimum distance 2.
    MdsLinear {
        #[arg(short)]
        k: usize,
    },
    /// Projective plane constructions over PG(2,q).
    Geometry {
        #[command(subcommand)]
        cmd: GeometryCmd,
    },
    /// Expected number of size-t k-DISes of G(n,p).
    Expect {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        p: f64,
    },
    /// Monte Carlo estimate (mean, standard error) of the same statistic.
    Montecarlo {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        p: f64,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        /// Seed for the ChaCha12 generator; runs are reproducible per seed.
        #[arg(long)]
        seed: u64,
    },
    /// Growth-rate constants: the degree-branching base for k, and for k = 2
    /// the refinement roots.
    Bounds {
        #[arg(short)]
        k: usize,
    },
    /// Convert between graph6 and the edge-list format (direction depends on
    /// the input kind; generator expressions convert to graph6).
    Convert {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Subcommand)]
enum GeometryCmd {
    /// Build PG(2,q) and print its parameters.
    Build {
        #[arg(short)]
        q: usize,
    },
    /// Regular hyperoval (conic plus nucleus): prints its points in the
    /// x:y:z point-set format.
    Hyperoval {
        #[arg(short)]
        q: usize,
    },
    /// Check the two k-DIS conditions for a point set file.
    Check {
        #[arg(short)]
        q: usize,
        /// Point-set file, one x:y:z point per line.
        #[arg(long)]
        points: PathBuf,
        #[arg(short)]
        k: usize,
    },
}

fn default_shards(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var("KDIS_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| 4 * rayon::current_num_threads().max(1))
}

fn print_count(json: bool, op: &str, n: usize, k: usize, count: u128) {
    if json {
        println!(
            "{}",
            json!({"op": op, "n": n, "k": k, "count": count as u64})
        );
    } else {
        println!("{count}");
    }
}

fn run(cli: Cli) -> Result<()> {
    let json = cli.json;
    match cli.command {
        Command::Count { input, k } => {
            let g = input.load()?;
            let count = count_kdis(&g, k)?;
            print_count(json, "count", g.vertex_count(), k, count);
        }
        Command::Enumerate { input, k } => {
            let g = input.load()?;
            let sets = enumerate_kdis(&g, k)?;
            if json {
                let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
                println!(
                    "{}",
                    json!({"op": "enumerate", "n": g.vertex_count(), "k": k,
                           "count": lists.len(), "sets": lists})
                );
            } else {
                for s in sets {
                    let words: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                    println!("{}", words.join(" "));
                }
            }
        }
        Command::Tree { input, k } => {
            let (n, edges) = input.load_raw()?;
            let solution = solve_forest_kdis(n, &edges, k)?;
            if json {
                println!(
                    "{}",
                    json!({"op": "tree", "n": n, "k": k,
                           "exists": solution.is_some(),
                           "set": solution.clone().unwrap_or_default()})
                );
            } else {
                match solution {
                    None => println!("NONE"),
                    Some(d) => {
                        let words: Vec<String> = d.iter().map(|v| v.to_string()).collect();
                        println!("{}", words.join(" "));
                    }
                }
            }
        }
        Command::Extremal {
            n,
            k,
            shards,
            allow_long,
            checkpoint,
            connected,
            witnesses,
        } => {
            let opts = ScanOptions {
                shards: default_shards(shards),
                allow_heavy: allow_long,
                checkpoint,
                connected_only: connected,
                witness_cap: witnesses,
            };
            let report = extremal::max_kdis_count(n, k, &opts)?;
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("{}", report.max);
            }
        }
        Command::ExtremalTrees {
            n,
            k,
            shards,
            witnesses,
        } => {
            let opts = ScanOptions {
                shards: default_shards(shards),
                witness_cap: witnesses,
                ..ScanOptions::default()
            };
            let report = extremal::max_kdis_count_trees(n, k, &opts)?;
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("{}", report.max);
            }
        }
        Command::Mds { k } => {
            let count = codes::count_mds_via_kdis(k)?;
            print_count(json, "mds", k, k, count);
        }
        Command::MdsLinear { k } => {
            let count = codes::count_linear_mds_q3(k)?;
            print_count(json, "mds-linear", k, k, count);
        }
        Command::Geometry { cmd } => run_geometry(cmd, json)?,
        Command::Expect { n, t, k, p } => {
            let params = RandomModelParams {
                n,
                t,
                k,
                p,
                samples: 1000,
                seed: 0,
            };
            let value = expected_kdis_count(&params)?;
            if json {
                println!(
                    "{}",
                    json!({"op": "expect", "n": n, "t": t, "k": k, "p": p, "expected": value})
                );
            } else {
                println!("{value}");
            }
        }
        Command::Montecarlo {
            n,
            t,
            k,
            p,
            samples,
            seed,
        } => {
            let params = RandomModelParams {
                n,
                t,
                k,
                p,
                samples,
                seed,
            };
            let (mean, stderr) = monte_carlo_expected(&params)?;
            if json {
                println!(
                    "{}",
                    json!({"op": "montecarlo", "n": n, "t": t, "k": k, "p": p,
                           "samples": samples, "seed": seed,
                           "mean": mean, "stderr": stderr})
                );
            } else {
                println!("{mean} {stderr}");
            }
        }
        Command::Bounds { k } => {
            if k == 0 {
                return Err(anyhow!("k must be at least 1"));
            }
            let (alpha, d) = extremal::alpha_bound(k);
            let mut payload = json!({"op": "bounds", "k": k, "alpha": alpha, "d": d});
            if k == 2 {
                let t1 = poly_root(&[-1.0, -1.0, 0.0, 0.0, 1.0], 1.0, 2.0)?;
                let t2 = poly_root(&[-2.0, -1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0], 1.0, 2.0)?;
                let t3 = poly_root(&[-2.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0], 1.0, 2.0)?;
                payload["tau1"] = json!(t1);
                payload["tau2"] = json!(t2);
                payload["tau3"] = json!(t3);
                if json {
                    println!("{payload}");
                } else {
                    println!("{alpha} {d}");
                    println!("tau1 {t1}");
                    println!("tau2 {t2}");
                    println!("tau3 {t3}");
                }
            } else if json {
                println!("{payload}");
            } else {
                println!("{alpha} {d}");
            }
        }
        Command::Convert { input } => {
            // graph6 in -> edge list out; otherwise -> graph6 out.
            let to_edges = input.g6.is_some();
            let g = input.load()?;
            if json {
                println!(
                    "{}",
                    json!({"op": "convert", "n": g.vertex_count(),
                           "g6": graph6_encode(&g),
                           "edges": g.edges()})
                );
            } else if to_edges {
                print!("{}", edge_list_encode(&g));
            } else {
                println!("{}", graph6_encode(&g));
            }
        }
    }
    Ok(())
}

fn run_geometry(cmd: GeometryCmd, json: bool) -> Result<()> {
    match cmd {
        GeometryCmd::Build { q } => {
            let plane = geometry::build_pg2(q)?;
            let size = plane.size();
            if json {
                println!(
                    "{}",
                    json!({"op": "geometry-build", "q": q, "points": size, "lines": size,
                           "points_per_line": q + 1,
                           "incidence_vertices": 2 * size})
                );
            } else {
                println!(
                    "q={q} points={size} lines={size} per_line={} incidence_vertices={}",
                    q + 1,
                    2 * size
                );
            }
        }
        GeometryCmd::Hyperoval { q } => {
            let plane = geometry::build_pg2(q)?;
            let oval = geometry::regular_hyperoval(&plane)?;
            let skew = plane.skew_lines(&oval);
            let g = geometry::incidence_graph(&plane);
            let d = geometry::point_set_dis(&plane, &oval);
            let verified = is_kdis(&g, &d, 2);
            if json {
                let points: Vec<String> = oval
                    .iter()
                    .map(|&p| {
                        let [x, y, z] = plane.point(p);
                        format!("{x}:{y}:{z}")
                    })
                    .collect();
                println!(
                    "{}",
                    json!({"op": "geometry-hyperoval", "q": q, "size": oval.len(),
                           "points": points, "skew_lines": skew.len(),
                           "dis_size": d.len(), "is_2dis": verified})
                );
            } else {
                print!("{}", geometry::format_point_set(&plane, &oval));
                eprintln!(
                    "hyperoval of PG(2,{q}): {} points, {} skew lines, DIS size {}, 2-DIS: {verified}",
                    oval.len(),
                    skew.len(),
                    d.len()
                );
            }
        }
        GeometryCmd::Check { q, points, k } => {
            let plane = geometry::build_pg2(q)?;
            let text =
                fs::read_to_string(&points).with_context(|| format!("reading {points:?}"))?;
            let q_set = geometry::parse_point_set(&plane, &text)?;
            let check = geometry::check_arc_conditions(&plane, &q_set, k)?;
            // Soft diagnostic: tangent-free sets beyond 2q-2 points still
            // satisfy the conditions but leave the guaranteed regime.
            if check.holds
                && plane.tangent_lines(&q_set).is_empty()
                && q_set.len() > 2 * q - 2
            {
                eprintln!(
                    "note: tangent-free set of {} points exceeds 2q-2 = {}",
                    q_set.len(),
                    2 * q - 2
                );
            }
            if json {
                let violations: Vec<String> =
                    check.violations.iter().map(|v| format!("{v:?}")).collect();
                println!(
                    "{}",
                    json!({"op": "geometry-check", "q": q, "k": k,
                           "points": q_set.len(), "holds": check.holds,
                           "violations": violations})
                );
            } else if check.holds {
                println!("OK");
            } else {
                println!("FAIL");
                for v in &check.violations {
                    match v {
                        geometry::ArcViolation::LineMeetsFewPoints { line, meets } => {
                            let [a, b, c] = plane.line(*line);
                            println!("line {a}:{b}:{c} meets the set in {meets} points");
                        }
                        geometry::ArcViolation::PointLacksSkewLines { point, skew } => {
                            let [x, y, z] = plane.point(*point);
                            println!("point {x}:{y}:{z} lies on only {skew} skew lines");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
