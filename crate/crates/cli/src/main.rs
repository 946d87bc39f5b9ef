//! `sunscan`: reproducible runs of the sun-detection machinery.
//!
//! Reports are plain text, one fact per line, in a stable order, so runs
//! with identical arguments and inputs produce byte-identical output.
//!
//! Exit codes: 0 = verdict computed, 1 = a checked equivalence failed on
//! some instance, 2 = usage or input error, 3 = search budget exhausted.

use clap::{Parser, Subcommand};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use sunscan::chordal::{
    find_antihole_geq, find_elimination_ordering, find_hole, EliminationKind,
};
use sunscan::oracle::{has_stable_set, max_stable_set};
use sunscan::reduction::{build_f, build_h, emit_labels, LabelMap};
use sunscan::sun::{find_any_sun, find_k_sun, SearchBudget, SearchOutcome, SunWitness};
use sunscan::{emit_graph, parse_graph, random_triangle_free, Graph};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sunscan",
    version,
    about = "Induced sun detection, strongly chordal recognition, and reduction gadgets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for an induced sun; prints the witness, ABSENT, or
    /// INDETERMINATE with the node count
    DetectSun {
        /// Input graph in edge-list format
        graph: PathBuf,
        /// Fix the sun order t >= 3; without it every order is tried
        #[arg(long)]
        order: Option<usize>,
        /// Search-node budget
        #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES)]
        budget: u64,
    },
    /// Chordal / strongly chordal verdicts with an ordering or certificate
    Recognize {
        graph: PathBuf,
        /// Budget for the sun certificate when the graph is chordal but not
        /// strongly chordal
        #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES)]
        budget: u64,
    },
    /// Build the stable-set gadget f(G,k); writes <prefix>.el and
    /// <prefix>.labels
    ReduceF {
        graph: PathBuf,
        /// Gadget parameter (k >= 4)
        #[arg(short)]
        k: usize,
        /// Output path prefix
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the edge-subdivision gadget h(G); writes <prefix>.el and
    /// <prefix>.labels
    ReduceH {
        graph: PathBuf,
        /// Output path prefix
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check "stable set of size k in G <=> sun in f(G,k)" on seeded random
    /// triangle-free instances; one line per instance
    #[command(name = "verify-claim1")]
    VerifyClaim1 {
        /// Vertex count of the sampled graphs
        #[arg(long)]
        n: usize,
        /// Number of instances
        #[arg(long)]
        samples: usize,
        /// Base seed; instance j uses seed+j with an edge target cycling
        /// through 0..=n^2/4
        #[arg(long)]
        seed: u64,
        /// Gadget parameter
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES)]
        budget: u64,
    },
    /// Search for an antihole of at least the given length
    VerifyAntihole {
        graph: PathBuf,
        /// Minimum antihole length (>= 5)
        #[arg(long, default_value_t = 7)]
        min_length: usize,
    },
    /// Emit a seeded random triangle-free graph on stdout
    GenTrifree {
        #[arg(long)]
        n: usize,
        /// Edge target; the draw may stop short
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Exact maximum stable set or clique
    Oracle {
        #[command(subcommand)]
        target: OracleTarget,
    },
}

#[derive(Subcommand)]
enum OracleTarget {
    /// Maximum stable set
    StableSet {
        graph: PathBuf,
        /// Also answer the size-k decision question
        #[arg(short)]
        k: Option<usize>,
    },
    /// Maximum clique (solved on the complement)
    Clique {
        graph: PathBuf,
        #[arg(short)]
        k: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn vertex_list(vs: &[u32]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn witness_text(w: &SunWitness) -> String {
    format!("{}\n{}\n{}", w.order(), vertex_list(w.hub()), vertex_list(w.ears()))
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::DetectSun { graph, order, budget } => {
            let g = load_graph(&graph)?;
            let budget = SearchBudget::new(budget);
            let outcome = match order {
                Some(t) => find_k_sun(&g, t, budget).map_err(|e| e.to_string())?,
                None => find_any_sun(&g, budget),
            };
            match outcome {
                SearchOutcome::Found(w) => {
                    println!("{}", witness_text(&w));
                    Ok(0)
                }
                SearchOutcome::Absent => {
                    println!("ABSENT");
                    Ok(0)
                }
                SearchOutcome::Indeterminate { nodes_used } => {
                    println!("INDETERMINATE {nodes_used}");
                    Ok(EXIT_BUDGET)
                }
            }
        }

        Command::Recognize { graph, budget } => {
            let g = load_graph(&graph)?;
            let simplicial = find_elimination_ordering(&g, EliminationKind::Simplicial);
            let simple = find_elimination_ordering(&g, EliminationKind::Simple);
            let mut out = String::new();
            let mut code = 0;
            match &simplicial {
                Some(o) => {
                    writeln!(out, "CHORDAL yes").unwrap();
                    writeln!(out, "SIMPLICIAL_ORDER {}", vertex_list(o.order())).unwrap();
                }
                None => {
                    writeln!(out, "CHORDAL no").unwrap();
                    let hole = find_hole(&g).expect("no simplicial ordering implies a hole");
                    writeln!(out, "HOLE {}", vertex_list(hole.cycle())).unwrap();
                }
            }
            match &simple {
                Some(o) => {
                    writeln!(out, "STRONGLY_CHORDAL yes").unwrap();
                    writeln!(out, "SIMPLE_ORDER {}", vertex_list(o.order())).unwrap();
                }
                None => {
                    writeln!(out, "STRONGLY_CHORDAL no").unwrap();
                    // A chordal graph that is not strongly chordal contains a
                    // sun; certify it.
                    if simplicial.is_some() {
                        match find_any_sun(&g, SearchBudget::new(budget)) {
                            SearchOutcome::Found(w) => {
                                writeln!(out, "SUN_ORDER {}", w.order()).unwrap();
                                writeln!(out, "SUN_HUB {}", vertex_list(w.hub())).unwrap();
                                writeln!(out, "SUN_EARS {}", vertex_list(w.ears())).unwrap();
                            }
                            SearchOutcome::Absent => {
                                // Recognition and search disagree: a real
                                // counterexample to the characterization.
                                writeln!(out, "SUN_SEARCH absent").unwrap();
                                code = EXIT_VIOLATION;
                            }
                            SearchOutcome::Indeterminate { nodes_used } => {
                                writeln!(out, "SUN_SEARCH INDETERMINATE {nodes_used}").unwrap();
                                code = EXIT_BUDGET;
                            }
                        }
                    }
                }
            }
            print!("{out}");
            Ok(code)
        }

        Command::ReduceF { graph, k, output } => {
            let g = load_graph(&graph)?;
            let f = build_f(&g, k).map_err(|e| e.to_string())?;
            write_reduction(&output, f.product(), f.labels())
        }

        Command::ReduceH { graph, output } => {
            let g = load_graph(&graph)?;
            let h = build_h(&g);
            write_reduction(&output, h.product(), h.labels())
        }

        Command::VerifyClaim1 { n, samples, seed, k, budget } => {
            let budget = SearchBudget::new(budget);
            let max_edges = n * n / 4;
            let mut violations = 0usize;
            let mut indeterminate = 0usize;
            for j in 0..samples as u64 {
                let target = (j as usize) % (max_edges + 1);
                let g = random_triangle_free(n, target, seed.wrapping_add(j));
                let f = build_f(&g, k).map_err(|e| e.to_string())?;
                let stable = has_stable_set(&g, k);
                let (sun, verdict) = match find_any_sun(f.product(), budget) {
                    SearchOutcome::Found(_) => ("found", stable),
                    SearchOutcome::Absent => ("absent", !stable),
                    SearchOutcome::Indeterminate { .. } => {
                        indeterminate += 1;
                        ("indeterminate", true)
                    }
                };
                if !verdict {
                    violations += 1;
                }
                println!(
                    "instance {j} n={n} edges={} stable{k}={} sun={sun} {}",
                    g.edge_count(),
                    if stable { "yes" } else { "no" },
                    if sun == "indeterminate" {
                        "INDETERMINATE"
                    } else if verdict {
                        "PASS"
                    } else {
                        "FAIL"
                    }
                );
            }
            println!("CHECKED {samples} VIOLATIONS {violations} INDETERMINATE {indeterminate}");
            if violations > 0 {
                Ok(EXIT_VIOLATION)
            } else if indeterminate > 0 {
                Ok(EXIT_BUDGET)
            } else {
                Ok(0)
            }
        }

        Command::VerifyAntihole { graph, min_length } => {
            if min_length < 5 {
                return Err("minimum antihole length is 5".into());
            }
            let g = load_graph(&graph)?;
            match find_antihole_geq(&g, min_length) {
                None => {
                    println!("ANTIHOLE none");
                    Ok(0)
                }
                Some(cert) => {
                    println!("ANTIHOLE {}", vertex_list(cert.cycle()));
                    Ok(EXIT_VIOLATION)
                }
            }
        }

        Command::GenTrifree { n, edges, seed } => {
            print!("{}", emit_graph(&random_triangle_free(n, edges, seed)));
            Ok(0)
        }

        Command::Oracle { target } => {
            let (path, k, complemented) = match &target {
                OracleTarget::StableSet { graph, k } => (graph, *k, false),
                OracleTarget::Clique { graph, k } => (graph, *k, true),
            };
            let g = load_graph(path)?;
            let host = if complemented { g.complement() } else { g };
            let result = max_stable_set(&host);
            println!("SIZE {}", result.size);
            println!("BEST {}", vertex_list(result.best.as_slice()));
            println!("NODES {}", result.nodes_explored);
            if let Some(k) = k {
                println!("HAS_{k} {}", if has_stable_set(&host, k) { "yes" } else { "no" });
            }
            Ok(0)
        }
    }
}

fn write_reduction(prefix: &Path, product: &Graph, labels: &LabelMap) -> Result<u8, String> {
    let graph_path = PathBuf::from(format!("{}.el", prefix.display()));
    let label_path = PathBuf::from(format!("{}.labels", prefix.display()));
    std::fs::write(&graph_path, emit_graph(product))
        .map_err(|e| format!("cannot write {}: {e}", graph_path.display()))?;
    std::fs::write(&label_path, emit_labels(labels))
        .map_err(|e| format!("cannot write {}: {e}", label_path.display()))?;
    println!("VERTICES {}", product.vertex_count());
    println!("EDGES {}", product.edge_count());
    println!("WROTE {}", graph_path.display());
    println!("WROTE {}", label_path.display());
    Ok(0)
}
