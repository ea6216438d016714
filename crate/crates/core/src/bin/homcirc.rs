use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use homcirc::counting::{count_dcc_removing, enumerate_circuits};
use homcirc::graph::Circuit;
use homcirc::hierholzer::{detect_dcc_with, DetectOptions};
use homcirc::homology::abelianize;
use homcirc::hscdp::{solve_hscdp_with, HscdpOptions};
use homcirc::io::{
    chain_to_json, darts_to_json, graph_to_json, parse_chain, parse_darts, parse_graph,
    parse_tasks, tasks_to_json,
};
use homcirc::trp::{brute_force_trp, solve_trp};
use homcirc::{fixtures, random, Error};

#[derive(Parser)]
#[command(
    name = "homcirc",
    version,
    about = "Circuits in homology classes of multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a shortest circuit for a connected circulation
    Detect {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        start: Option<usize>,
        /// Edge ids to prefer, comma separated
        #[arg(long, value_delimiter = ',')]
        prefer: Vec<usize>,
    },
    /// Count shortest circuits in a homology class
    Count {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        /// Print the factors of the product formula
        #[arg(long)]
        factors: bool,
        /// Vertex whose row and column are removed
        #[arg(long)]
        remove: Option<usize>,
    },
    /// List every shortest circuit in a homology class
    Enumerate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Shortest circuit for any nonzero circulation
    Shortest {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        /// Use these edge ids as the joining tree
        #[arg(long, value_delimiter = ',')]
        force_tree: Option<Vec<usize>>,
        #[arg(long, default_value_t = 12)]
        steiner_limit: usize,
        /// Ignore edge weights
        #[arg(long)]
        unit: bool,
    },
    /// Route one carrier from a depot through a task matrix
    Trp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tasks: PathBuf,
        #[arg(long)]
        start: usize,
        /// Also run the exhaustive search and report its optimum
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Check that a dart list is a circuit
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        walk: PathBuf,
    },
    /// Run the built-in worked instances
    Fixtures,
    /// Print a random instance
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Circulation)]
        kind: Kind,
        #[arg(long, default_value_t = 5)]
        vertices: usize,
        #[arg(long, default_value_t = 8)]
        edges: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Multigraph,
    Circulation,
    Disconnected,
    Tasks,
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn rat(x: &num_rational::BigRational) -> Value {
    json!(x.to_string())
}

fn run(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Detect {
            graph,
            chain,
            start,
            prefer,
        } => {
            let g = parse_graph(&read(&graph)?)?;
            let alpha = parse_chain(&read(&chain)?)?;
            let opts = DetectOptions {
                start,
                edge_priority: prefer,
            };
            let c = detect_dcc_with(&g, &alpha, &opts)?;
            Ok(json!({
                "circuit": darts_to_json(c.darts()),
                "length": c.len(),
                "mu_length": rat(&g.walk_length(c.walk())),
            }))
        }
        Command::Count {
            graph,
            chain,
            factors,
            remove,
        } => {
            let g = parse_graph(&read(&graph)?)?;
            let alpha = parse_chain(&read(&chain)?)?;
            let r = count_dcc_removing(&g, &alpha, remove)?;
            let mut out = json!({
                "total": r.total.to_string(),
                "cycles": r.cycles().to_string(),
                "universal": r.universal,
            });
            if factors {
                out["factors"] = json!({
                    "norm": r.norm.to_string(),
                    "determinant": r.determinant.to_string(),
                    "removed_vertex": r.removed_vertex,
                    "out_degree_factorials": r.out_degree_factor.to_string(),
                    "multiplicity_factorials": r.multiplicity_factor.to_string(),
                });
            }
            Ok(out)
        }
        Command::Enumerate {
            graph,
            chain,
            budget,
        } => {
            let g = parse_graph(&read(&graph)?)?;
            let alpha = parse_chain(&read(&chain)?)?;
            let all = enumerate_circuits(&g, &alpha, budget)?;
            let list: Vec<Value> = all.iter().map(|c| darts_to_json(c.darts())).collect();
            Ok(json!({"count": all.len(), "circuits": list}))
        }
        Command::Shortest {
            graph,
            chain,
            force_tree,
            steiner_limit,
            unit,
        } => {
            let mut g = parse_graph(&read(&graph)?)?;
            if unit {
                g = g.with_unit_weights();
            }
            let alpha = parse_chain(&read(&chain)?)?;
            let opts = HscdpOptions {
                force_tree,
                steiner_limit,
            };
            let s = solve_hscdp_with(&g, &alpha, &opts)?;
            let components: Vec<Value> = s
                .component_circuits
                .iter()
                .map(|c| darts_to_json(c.darts()))
                .collect();
            Ok(json!({
                "kind": if s.circuit.is_some() { "circuit" } else { "closed_walk" },
                "walk": darts_to_json(s.walk.darts()),
                "diagnostic": s.diagnostic,
                "length": s.walk.len(),
                "mu_length": rat(&s.mu_length),
                "norm": rat(&s.norm),
                "tree": s.tree,
                "tree_weight": rat(&s.tree_weight),
                "component_circuits": components,
                "certificate": s.certificate_holds(),
            }))
        }
        Command::Trp {
            graph,
            tasks,
            start,
            oracle,
            budget,
        } => {
            let g = parse_graph(&read(&graph)?)?;
            let q = parse_tasks(&read(&tasks)?)?;
            let s = solve_trp(&g, &q, start)?;
            let coverage: Vec<Value> = s
                .coverage
                .iter()
                .map(|c| json!({"from": c.from, "to": c.to, "required": c.required, "covered": c.covered}))
                .collect();
            let mut out = json!({
                "walk": darts_to_json(s.walk.darts()),
                "vertices": s.walk.vertices(&g),
                "mu_length": rat(&s.mu_length),
                "beta": chain_to_json(&s.beta),
                "beta_norm": rat(&s.beta_norm),
                "certified_optimal": s.certified_optimal,
                "steiner_gap": rat(&s.steiner_gap),
                "coverage": coverage,
                "tasks": tasks_to_json(&q),
            });
            if oracle {
                let best = brute_force_trp(&g, &q, start, &s.mu_length, budget)?;
                out["oracle"] = json!({
                    "walk": darts_to_json(best.darts()),
                    "mu_length": rat(&g.walk_length(&best)),
                });
            }
            Ok(out)
        }
        Command::Validate { graph, walk } => {
            let g = parse_graph(&read(&graph)?)?;
            let darts = parse_darts(&read(&walk)?)?;
            let c = Circuit::new(&g, darts)?;
            Ok(json!({
                "result": "PASS",
                "length": c.len(),
                "mu_length": rat(&g.walk_length(c.walk())),
                "abelianization": chain_to_json(&abelianize(c.walk())),
                "direction_consistent": c.walk().is_direction_consistent(),
            }))
        }
        Command::Fixtures => unreachable!("handled in main"),
        Command::Generate {
            seed,
            kind,
            vertices,
            edges,
        } => generate(seed, kind, vertices.max(1), edges),
    }
}

fn generate(seed: u64, kind: Kind, n: usize, m: usize) -> Result<Value, Failure> {
    let mut rng = random::rng(seed);
    let out = match kind {
        Kind::Multigraph => {
            json!({"graph": graph_to_json(&random::connected_multigraph(&mut rng, n, m))})
        }
        Kind::Circulation => {
            let (g, c) = loop {
                let g = random::connected_multigraph(&mut rng, n, m.max(n));
                if let Some(c) = random::connected_circulation(&mut rng, &g, 12) {
                    break (g, c);
                }
            };
            json!({"graph": graph_to_json(&g), "chain": chain_to_json(&c)})
        }
        Kind::Disconnected => {
            let (g, c) = random::disconnected_instance(&mut rng, n.max(2), &["1", "2"]);
            json!({"graph": graph_to_json(&g), "chain": chain_to_json(&c)})
        }
        Kind::Tasks => {
            let g = random::simple_connected(&mut rng, n.max(2), m.saturating_sub(n));
            let q = random::task_matrix(&mut rng, &g, 5);
            json!({"graph": graph_to_json(&g), "tasks": tasks_to_json(&q)})
        }
    };
    Ok(out)
}

fn fixtures_report() -> ExitCode {
    let checks = fixtures::check_all();
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(std::io::stdout(), "{status} {} {}", c.name, c.detail);
    }
    if checks.iter().all(|c| c.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

// a closed pipe is not worth a panic
fn emit(v: &Value) {
    let _ = writeln!(
        std::io::stdout(),
        "{}",
        serde_json::to_string_pretty(v).expect("json")
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Fixtures = cli.command {
        return fixtures_report();
    }
    match run(cli.command) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            let mut out = json!({"error": e.name(), "detail": e.to_string()});
            match e {
                Error::NotIncident(i) | Error::Backtrack(i) => out["position"] = json!(i),
                _ => {}
            }
            emit(&out);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("homcirc: {msg}");
            ExitCode::from(2)
        }
    }
}
