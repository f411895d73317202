//! Command-line front end: every subcommand prints a single JSON document
//! on stdout and reserves stderr for diagnostics. Exit codes: 0 success,
//! 1 failed certification or corpus check, 2 usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bootperc::bounds::check_theorem;
use bootperc::corpus::run_corpus_check;
use bootperc::degeneracy::compute_ordering;
use bootperc::extremal::{build_extremal, certify_extremal, ExtremalParams};
use bootperc::generate::{generate, sample_a0, GeneratorSpec, SampleMode};
use bootperc::minperc::{
    enumerate_minimal_percolating_sets, smallest_percolating_set, MinimalSetEntry,
};
use bootperc::percolation::run;
use bootperc::potential::{compute_potential_trace, verify_claim};
use bootperc::{Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "bootperc", version, about = "bootstrap percolation toolkit")]
struct Cli {
    /// Pretty-print JSON with this many spaces (0 = compact)
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    json_indent: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a degeneracy ordering of a graph
    Degeneracy {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
    /// Run the infection process and report the trace
    Simulate {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[command(flatten)]
        a0: A0Args,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Potential sequence and per-step drop check along one run
    Potential {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[command(flatten)]
        a0: A0Args,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit the tightness construction (optionally certify it)
    Extremal {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// Check every designed property and fail loudly otherwise
        #[arg(long)]
        certify: bool,
    },
    /// Exact theorem and runtime-bound verdicts for one run
    CheckBounds {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[command(flatten)]
        a0: A0Args,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for smallest / inclusion-minimal percolating sets
    Minperc {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        /// Also enumerate every inclusion-minimal percolating set
        #[arg(long)]
        enumerate: bool,
        /// Cap on free (non-forced) vertices for the exhaustive search
        #[arg(long, default_value_t = bootperc::minperc::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Generate a graph in edge-list format
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Edge probability (gnp only)
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the edge list here instead of embedding it in the JSON
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Randomized sweep of the size, potential, and runtime checks
    CorpusCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Complete,
    Path,
    Cycle,
    Star,
    Gnp,
    RandomTree,
}

/// Exactly one way of providing the initially infected set.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct A0Args {
    /// Comma-separated vertex ids (empty string for the empty set)
    #[arg(long, value_name = "LIST")]
    a0: Option<String>,
    /// File with one vertex id per line
    #[arg(long, value_name = "FILE")]
    a0_file: Option<PathBuf>,
    /// Sample each vertex independently with this probability
    #[arg(long, value_name = "P")]
    a0_bernoulli: Option<f64>,
    /// Sample a uniformly random set of exactly this size
    #[arg(long, value_name = "K")]
    a0_size: Option<usize>,
}

impl A0Args {
    fn resolve(&self, g: &Graph, seed: u64) -> Result<VertexSet, Error> {
        if let Some(list) = &self.a0 {
            return parse_vertex_list(g.n(), list);
        }
        if let Some(path) = &self.a0_file {
            let text = read_file(path)?;
            let mut ids = Vec::new();
            for (i, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let v = line.parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    msg: format!("not a vertex id: {line:?}"),
                })?;
                ids.push(v);
            }
            return VertexSet::from_vertices(g.n(), &ids);
        }
        if let Some(p) = self.a0_bernoulli {
            return sample_a0(g, SampleMode::Bernoulli(p), seed);
        }
        let k = self.a0_size.expect("clap enforces one a0 source");
        sample_a0(g, SampleMode::FixedSize(k), seed)
    }
}

fn parse_vertex_list(n: usize, list: &str) -> Result<VertexSet, Error> {
    let mut ids = Vec::new();
    for token in list.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let v = token
            .parse()
            .map_err(|_| Error::Param(format!("not a vertex id: {token:?}")))?;
        ids.push(v);
    }
    VertexSet::from_vertices(n, &ids)
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Param(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<Graph, Error> {
    Graph::from_edge_list(&read_file(path)?)
}

fn print_json<T: Serialize>(value: &T, indent: usize) {
    let out = if indent == 0 {
        serde_json::to_string(value)
    } else {
        let pad = vec![b' '; indent];
        let mut buf = Vec::new();
        let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
        value.serialize(&mut ser).map(|_| String::from_utf8(buf).unwrap())
    };
    println!("{}", out.expect("reports serialize to JSON"));
}

#[derive(Serialize)]
struct OrderingOut {
    d: usize,
    order: Vec<usize>,
}

#[derive(Serialize)]
struct TraceOut {
    r: usize,
    a0: VertexSet,
    rounds: Vec<VertexSet>,
    tau: usize,
    af_size: usize,
}

#[derive(Serialize)]
struct PotentialOut {
    psi: Vec<u64>,
    min_drop: Option<i64>,
    claim_holds: bool,
}

#[derive(Serialize)]
struct ExtremalOut {
    d: usize,
    r: usize,
    k: usize,
    n: usize,
    m: usize,
    a0: VertexSet,
    graph: String,
}

#[derive(Serialize)]
struct GenOut {
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<String>,
}

fn dispatch(cli: Cli) -> Result<u8, Error> {
    let indent = cli.json_indent;
    match cli.command {
        Command::Degeneracy { graph } => {
            let g = load_graph(&graph)?;
            let ordering = compute_ordering(&g);
            print_json(
                &OrderingOut {
                    d: ordering.d(),
                    order: ordering.order().to_vec(),
                },
                indent,
            );
            Ok(0)
        }
        Command::Simulate { graph, a0, r, seed } => {
            let g = load_graph(&graph)?;
            let a0 = a0.resolve(&g, seed)?;
            let trace = run(&g, &a0, r)?;
            print_json(
                &TraceOut {
                    r,
                    a0: trace.a0().clone(),
                    rounds: trace.rounds().to_vec(),
                    tau: trace.tau(),
                    af_size: trace.a_f().len(),
                },
                indent,
            );
            Ok(0)
        }
        Command::Potential { graph, a0, r, seed } => {
            let g = load_graph(&graph)?;
            let a0 = a0.resolve(&g, seed)?;
            let ordering = compute_ordering(&g);
            let trace = run(&g, &a0, r)?;
            let pt = compute_potential_trace(&g, &ordering, &trace)?;
            let claim_holds = verify_claim(&pt)?;
            print_json(
                &PotentialOut {
                    psi: pt.psi().to_vec(),
                    min_drop: pt.min_drop(),
                    claim_holds,
                },
                indent,
            );
            Ok(0)
        }
        Command::Extremal { d, r, k, certify } => {
            let params = ExtremalParams::new(d, r, k)?;
            if certify {
                let cert = certify_extremal(&params)?;
                print_json(&cert, indent);
            } else {
                let (g, a0) = build_extremal(&params);
                print_json(
                    &ExtremalOut {
                        d,
                        r,
                        k,
                        n: g.n(),
                        m: g.m(),
                        a0,
                        graph: g.to_edge_list(),
                    },
                    indent,
                );
            }
            Ok(0)
        }
        Command::CheckBounds { graph, a0, r, seed } => {
            let g = load_graph(&graph)?;
            let a0 = a0.resolve(&g, seed)?;
            let report = check_theorem(&g, &a0, r)?;
            print_json(&report, indent);
            Ok(0)
        }
        Command::Minperc {
            graph,
            r,
            enumerate,
            budget,
        } => {
            let g = load_graph(&graph)?;
            let mut report = smallest_percolating_set(&g, r, budget)?;
            if enumerate {
                report.minimal_sets_sampled = enumerate_minimal_percolating_sets(&g, r, budget)?
                    .into_iter()
                    .map(|set| MinimalSetEntry {
                        size: set.len(),
                        set,
                    })
                    .collect();
            }
            print_json(&report, indent);
            Ok(0)
        }
        Command::Gen {
            kind,
            n,
            p,
            seed,
            output,
        } => {
            let spec = match kind {
                GenKind::Complete => GeneratorSpec::Complete { n },
                GenKind::Path => GeneratorSpec::Path { n },
                GenKind::Cycle => GeneratorSpec::Cycle { n },
                GenKind::Star => GeneratorSpec::Star { n },
                GenKind::Gnp => {
                    let p = p.ok_or_else(|| Error::Param("gnp requires --p".to_string()))?;
                    GeneratorSpec::Gnp { n, p }
                }
                GenKind::RandomTree => GeneratorSpec::RandomTree { n },
            };
            let g = generate(spec, seed)?;
            let text = g.to_edge_list();
            let out = match output {
                Some(path) => {
                    std::fs::write(&path, format!("{text}\n")).map_err(|e| {
                        Error::Param(format!("cannot write {}: {e}", path.display()))
                    })?;
                    GenOut {
                        n: g.n(),
                        m: g.m(),
                        graph: None,
                        path: Some(path.display().to_string()),
                    }
                }
                None => GenOut {
                    n: g.n(),
                    m: g.m(),
                    graph: Some(text),
                    path: None,
                },
            };
            print_json(&out, indent);
            Ok(0)
        }
        Command::CorpusCheck { seed } => {
            let summary = run_corpus_check(seed);
            let ok = summary.all_pass();
            print_json(&summary, indent);
            if ok {
                Ok(0)
            } else {
                eprintln!("corpus check found violations");
                Ok(1)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Certification { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
