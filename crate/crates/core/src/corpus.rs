//! Seeded test corpora and the randomized bound-checking sweep.
//!
//! `standard_corpus` mixes sparse random graphs, uniform random trees,
//! cycles, and stars; `run_corpus_check` sweeps every graph over thresholds
//! d+1..=d+4 and both initial-set sampling modes, checking the size bound,
//! the per-step potential drop, and the runtime bound on every run. All of
//! it is deterministic in the master seed.

use serde::Serialize;

use crate::bounds::{check_theorem, Verdict};
use crate::degeneracy::compute_ordering;
use crate::generate::{cycle, gnp, random_tree, sample_a0, star, SampleMode};
use crate::graph::Graph;
use crate::percolation::run;
use crate::potential::{
    compute_potential_trace, compute_potential_trace_by_recount, verify_claim,
};

/// A corpus member with a human-readable provenance label.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub label: String,
    pub graph: Graph,
}

fn mix(seed: u64, salt: u64) -> u64 {
    // splitmix64 step
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// At least 500 graphs: G(n,p) for n in {20,...,200} and sparse p, random
/// trees up to n = 200, cycles, and stars.
pub fn standard_corpus(seed: u64) -> Vec<CorpusGraph> {
    let mut graphs = Vec::new();
    let mut salt = 0u64;
    for n in (20..=200).step_by(20) {
        for &p in &[0.02, 0.05, 0.1] {
            for rep in 0..12 {
                salt += 1;
                graphs.push(CorpusGraph {
                    label: format!("gnp n={n} p={p} rep={rep}"),
                    graph: gnp(n, p, mix(seed, salt)).unwrap(),
                });
            }
        }
    }
    for n in [2, 5, 10, 20, 50, 100, 150, 200] {
        for rep in 0..12 {
            salt += 1;
            graphs.push(CorpusGraph {
                label: format!("tree n={n} rep={rep}"),
                graph: random_tree(n, mix(seed, salt)).unwrap(),
            });
        }
    }
    for n in 3..=30 {
        graphs.push(CorpusGraph {
            label: format!("cycle n={n}"),
            graph: cycle(n).unwrap(),
        });
    }
    for n in 2..=30 {
        graphs.push(CorpusGraph {
            label: format!("star n={n}"),
            graph: star(n).unwrap(),
        });
    }
    graphs
}

/// Exactly 200 graphs, all with n <= 8, for exhaustive-oracle comparisons.
pub fn small_corpus(seed: u64) -> Vec<CorpusGraph> {
    let mut graphs = Vec::new();
    let mut salt = 1_000_000u64;
    // 150 sparse-to-dense random graphs
    for rep in 0..150 {
        salt += 1;
        let n = 4 + (rep % 5); // 4..=8
        let p = [0.2, 0.35, 0.5, 0.7][rep % 4];
        let g = gnp(n, p, mix(seed, salt)).unwrap();
        graphs.push(CorpusGraph {
            label: format!("small gnp n={n} p={p} rep={rep}"),
            graph: g,
        });
    }
    // 30 random trees
    for rep in 0..30 {
        salt += 1;
        let n = 2 + (rep % 7); // 2..=8
        graphs.push(CorpusGraph {
            label: format!("small tree n={n} rep={rep}"),
            graph: random_tree(n, mix(seed, salt)).unwrap(),
        });
    }
    // 20 named graphs
    for n in 1..=8 {
        graphs.push(CorpusGraph {
            label: format!("complete n={n}"),
            graph: crate::generate::complete(n).unwrap(),
        });
    }
    for n in 3..=8 {
        graphs.push(CorpusGraph {
            label: format!("cycle n={n}"),
            graph: cycle(n).unwrap(),
        });
    }
    for n in [3, 5, 7, 8] {
        graphs.push(CorpusGraph {
            label: format!("star n={n}"),
            graph: star(n).unwrap(),
        });
    }
    for n in [6, 8] {
        graphs.push(CorpusGraph {
            label: format!("edgeless n={n}"),
            graph: Graph::new(n),
        });
    }
    assert_eq!(graphs.len(), 200);
    graphs
}

/// Tally of one randomized sweep. Every violation counter must stay 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub seed: u64,
    pub graphs: usize,
    pub runs: usize,
    pub applicable_runs: usize,
    pub theorem_violations: usize,
    pub initial_potential_violations: usize,
    pub claim_violations: usize,
    pub runtime_violations: usize,
    pub recount_checks: usize,
    pub recount_mismatches: usize,
}

impl CorpusSummary {
    pub fn all_pass(&self) -> bool {
        self.theorem_violations == 0
            && self.initial_potential_violations == 0
            && self.claim_violations == 0
            && self.runtime_violations == 0
            && self.recount_mismatches == 0
    }
}

/// Sweeps the standard corpus: for each graph with degeneracy d, thresholds
/// r = d+1..d+4, and four sampled initial sets per threshold.
pub fn run_corpus_check(seed: u64) -> CorpusSummary {
    let corpus = standard_corpus(seed);
    let mut summary = CorpusSummary {
        seed,
        graphs: corpus.len(),
        runs: 0,
        applicable_runs: 0,
        theorem_violations: 0,
        initial_potential_violations: 0,
        claim_violations: 0,
        runtime_violations: 0,
        recount_checks: 0,
        recount_mismatches: 0,
    };
    for (index, entry) in corpus.iter().enumerate() {
        let g = &entry.graph;
        let n = g.n();
        let ord = compute_ordering(g);
        let d = ord.d();
        for r in d + 1..=d + 4 {
            let modes = [
                SampleMode::Bernoulli(0.1),
                SampleMode::Bernoulli(0.3),
                SampleMode::FixedSize((n / 10).max(1)),
                SampleMode::FixedSize((n / 3).max(1)),
            ];
            for (mode_index, &mode) in modes.iter().enumerate() {
                let a0_seed = mix(seed, (index as u64) << 20 | (r as u64) << 8 | mode_index as u64);
                let a0 = sample_a0(g, mode, a0_seed).unwrap();
                // r >= d + 1 throughout, so every run is applicable
                summary.runs += 1;
                summary.applicable_runs += 1;

                let report = check_theorem(g, &a0, r).unwrap();
                debug_assert_eq!(report.d, d);
                if report.theorem_holds != Verdict::Holds {
                    summary.theorem_violations += 1;
                }
                if report.runtime_corollary_holds != Verdict::Holds {
                    summary.runtime_violations += 1;
                }

                let trace = run(g, &a0, r).unwrap();
                let pt = compute_potential_trace(g, &ord, &trace).unwrap();
                if pt.initial() > (d * a0.len()) as u64 {
                    summary.initial_potential_violations += 1;
                }
                if !verify_claim(&pt).unwrap() {
                    summary.claim_violations += 1;
                }
                if summary.runs.is_multiple_of(16) {
                    summary.recount_checks += 1;
                    let slow = compute_potential_trace_by_recount(g, &ord, &trace).unwrap();
                    if slow != pt {
                        summary.recount_mismatches += 1;
                    }
                }
            }
        }
    }
    summary
}
