//! Deterministic graph generators and initial-set sampling.
//!
//! Everything here is seeded: the same `(kind, params, seed)` triple always
//! yields the same graph, and the same `(mode, seed)` the same initial set.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Generator selector for [`generate`] and the CLI `gen` subcommand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorSpec {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Gnp { n: usize, p: f64 },
    RandomTree { n: usize },
}

pub fn generate(spec: GeneratorSpec, seed: u64) -> Result<Graph> {
    match spec {
        GeneratorSpec::Complete { n } => complete(n),
        GeneratorSpec::Path { n } => path(n),
        GeneratorSpec::Cycle { n } => cycle(n),
        GeneratorSpec::Star { n } => star(n),
        GeneratorSpec::Gnp { n, p } => gnp(n, p, seed),
        GeneratorSpec::RandomTree { n } => random_tree(n, seed),
    }
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Param("generator requires n >= 1".to_string()));
    }
    Ok(())
}

pub fn complete(n: usize) -> Result<Graph> {
    require_positive(n)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Result<Graph> {
    require_positive(n)?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Param(format!("cycle requires n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Star with center 0 and leaves `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    require_positive(n)?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// G(n, p): each unordered pair appears independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require_positive(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Param(format!("gnp requires p in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree, drawn by decoding a uniform Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require_positive(n)?;
    if n == 1 {
        return Ok(Graph::new(1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &sequence)
}

/// Decodes a Prüfer sequence of length `n - 2` into its labeled tree.
pub fn prufer_decode(n: usize, sequence: &[usize]) -> Result<Graph> {
    if n < 2 || sequence.len() != n - 2 {
        return Err(Error::Param(format!(
            "prufer sequence for n={n} must have length n-2, got {}",
            sequence.len()
        )));
    }
    if let Some(&bad) = sequence.iter().find(|&&s| s >= n) {
        return Err(Error::Param(format!("prufer entry {bad} out of range")));
    }
    let mut degree = vec![1usize; n];
    for &s in sequence {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in sequence {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    Graph::from_edges(n, edges)
}

/// How to draw the initially infected set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleMode {
    /// Each vertex independently with probability `p`.
    Bernoulli(f64),
    /// Uniformly among all subsets of exactly this size.
    FixedSize(usize),
}

pub fn sample_a0(g: &Graph, mode: SampleMode, seed: u64) -> Result<VertexSet> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        SampleMode::Bernoulli(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Param(format!(
                    "bernoulli requires p in [0, 1], got {p}"
                )));
            }
            let mut set = VertexSet::empty(n);
            for v in 0..n {
                if rng.gen_bool(p) {
                    set.insert(v);
                }
            }
            Ok(set)
        }
        SampleMode::FixedSize(k) => {
            if k > n {
                return Err(Error::Param(format!("fixed size {k} exceeds n={n}")));
            }
            let mut set = VertexSet::empty(n);
            for v in index::sample(&mut rng, n, k) {
                set.insert(v);
            }
            Ok(set)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_graph_invariants;
    use std::collections::HashMap;

    #[test]
    fn complete_star_path_cycle_counts() {
        assert_eq!(complete(4).unwrap().m(), 6);
        let s = star(4).unwrap();
        assert_eq!(s.m(), 3);
        assert_eq!(s.degree(0), 3);
        assert!((1..4).all(|v| s.degree(v) == 1));
        assert_eq!(path(3).unwrap().to_edge_list(), "3 2\n0 1\n1 2");
        assert_eq!(cycle(6).unwrap().m(), 6);
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(gnp(10, 0.0, 7).unwrap().m(), 0);
        assert_eq!(gnp(10, 1.0, 7).unwrap().m(), 45);
        assert!(gnp(10, 1.5, 7).is_err());
        let a = gnp(30, 0.2, 42).unwrap();
        let b = gnp(30, 0.2, 42).unwrap();
        let c = gnp(30, 0.2, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        check_graph_invariants(&a).unwrap();
    }

    #[test]
    fn random_tree_is_a_tree_for_many_seeds() {
        for seed in 0..200 {
            let t = random_tree(7, seed).unwrap();
            assert_eq!(t.m(), 6);
            assert!(t.is_tree());
            check_graph_invariants(&t).unwrap();
        }
        assert!(random_tree(1, 3).unwrap().is_tree());
        assert_eq!(random_tree(2, 3).unwrap().m(), 1);
    }

    #[test]
    fn prufer_decode_known_sequence() {
        // Sequence [3, 3, 3] is the star centered at 3.
        let g = prufer_decode(5, &[3, 3, 3]).unwrap();
        assert_eq!(g.degree(3), 4);
        assert!(prufer_decode(5, &[3, 3]).is_err());
        assert!(prufer_decode(5, &[3, 3, 9]).is_err());
    }

    #[test]
    fn bernoulli_extremes() {
        let g = path(10).unwrap();
        assert!(sample_a0(&g, SampleMode::Bernoulli(0.0), 5).unwrap().is_empty());
        assert_eq!(sample_a0(&g, SampleMode::Bernoulli(1.0), 5).unwrap().len(), 10);
        assert!(sample_a0(&g, SampleMode::Bernoulli(-0.1), 5).is_err());
    }

    #[test]
    fn fixed_size_cardinality_and_bounds() {
        let g = path(10).unwrap();
        assert_eq!(sample_a0(&g, SampleMode::FixedSize(4), 9).unwrap().len(), 4);
        assert!(sample_a0(&g, SampleMode::FixedSize(11), 9).is_err());
        let a = sample_a0(&g, SampleMode::FixedSize(4), 9).unwrap();
        let b = sample_a0(&g, SampleMode::FixedSize(4), 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fixed_size_sampling_is_close_to_uniform() {
        // 10,000 draws of 2-subsets of [0,5): each of the 10 subsets should
        // land near frequency 0.1. Wide tolerance; this is a sanity check.
        let g = path(5).unwrap();
        let mut freq: HashMap<Vec<usize>, usize> = HashMap::new();
        for seed in 0..10_000 {
            let s = sample_a0(&g, SampleMode::FixedSize(2), seed).unwrap();
            *freq.entry(s.to_vec()).or_default() += 1;
        }
        assert_eq!(freq.len(), 10);
        for (subset, count) in freq {
            let f = count as f64 / 10_000.0;
            assert!((f - 0.1).abs() <= 0.02, "subset {subset:?} frequency {f}");
        }
    }
}
