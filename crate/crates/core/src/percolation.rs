//! Synchronous r-neighbor bootstrap percolation.
//!
//! Starting from an initially infected set, every round simultaneously
//! infects each vertex that has at least `r` infected neighbors; infections
//! are permanent and the process runs to its fixpoint. `run` records the
//! full trace in O(n + m) using per-vertex infected-neighbor counters.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Complete record of one bootstrap percolation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PercolationTrace {
    r: usize,
    a0: VertexSet,
    rounds: Vec<VertexSet>,
    infection_order: Vec<(VertexId, usize)>,
    a_f: VertexSet,
}

impl PercolationTrace {
    pub fn r(&self) -> usize {
        self.r
    }

    /// The initially infected set.
    pub fn a0(&self) -> &VertexSet {
        &self.a0
    }

    /// Newly infected vertices per round; `rounds()[t]` fired at step t+1.
    /// Every recorded round is nonempty.
    pub fn rounds(&self) -> &[VertexSet] {
        &self.rounds
    }

    /// All infections after round zero, serialized by round and, within a
    /// round, by ascending vertex id. Entries are `(vertex, round)` with
    /// rounds counted from 1.
    pub fn infection_order(&self) -> &[(VertexId, usize)] {
        &self.infection_order
    }

    /// The final infected set.
    pub fn a_f(&self) -> &VertexSet {
        &self.a_f
    }

    /// Running time: the number of rounds in which something fired.
    pub fn tau(&self) -> usize {
        self.rounds.len()
    }

    /// Audits every trace invariant against the graph it came from.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let fail = |msg: String| Err(Error::Structure(msg));
        if self.a0.universe() != n || self.a_f.universe() != n {
            return fail("trace universe does not match graph".into());
        }
        // rounds are nonempty, pairwise disjoint, disjoint from a0,
        // and every member saw >= r infected neighbors beforehand
        let mut infected = self.a0.clone();
        for (i, round) in self.rounds.iter().enumerate() {
            if round.is_empty() {
                return fail(format!("round {} is empty", i + 1));
            }
            for v in round.iter() {
                if infected.contains(v) {
                    return fail(format!("vertex {v} infected twice"));
                }
                let support = g.neighbors(v).iter().filter(|&&w| infected.contains(w)).count();
                if support < self.r {
                    return fail(format!(
                        "vertex {v} fired in round {} with only {support} infected neighbors",
                        i + 1
                    ));
                }
            }
            infected = infected.union(round);
        }
        if infected != self.a_f {
            return fail("a_f is not the union of a0 and the rounds".into());
        }
        // fixpoint: nothing outside a_f is ready to fire
        for v in 0..n {
            if !self.a_f.contains(v) {
                let support = g.neighbors(v).iter().filter(|&&w| self.a_f.contains(w)).count();
                if support >= self.r {
                    return fail(format!("vertex {v} should have been infected"));
                }
            }
        }
        // serialized order matches the rounds
        let mut expected = Vec::new();
        for (i, round) in self.rounds.iter().enumerate() {
            expected.extend(round.iter().map(|v| (v, i + 1)));
        }
        if expected != self.infection_order {
            return fail("infection order does not serialize the rounds".into());
        }
        Ok(())
    }
}

/// Runs the process to its fixpoint. Requires `r >= 1` and an initial set
/// over the graph's vertices.
pub fn run(g: &Graph, a0: &VertexSet, r: usize) -> Result<PercolationTrace> {
    if r < 1 {
        return Err(Error::Param("threshold r must be at least 1".to_string()));
    }
    let n = g.n();
    if a0.universe() != n {
        return Err(Error::Structure(format!(
            "initial set universe {} does not match graph on {n} vertices",
            a0.universe()
        )));
    }
    let mut infected = vec![false; n];
    let mut count = vec![0usize; n];
    for v in a0.iter() {
        infected[v] = true;
    }
    for v in a0.iter() {
        for &w in g.neighbors(v) {
            count[w] += 1;
        }
    }
    let mut frontier: Vec<VertexId> = (0..n)
        .filter(|&v| !infected[v] && count[v] >= r)
        .collect();
    for &v in &frontier {
        infected[v] = true;
    }

    let mut a_f = a0.clone();
    let mut rounds = Vec::new();
    let mut infection_order = Vec::new();
    let mut round_no = 0;
    while !frontier.is_empty() {
        round_no += 1;
        let mut fired = VertexSet::empty(n);
        for &v in &frontier {
            fired.insert(v);
            a_f.insert(v);
            infection_order.push((v, round_no));
        }
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                count[w] += 1;
                if !infected[w] && count[w] >= r {
                    infected[w] = true;
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        rounds.push(fired);
        frontier = next;
    }

    let trace = PercolationTrace {
        r,
        a0: a0.clone(),
        rounds,
        infection_order,
        a_f,
    };
    debug_assert!(trace.validate(g).is_ok(), "{:?}", trace.validate(g));
    Ok(trace)
}

/// True iff the process infects every vertex.
pub fn percolates(g: &Graph, a0: &VertexSet, r: usize) -> Result<bool> {
    Ok(run(g, a0, r)?.a_f().len() == g.n())
}

/// True iff `a0` percolates but no proper subset does. Single-element
/// removals suffice because the process is monotone in the initial set.
pub fn is_minimal_percolating(g: &Graph, a0: &VertexSet, r: usize) -> Result<bool> {
    if !percolates(g, a0, r)? {
        return Ok(false);
    }
    let mut trimmed = a0.clone();
    for v in a0.iter() {
        trimmed.remove(v);
        if percolates(g, &trimmed, r)? {
            return Ok(false);
        }
        trimmed.insert(v);
    }
    Ok(true)
}
