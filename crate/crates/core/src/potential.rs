//! The potential function behind the degenerate-graph infection bound.
//!
//! Fix an ordering with maximum left degree d. After the i-th infection
//! (taking infections in the trace's serialized order), the potential is the
//! sum, over all currently infected vertices, of how many of their left
//! neighbors are still uninfected. An uninfected vertex is counted once per
//! infected right-neighbor, so the potential can multi-count. Whenever
//! r > d, every single infection must drop the potential by at least r - d,
//! which caps the total number of infections at psi_0 / (r - d).

use crate::degeneracy::DegeneracyOrdering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::percolation::PercolationTrace;

/// The potential sequence along one run's serialized infection order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialTrace {
    psi: Vec<u64>,
    drops: Vec<i64>,
    d_used: usize,
    r: usize,
}

impl PotentialTrace {
    /// `psi()[i]` is the potential after the i-th infection; index 0 is the
    /// initial potential. Length is one more than the number of infections.
    pub fn psi(&self) -> &[u64] {
        &self.psi
    }

    /// `drops()[i]` = `psi[i] - psi[i+1]`, one entry per infection.
    pub fn drops(&self) -> &[i64] {
        &self.drops
    }

    pub fn min_drop(&self) -> Option<i64> {
        self.drops.iter().copied().min()
    }

    /// The degeneracy parameter witnessed by the ordering this trace used.
    pub fn d_used(&self) -> usize {
        self.d_used
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn initial(&self) -> u64 {
        self.psi[0]
    }

    pub fn last(&self) -> u64 {
        *self.psi.last().unwrap()
    }
}

fn check_alignment(g: &Graph, ord: &DegeneracyOrdering, trace: &PercolationTrace) -> Result<()> {
    if ord.order().len() != g.n() {
        return Err(Error::Structure(format!(
            "ordering covers {} vertices, graph has {}",
            ord.order().len(),
            g.n()
        )));
    }
    if trace.a0().universe() != g.n() {
        return Err(Error::Structure(format!(
            "trace universe {} does not match graph on {} vertices",
            trace.a0().universe(),
            g.n()
        )));
    }
    Ok(())
}

/// Potential of a fixed infected set: for each infected vertex, count its
/// uninfected left neighbors.
fn potential_of(g: &Graph, ord: &DegeneracyOrdering, infected: &[bool]) -> u64 {
    let mut psi = 0u64;
    for v in 0..g.n() {
        if infected[v] {
            psi += g
                .neighbors(v)
                .iter()
                .filter(|&&u| ord.position(u) < ord.position(v) && !infected[u])
                .count() as u64;
        }
    }
    psi
}

/// Computes the potential sequence incrementally in O(n + m): each infection
/// removes one count per infected right-neighbor and adds the new vertex's
/// own uninfected left neighbors.
pub fn compute_potential_trace(
    g: &Graph,
    ord: &DegeneracyOrdering,
    trace: &PercolationTrace,
) -> Result<PotentialTrace> {
    check_alignment(g, ord, trace)?;
    let mut infected = vec![false; g.n()];
    for v in trace.a0().iter() {
        infected[v] = true;
    }
    let mut psi = Vec::with_capacity(trace.infection_order().len() + 1);
    psi.push(potential_of(g, ord, &infected) as i64);
    for &(v, _) in trace.infection_order() {
        if infected[v] {
            return Err(Error::Structure(format!(
                "vertex {v} appears twice in the infection order"
            )));
        }
        let mut infected_right = 0i64;
        let mut uninfected_left = 0i64;
        for &w in g.neighbors(v) {
            if ord.position(w) > ord.position(v) {
                if infected[w] {
                    infected_right += 1;
                }
            } else if !infected[w] {
                uninfected_left += 1;
            }
        }
        infected[v] = true;
        let next = psi.last().unwrap() - infected_right + uninfected_left;
        if next < 0 {
            return Err(Error::Structure(
                "negative potential: trace is inconsistent with the graph".to_string(),
            ));
        }
        psi.push(next);
    }
    Ok(assemble(psi, ord.d(), trace.r()))
}

/// Reference path: recomputes the potential from scratch after every
/// infection. Must agree with [`compute_potential_trace`] exactly.
pub fn compute_potential_trace_by_recount(
    g: &Graph,
    ord: &DegeneracyOrdering,
    trace: &PercolationTrace,
) -> Result<PotentialTrace> {
    check_alignment(g, ord, trace)?;
    let mut infected = vec![false; g.n()];
    for v in trace.a0().iter() {
        infected[v] = true;
    }
    let mut psi = vec![potential_of(g, ord, &infected) as i64];
    for &(v, _) in trace.infection_order() {
        infected[v] = true;
        psi.push(potential_of(g, ord, &infected) as i64);
    }
    Ok(assemble(psi, ord.d(), trace.r()))
}

fn assemble(psi: Vec<i64>, d_used: usize, r: usize) -> PotentialTrace {
    let drops = psi.windows(2).map(|w| w[0] - w[1]).collect();
    PotentialTrace {
        psi: psi.into_iter().map(|x| x as u64).collect(),
        drops,
        d_used,
        r,
    }
}

/// True iff every infection dropped the potential by at least r - d. Only
/// meaningful when r exceeds the witnessed parameter; refuses otherwise.
pub fn verify_claim(pt: &PotentialTrace) -> Result<bool> {
    if pt.r <= pt.d_used {
        return Err(Error::NotApplicable(format!(
            "per-step drop guarantee requires r > d (r={}, d={})",
            pt.r, pt.d_used
        )));
    }
    let needed = (pt.r - pt.d_used) as i64;
    Ok(pt.drops.iter().all(|&drop| drop >= needed))
}
