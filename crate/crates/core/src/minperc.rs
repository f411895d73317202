//! Exhaustive search for smallest and inclusion-minimal percolating sets.
//!
//! Vertices of degree below r can never become infected, so they are forced
//! into every percolating set; the search then enumerates subsets of the
//! remaining free vertices. The free-vertex count is capped by an explicit
//! budget, and exceeding it is a refusal, never an approximation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::percolation::{is_minimal_percolating, percolates};
use crate::ratio::Rational;

/// Default cap on the number of free vertices (the search is 2^free).
pub const DEFAULT_BUDGET: usize = 22;

/// One enumerated inclusion-minimal percolating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalSetEntry {
    pub set: VertexSet,
    pub size: usize,
}

/// Search results for one graph and threshold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinPercReport {
    pub smallest_size: usize,
    pub witness: VertexSet,
    pub minimal_sets_sampled: Vec<MinimalSetEntry>,
    /// Number of vertices of degree below r (all forced).
    pub l: usize,
    /// Tree-only bound ((r-1)n+1)/r on minimal percolating set sizes.
    pub riedl_lower: Option<Rational>,
    /// Tree-only bound (rn+l)/(r+1) on minimal percolating set sizes.
    pub riedl_upper: Option<Rational>,
}

/// Vertices of degree below r; they belong to every percolating set.
pub fn forced_vertices(g: &Graph, r: usize) -> VertexSet {
    let mut forced = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if g.degree(v) < r {
            forced.insert(v);
        }
    }
    forced
}

fn split_forced_free(g: &Graph, r: usize, budget: usize) -> Result<(VertexSet, Vec<VertexId>)> {
    if r < 1 {
        return Err(Error::Param("threshold r must be at least 1".to_string()));
    }
    let forced = forced_vertices(g, r);
    let free: Vec<VertexId> = (0..g.n()).filter(|&v| !forced.contains(v)).collect();
    if free.len() > budget {
        return Err(Error::SearchBudget {
            free: free.len(),
            budget,
            forced: forced.to_vec(),
        });
    }
    Ok((forced, free))
}

/// Advances `combo` to the next c-combination of `0..pool` in lexicographic
/// order; false when exhausted.
fn next_combination(combo: &mut [usize], pool: usize) -> bool {
    let c = combo.len();
    let mut i = c;
    while i > 0 {
        i -= 1;
        if combo[i] < pool - (c - i) {
            combo[i] += 1;
            for j in i + 1..c {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Finds a minimum-cardinality percolating set by increasing-cardinality
/// enumeration over the free vertices; forced vertices are always included.
/// Among minimum-size sets the lexicographically smallest is returned.
pub fn smallest_percolating_set(g: &Graph, r: usize, budget: usize) -> Result<MinPercReport> {
    let (forced, free) = split_forced_free(g, r, budget)?;
    let witness = if percolates(g, &forced, r)? {
        forced.clone()
    } else {
        let mut found = None;
        'sizes: for c in 1..=free.len() {
            let mut combo: Vec<usize> = (0..c).collect();
            loop {
                let mut candidate = forced.clone();
                for &i in &combo {
                    candidate.insert(free[i]);
                }
                if percolates(g, &candidate, r)? {
                    found = Some(candidate);
                    break 'sizes;
                }
                if !next_combination(&mut combo, free.len()) {
                    break;
                }
            }
        }
        // The full vertex set always percolates, so the enumeration cannot
        // come up empty.
        found.expect("free vertices exhausted without percolation")
    };
    Ok(report_for(g, r, witness, forced.len()))
}

fn report_for(g: &Graph, r: usize, witness: VertexSet, l: usize) -> MinPercReport {
    let (riedl_lower, riedl_upper) = if g.is_tree() {
        let n = g.n() as i64;
        (
            Some(Rational::new((r as i64 - 1) * n + 1, r as i64)),
            Some(Rational::new(r as i64 * n + l as i64, r as i64 + 1)),
        )
    } else {
        (None, None)
    };
    MinPercReport {
        smallest_size: witness.len(),
        witness,
        minimal_sets_sampled: Vec::new(),
        l,
        riedl_lower,
        riedl_upper,
    }
}

/// All inclusion-minimal percolating sets, by exhaustive enumeration over
/// the free vertices, sorted by size and then lexicographically.
pub fn enumerate_minimal_percolating_sets(
    g: &Graph,
    r: usize,
    budget: usize,
) -> Result<Vec<VertexSet>> {
    let (forced, free) = split_forced_free(g, r, budget)?;
    let mut found: Vec<(Vec<VertexId>, VertexSet)> = Vec::new();
    for mask in 0u64..(1 << free.len()) {
        let mut candidate = forced.clone();
        for (i, &v) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                candidate.insert(v);
            }
        }
        if is_minimal_percolating(g, &candidate, r)? {
            found.push((candidate.to_vec(), candidate));
        }
    }
    found.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(found.into_iter().map(|(_, set)| set).collect())
}

/// Verifies the tree bounds on every inclusion-minimal percolating set:
/// (r-1)n + 1 <= r|S| and (r+1)|S| <= rn + l, where l counts the vertices
/// of degree below r.
#[allow(clippy::int_plus_one)] // keep the bounds in their stated form
pub fn check_riedl_tree_bounds(tree: &Graph, r: usize, budget: usize) -> Result<bool> {
    if !tree.is_tree() {
        return Err(Error::Structure(
            "riedl bounds apply to trees only (connected, m = n - 1)".to_string(),
        ));
    }
    let n = tree.n() as i64;
    let l = forced_vertices(tree, r).len() as i64;
    let minimal_sets = enumerate_minimal_percolating_sets(tree, r, budget)?;
    Ok(minimal_sets.iter().all(|s| {
        let size = s.len() as i64;
        (r as i64 - 1) * n + 1 <= r as i64 * size && (r as i64 + 1) * size <= r as i64 * n + l
    }))
}
