//! Degeneracy and vertex orderings witnessing it.
//!
//! A graph is d-degenerate when every subgraph has a vertex of degree at
//! most d; equivalently, its vertices can be laid out on a line so that each
//! one has at most d neighbors to its left. `compute_ordering` produces such
//! a layout by iterated minimum-degree removal, which witnesses the exact
//! degeneracy. `degeneracy_bruteforce` minimizes over all orderings directly
//! and serves as an independent oracle at small n.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest n accepted by [`degeneracy_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 9;

/// A vertex ordering together with its witnessed degeneracy parameter.
///
/// Position 0 is the leftmost slot. `left_degree[v]` counts the neighbors of
/// `v` at smaller positions, and `d` is the maximum left degree over all
/// vertices (0 for edgeless graphs, including n = 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    order: Vec<VertexId>,
    position: Vec<usize>,
    left_degree: Vec<usize>,
    d: usize,
}

impl DegeneracyOrdering {
    /// Wraps an explicit ordering, computing left degrees and the witnessed
    /// parameter. Fails if `order` is not a permutation of the vertices.
    pub fn from_order(g: &Graph, order: Vec<VertexId>) -> Result<Self> {
        let n = g.n();
        if order.len() != n {
            return Err(Error::Structure(format!(
                "ordering has {} entries for a graph on {n} vertices",
                order.len()
            )));
        }
        let mut position = vec![usize::MAX; n];
        for (pos, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::Structure(format!(
                    "ordering is not a permutation of 0..{n}"
                )));
            }
            position[v] = pos;
        }
        let left_degree: Vec<usize> = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&u| position[u] < position[v])
                    .count()
            })
            .collect();
        let d = left_degree.iter().copied().max().unwrap_or(0);
        Ok(DegeneracyOrdering {
            order,
            position,
            left_degree,
            d,
        })
    }

    /// Vertices from leftmost to rightmost position.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn left_degree(&self, v: VertexId) -> usize {
        self.left_degree[v]
    }

    /// The witnessed degeneracy parameter: the maximum left degree.
    pub fn d(&self) -> usize {
        self.d
    }
}

/// Computes an ordering witnessing the exact degeneracy by repeatedly
/// removing a minimum-degree vertex of the remaining subgraph and placing it
/// at the rightmost free position. Ties break toward the smallest vertex id.
pub fn compute_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); g.max_degree() + 1];
    for v in 0..n {
        buckets[degree[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = vec![0; n];
    let mut current_min = 0;
    for slot in (0..n).rev() {
        while buckets[current_min].is_empty() {
            current_min += 1;
        }
        let v = buckets[current_min].pop_first().unwrap();
        removed[v] = true;
        order[slot] = v;
        for &w in g.neighbors(v) {
            if !removed[w] {
                buckets[degree[w]].remove(&w);
                degree[w] -= 1;
                buckets[degree[w]].insert(w);
                current_min = current_min.min(degree[w]);
            }
        }
    }
    DegeneracyOrdering::from_order(g, order).expect("peeling emits a permutation")
}

/// True iff every vertex has at most `d_claim` neighbors at smaller
/// positions under `order`.
pub fn verify_ordering(g: &Graph, order: &[VertexId], d_claim: usize) -> Result<bool> {
    let ordering = DegeneracyOrdering::from_order(g, order.to_vec())?;
    Ok(ordering.d() <= d_claim)
}

/// Minimum over all n! orderings of the maximum left degree. Exhaustive
/// (with sound branch pruning); refuses graphs larger than
/// [`BRUTEFORCE_LIMIT`]. Test oracle for [`compute_ordering`].
pub fn degeneracy_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "ordering brute force",
            size: n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = n; // any ordering achieves at most n - 1

    fn search(masks: &[u32], full: u32, placed: u32, prefix_max: usize, best: &mut usize) {
        for v in 0..masks.len() {
            if placed >> v & 1 == 1 {
                continue;
            }
            let left = (masks[v] & placed).count_ones() as usize;
            let reached = prefix_max.max(left);
            if reached >= *best {
                continue;
            }
            let now = placed | 1 << v;
            if now == full {
                *best = reached;
            } else {
                search(masks, full, now, reached, best);
            }
        }
    }

    search(&masks, full, 0, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, random_tree, star};
    use crate::graph::VertexSet;

    fn petersen() -> Graph {
        // Outer 5-cycle, inner pentagram, spokes.
        Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn complete_graph_degeneracy() {
        assert_eq!(compute_ordering(&complete(4).unwrap()).d(), 3);
        assert_eq!(degeneracy_bruteforce(&complete(4).unwrap()).unwrap(), 3);
    }

    #[test]
    fn trees_are_one_degenerate() {
        assert_eq!(compute_ordering(&path(4).unwrap()).d(), 1);
        assert_eq!(compute_ordering(&star(7).unwrap()).d(), 1);
        for seed in 0..50 {
            let t = random_tree(9, seed).unwrap();
            assert_eq!(compute_ordering(&t).d(), 1);
        }
        assert_eq!(degeneracy_bruteforce(&path(4).unwrap()).unwrap(), 1);
    }

    #[test]
    fn cycles_are_two_degenerate() {
        let c6 = cycle(6).unwrap();
        assert_eq!(degeneracy_bruteforce(&c6).unwrap(), 2);
        assert_eq!(compute_ordering(&c6).d(), 2);
        assert_eq!(degeneracy_bruteforce(&cycle(5).unwrap()).unwrap(), 2);
    }

    #[test]
    fn petersen_graph_degeneracy_is_three() {
        let g = petersen();
        // 3-regular, so peeling cannot exceed 3; min degree 3 forces >= 3.
        assert_eq!(g.max_degree(), 3);
        assert_eq!(compute_ordering(&g).d(), 3);
    }

    #[test]
    fn edgeless_and_tiny_graphs() {
        assert_eq!(compute_ordering(&Graph::new(0)).d(), 0);
        assert_eq!(compute_ordering(&Graph::new(1)).d(), 0);
        assert_eq!(compute_ordering(&Graph::new(5)).d(), 0);
        assert_eq!(degeneracy_bruteforce(&Graph::new(5)).unwrap(), 0);
    }

    #[test]
    fn ordering_invariants_hold() {
        let g = petersen();
        let ord = compute_ordering(&g);
        let n = g.n();
        // order and position are mutually inverse permutations
        for pos in 0..n {
            assert_eq!(ord.position(ord.order()[pos]), pos);
        }
        // left degrees match their definition and are bounded by d
        for v in 0..n {
            let expected = g
                .neighbors(v)
                .iter()
                .filter(|&&u| ord.position(u) < ord.position(v))
                .count();
            assert_eq!(ord.left_degree(v), expected);
            assert!(ord.left_degree(v) <= ord.d());
        }
    }

    #[test]
    fn verify_ordering_examples() {
        let p3 = path(3).unwrap();
        assert!(verify_ordering(&p3, &[2, 1, 0], 1).unwrap());
        let k3 = complete(3).unwrap();
        assert!(!verify_ordering(&k3, &[0, 1, 2], 1).unwrap());
        assert!(!verify_ordering(&k3, &[2, 0, 1], 1).unwrap());
        assert!(verify_ordering(&Graph::new(4), &[3, 1, 0, 2], 0).unwrap());
    }

    #[test]
    fn verify_ordering_rejects_non_permutations() {
        let p3 = path(3).unwrap();
        assert!(matches!(
            verify_ordering(&p3, &[0, 1], 1),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            verify_ordering(&p3, &[0, 1, 1], 1),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            verify_ordering(&p3, &[0, 1, 5], 1),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn bruteforce_refuses_large_graphs() {
        assert!(matches!(
            degeneracy_bruteforce(&path(10).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn peeling_matches_bruteforce_on_random_graphs() {
        for seed in 0..40 {
            let g = crate::generate::gnp(7, 0.4, seed).unwrap();
            assert_eq!(
                compute_ordering(&g).d(),
                degeneracy_bruteforce(&g).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn subgraph_degeneracy_never_exceeds_whole() {
        for seed in 0..20 {
            let g = crate::generate::gnp(12, 0.3, seed).unwrap();
            let d = compute_ordering(&g).d();
            // vertex deletions
            let mut keep = VertexSet::full(12);
            keep.remove((seed as usize * 5) % 12);
            assert!(compute_ordering(&g.induced_subgraph(&keep)).d() <= d);
            // edge deletions
            let edges: Vec<_> = g.edges().collect();
            if !edges.is_empty() {
                let skip = seed as usize % edges.len();
                let fewer: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &e)| e)
                    .collect();
                let h = Graph::from_edges(12, fewer).unwrap();
                assert!(compute_ordering(&h).d() <= d);
            }
        }
    }

    #[test]
    fn bounded_left_degree_bounds_subgraph_min_degree() {
        // If an ordering witnesses parameter d, every induced subgraph must
        // contain a vertex of degree at most d. Checked by enumerating all
        // induced subgraphs at n = 8.
        for seed in 0..6 {
            let n = 8;
            let g = crate::generate::gnp(n, 0.45, seed).unwrap();
            let ord = compute_ordering(&g);
            let d = ord.d();
            assert!(verify_ordering(&g, ord.order(), d).unwrap());
            for mask in 1u32..(1 << n) {
                let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let keep = VertexSet::from_vertices(n, &members).unwrap();
                let sub = g.induced_subgraph(&keep);
                let min_deg = (0..sub.n()).map(|v| sub.degree(v)).min().unwrap();
                assert!(min_deg <= d);
            }
        }
    }
}
