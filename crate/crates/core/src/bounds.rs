//! Exact-arithmetic checkers for the infection-size theorem and its
//! corollaries. All verdicts are decided by integer cross-multiplication;
//! no floating point is involved anywhere.

use serde::Serialize;

use crate::degeneracy::compute_ordering;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::percolation::run;
use crate::ratio::Rational;

/// Outcome of a bound check. `NotApplicable` (r <= d) is deliberately
/// distinct from both passing and failing: the bound's hypothesis requires
/// r > d and genuinely cannot be dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    fn of(condition: bool) -> Self {
        if condition {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Exact verdicts for one run: |A0| <= |A_f| <= (1 + d/(r-d))|A0| and
/// tau <= d|A0|/(r-d). The upper bound equals r|A0|/(r-d), carried as
/// `bound_numerator`/`bound_denominator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub d: usize,
    pub r: usize,
    pub a0_size: usize,
    pub af_size: usize,
    pub tau: usize,
    pub theorem_holds: Verdict,
    pub runtime_corollary_holds: Verdict,
    pub bound_numerator: i64,
    pub bound_denominator: i64,
}

/// Checks the theorem with `d` set to the graph's exact degeneracy.
pub fn check_theorem(g: &Graph, a0: &VertexSet, r: usize) -> Result<BoundReport> {
    check_theorem_with_witness(g, a0, r, compute_ordering(g).d())
}

/// Checks the theorem against a caller-supplied degeneracy witness; a
/// deliberately weaker (larger) witness than the true degeneracy still has
/// to satisfy the bound as long as r > d.
pub fn check_theorem_with_witness(
    g: &Graph,
    a0: &VertexSet,
    r: usize,
    d: usize,
) -> Result<BoundReport> {
    let trace = run(g, a0, r)?;
    let (a0_size, af_size, tau) = (a0.len(), trace.a_f().len(), trace.tau());
    let (theorem, runtime) = if r <= d {
        (Verdict::NotApplicable, Verdict::NotApplicable)
    } else {
        let gap = (r - d) as i64;
        (
            Verdict::of(
                a0_size <= af_size && gap * af_size as i64 <= r as i64 * a0_size as i64,
            ),
            Verdict::of(gap * tau as i64 <= d as i64 * a0_size as i64),
        )
    };
    Ok(BoundReport {
        d,
        r,
        a0_size,
        af_size,
        tau,
        theorem_holds: theorem,
        runtime_corollary_holds: runtime,
        bound_numerator: (r * a0_size) as i64,
        bound_denominator: r as i64 - d as i64,
    })
}

/// Corollary on running time: tau <= d|A0|/(r-d), exact. Refuses r <= d.
pub fn check_runtime(g: &Graph, a0: &VertexSet, r: usize) -> Result<bool> {
    let d = compute_ordering(g).d();
    if r <= d {
        return Err(Error::NotApplicable(format!(
            "runtime bound requires r > degeneracy (r={r}, d={d})"
        )));
    }
    let trace = run(g, a0, r)?;
    Ok((r - d) as i64 * trace.tau() as i64 <= (d * a0.len()) as i64)
}

/// Lower bound n(r-d)/r on the size of any percolating set of a
/// d-degenerate graph. Non-positive (vacuous) when r <= d.
pub fn min_perc_lower_bound(n: usize, d: usize, r: usize) -> Rational {
    assert!(r >= 1, "threshold r must be at least 1");
    Rational::new(n as i64 * (r as i64 - d as i64), r as i64)
}

/// Forest specialization: |A0| <= |A_f| <= r/(r-1) |A0|, exact. Requires
/// r >= 2 (forests are 1-degenerate, so this is the theorem at d = 1).
pub fn forest_bound_check(a0_size: usize, af_size: usize, r: usize) -> Result<bool> {
    if r < 2 {
        return Err(Error::Param(format!(
            "forest bound requires r >= 2, got {r}"
        )));
    }
    Ok(a0_size <= af_size && ((r - 1) * af_size) as i64 <= (r * a0_size) as i64)
}
