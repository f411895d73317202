//! The tightness construction: a d-degenerate graph whose final infected
//! set approaches the upper bound (1 + d/(r-d))|A0| as k grows.
//!
//! Layout on d + k*r vertices: a hub set H of size d, then for each of k
//! blocks a pair (U_i, I_i) with |U_i| = d and |I_i| = r - d. Every I_i
//! vertex is adjacent to all of U_i, and every H vertex to all of U_i for
//! every i. Seeding A0 = H plus all the I_i infects every U_i in one round:
//! each U_i vertex sees d infected hub neighbors plus r - d infected I_i
//! neighbors, exactly r in total.

use serde::Serialize;

use crate::degeneracy::compute_ordering;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::percolation::run;
use crate::ratio::Rational;

/// Parameters of the construction. Requires d >= 1, r >= 2, k >= 1, and
/// r > d so the I_i blocks are nonempty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    pub d: usize,
    pub r: usize,
    pub k: usize,
}

impl ExtremalParams {
    pub fn new(d: usize, r: usize, k: usize) -> Result<Self> {
        if d < 1 {
            return Err(Error::Param(format!("extremal construction needs d >= 1, got {d}")));
        }
        if r < 2 {
            return Err(Error::Param(format!("extremal construction needs r >= 2, got {r}")));
        }
        if r <= d {
            return Err(Error::Param(format!(
                "extremal construction needs r > d so the I blocks are nonempty (d={d}, r={r})"
            )));
        }
        if k < 1 {
            return Err(Error::Param(format!("extremal construction needs k >= 1, got {k}")));
        }
        Ok(ExtremalParams { d, r, k })
    }

    /// Total vertex count d + k*r.
    pub fn n(&self) -> usize {
        self.d + self.k * self.r
    }

    /// Initial set size d + k*(r-d).
    pub fn a0_size(&self) -> usize {
        self.d + self.k * (self.r - self.d)
    }

    /// Final set size d + k*r (everything gets infected).
    pub fn af_size(&self) -> usize {
        self.n()
    }
}

/// Builds the construction with its designated initial set. Vertices are
/// laid out hub first, then per block U_i followed by I_i.
pub fn build_extremal(p: &ExtremalParams) -> (Graph, VertexSet) {
    let (d, r, k) = (p.d, p.r, p.k);
    let n = p.n();
    let mut edges = Vec::with_capacity(k * d * r);
    let mut a0 = VertexSet::empty(n);
    for h in 0..d {
        a0.insert(h);
    }
    for i in 0..k {
        let u_start = d + i * r;
        let i_start = u_start + d;
        for u in u_start..u_start + d {
            for h in 0..d {
                edges.push((h, u));
            }
            for x in i_start..i_start + (r - d) {
                edges.push((u, x));
            }
        }
        for x in i_start..i_start + (r - d) {
            a0.insert(x);
        }
    }
    let g = Graph::from_edges(n, edges).expect("construction edges are valid");
    (g, a0)
}

/// The exact overshoot ratio (|A_f| - |A0|) / |A0| = kd / (d + k(r-d)),
/// which tends to d/(r-d) as k grows.
pub fn extremal_ratio(p: &ExtremalParams) -> Rational {
    Rational::new(
        (p.k * p.d) as i64,
        (p.d + p.k * (p.r - p.d)) as i64,
    )
}

/// Measured certificate that the construction behaves as designed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalCertificate {
    pub params: ExtremalParams,
    pub n: usize,
    pub m: usize,
    pub degeneracy: usize,
    pub a0_size: usize,
    pub af_size: usize,
    pub tau: usize,
    pub ratio: Rational,
}

impl ExtremalCertificate {
    /// Exact check of |A_f| >= (1 - eps) * (1 + d/(r-d)) * |A0| for
    /// eps = eps_num/eps_den, by integer cross-multiplication.
    pub fn sharpness_holds(&self, eps_num: i64, eps_den: i64) -> bool {
        assert!(eps_den > 0 && (0..=eps_den).contains(&eps_num));
        let (d, r) = (self.params.d as i64, self.params.r as i64);
        // af * eps_den * (r - d) >= (eps_den - eps_num) * r * a0
        (self.af_size as i64) as i128 * eps_den as i128 * (r - d) as i128
            >= (eps_den - eps_num) as i128 * r as i128 * self.a0_size as i128
    }
}

/// Builds the construction, runs the process, and certifies each designed
/// property; the first failing clause is reported by name.
pub fn certify_extremal(p: &ExtremalParams) -> Result<ExtremalCertificate> {
    let (g, a0) = build_extremal(p);
    let fail = |clause: &'static str, detail: String| Error::Certification { clause, detail };

    let witnessed = compute_ordering(&g).d();
    if witnessed != p.d {
        return Err(fail(
            "degeneracy",
            format!("expected exactly {}, ordering witnessed {witnessed}", p.d),
        ));
    }

    let trace = run(&g, &a0, p.r)?;
    let af = trace.a_f().len();
    if af != g.n() || af != p.af_size() {
        return Err(fail(
            "full-infection",
            format!("expected |A_f| = {} = n, got {af}", p.af_size()),
        ));
    }

    let measured = Rational::new((af - a0.len()) as i64, a0.len() as i64);
    let designed = extremal_ratio(p);
    if measured != designed {
        return Err(fail(
            "ratio",
            format!("measured {measured}, designed {designed}"),
        ));
    }

    if trace.tau() != 1 {
        return Err(fail("tau", format!("expected tau = 1, got {}", trace.tau())));
    }

    Ok(ExtremalCertificate {
        params: *p,
        n: g.n(),
        m: g.m(),
        degeneracy: witnessed,
        a0_size: a0.len(),
        af_size: af,
        tau: trace.tau(),
        ratio: measured,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::degeneracy_bruteforce;

    #[test]
    fn smallest_instance_is_the_three_path() {
        let p = ExtremalParams::new(1, 2, 1).unwrap();
        let (g, a0) = build_extremal(&p);
        assert_eq!(g.n(), 3);
        assert_eq!(g.to_edge_list(), "3 2\n0 1\n1 2");
        assert_eq!(a0.to_vec(), vec![0, 2]);
    }

    #[test]
    fn block_sizes_and_edge_count() {
        let (d, r, k) = (2, 3, 2);
        let p = ExtremalParams::new(d, r, k).unwrap();
        let (g, a0) = build_extremal(&p);
        assert_eq!(g.n(), 8);
        assert_eq!(a0.len(), 4);
        // per block: d*(r-d) edges into I plus d*d edges into H
        assert_eq!(g.m(), k * (d * (r - d) + d * d));
        assert_eq!(g.m(), 12);
        // H = {0,1}; U_1 = {2,3}, I_1 = {4}; U_2 = {5,6}, I_2 = {7}
        assert!(g.has_edge(0, 2) && g.has_edge(1, 3) && g.has_edge(4, 2) && g.has_edge(4, 3));
        assert!(g.has_edge(0, 5) && g.has_edge(7, 6));
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3) && !g.has_edge(4, 7));
        assert!(!g.has_edge(2, 7) && !g.has_edge(4, 5));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(ExtremalParams::new(1, 1, 1).is_err()); // r < 2
        assert!(ExtremalParams::new(2, 2, 1).is_err()); // r == d
        assert!(ExtremalParams::new(3, 2, 1).is_err()); // r < d
        assert!(ExtremalParams::new(0, 2, 1).is_err());
        assert!(ExtremalParams::new(1, 2, 0).is_err());
    }

    #[test]
    fn ratio_formula_examples() {
        let p = ExtremalParams::new(1, 2, 1000).unwrap();
        assert_eq!(extremal_ratio(&p), Rational::new(1000, 1001));
        let p = ExtremalParams::new(2, 3, 100).unwrap();
        assert_eq!(extremal_ratio(&p), Rational::new(100, 51));
    }

    #[test]
    fn ratio_tends_to_d_over_r_minus_d() {
        let limit = Rational::new(2, 1); // d/(r-d) for d=2, r=3
        let p = ExtremalParams::new(2, 3, 1000).unwrap();
        let gap = limit - extremal_ratio(&p);
        assert!(gap > Rational::new(0, 1));
        assert!(gap < Rational::new(1, 100));
    }

    #[test]
    fn certificate_for_small_params() {
        let p = ExtremalParams::new(1, 2, 5).unwrap();
        let cert = certify_extremal(&p).unwrap();
        assert_eq!(cert.af_size, 11);
        assert_eq!(cert.a0_size, 6);
        assert_eq!(cert.tau, 1);
        assert_eq!(cert.degeneracy, 1);
    }

    #[test]
    fn single_block_with_wide_gap() {
        let p = ExtremalParams::new(2, 5, 1).unwrap();
        let cert = certify_extremal(&p).unwrap();
        assert_eq!(cert.a0_size, 5);
        assert_eq!(cert.af_size, 7);
        assert_eq!(cert.tau, 1);
    }

    #[test]
    fn degeneracy_is_exactly_d_by_exhaustive_oracle() {
        // All instances small enough for the factorial oracle.
        for (d, r, k) in [(1, 2, 2), (2, 3, 2), (3, 4, 1), (2, 5, 1), (1, 3, 2)] {
            let p = ExtremalParams::new(d, r, k).unwrap();
            let (g, _) = build_extremal(&p);
            assert!(g.n() <= 9, "oracle limit");
            assert_eq!(degeneracy_bruteforce(&g).unwrap(), d, "(d,r,k)=({d},{r},{k})");
        }
    }

    #[test]
    fn larger_instance_degeneracy_via_min_degree() {
        // n = 11 is beyond the oracle; the I vertices have degree exactly d,
        // so min degree = d forces degeneracy >= d, and peeling gives <= d.
        let p = ExtremalParams::new(3, 4, 2).unwrap();
        let (g, _) = build_extremal(&p);
        assert_eq!(g.n(), 11);
        let min_deg = (0..g.n()).map(|v| g.degree(v)).min().unwrap();
        assert_eq!(min_deg, 3);
        let cert = certify_extremal(&p).unwrap();
        assert_eq!(cert.degeneracy, 3);
    }

    #[test]
    fn sharpness_at_moderate_k() {
        for (d, r) in [(1, 2), (2, 3), (2, 5), (3, 4)] {
            let p = ExtremalParams::new(d, r, 100).unwrap();
            let cert = certify_extremal(&p).unwrap();
            assert!(cert.sharpness_holds(1, 10), "eps=0.1 at k=100 for ({d},{r})");
        }
    }
}
