//! Degree and trace identities of the unified matrix.

use crate::eigen::eigen_spectrum;
use crate::error::{Error, Result};
use crate::hypergraph::{two_partition_count, Hypergraph, Part};
use crate::matrix::UnifiedMatrix;
use crate::report::Check;

/// Relative tolerance for spectral sides of identities.
pub const SPECTRAL_TOL: f64 = 1e-8;

/// Row sums at singleton rows equal vertex degrees, and the degree sum
/// equals `Σ m(e)|e|`.
pub fn check_row_sum_lemma(h: &Hypergraph) -> Vec<Check> {
    let u = UnifiedMatrix::build(h);
    let degrees = h.degrees();
    let mut bad = Vec::new();
    for (v, &degree) in degrees.iter().enumerate() {
        let row = u
            .index()
            .require(&Part::singleton(v))
            .expect("singletons are indexed");
        let sum: i64 = u.matrix().row(row).iter().sum();
        if sum as u64 != degree {
            bad.push(v);
        }
    }
    let detail = if bad.is_empty() {
        format!("{} singleton rows", h.n())
    } else {
        format!("mismatch at vertices {bad:?}")
    };
    let incidence: u64 = h
        .edges()
        .iter()
        .map(|e| u64::from(e.multiplicity) * e.len() as u64)
        .sum();
    vec![
        Check::boolean("row-sum.singleton", bad.is_empty(), detail),
        Check::equal(
            "row-sum.degree-total",
            degrees.iter().sum::<u64>(),
            incidence,
        ),
    ]
}

/// `2 Σ m(e)²|τ(e)| + Σ_loops m²`, the closed form of `trace(U²)`.
pub fn trace_square_closed_form(h: &Hypergraph) -> u64 {
    h.edges()
        .iter()
        .map(|e| {
            let m2 = u64::from(e.multiplicity).pow(2);
            if e.is_loop() {
                m2
            } else {
                2 * m2 * two_partition_count(e.len())
            }
        })
        .sum()
}

/// `trace(U²)` exactly, `Σλ²` numerically, and the unified-degree form when
/// `H` has no multiple edges.
pub fn check_trace_square_identity(h: &Hypergraph) -> Result<Vec<Check>> {
    let u = UnifiedMatrix::build(h);
    let m = u.matrix();
    let trace_sq: u64 = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .map(|(i, j)| (m.get(i, j) * m.get(j, i)) as u64)
        .sum();
    let closed = trace_square_closed_form(h);
    let spectrum = eigen_spectrum(m)?;
    let tol = SPECTRAL_TOL * (closed as f64).max(1.0);
    let mut checks = vec![
        Check::equal("trace-square.exact", trace_sq, closed),
        Check::approx(
            "trace-square.spectral",
            spectrum.power_sum(2),
            closed as f64,
            tol,
        ),
    ];
    if h.has_multiple_edges() {
        checks.push(Check::inapplicable(
            "trace-square.degree-form",
            "multiple edges",
        ));
    } else {
        let degree_form = h.unified_degree_sum() - h.included_edge_count();
        checks.push(Check::equal(
            "trace-square.degree-form",
            trace_sq,
            degree_form,
        ));
    }
    Ok(checks)
}

/// Sums over the 2-subsets `{S, S'}` of `I(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSum {
    /// `Σ sqrt|det U[{S,S'}]|`.
    pub root_sum: u64,
    /// `Σ m(e)|τ(e)|`.
    pub tau_sum: u64,
    /// `Σ det U[{S,S'}]`, reported for simple `H`.
    pub signed_sum: Option<i64>,
    /// `-Σ |τ(e)|`, reported for simple `H`.
    pub signed_target: Option<i64>,
}

/// The 2-set principal minor sums of a loopless hypergraph.
pub fn two_set_minor_sum(h: &Hypergraph) -> Result<MinorSum> {
    if h.has_loops() {
        return Err(Error::HasLoops("the 2-set minor sum"));
    }
    let u = UnifiedMatrix::build(h);
    let m = u.matrix();
    let (mut root_sum, mut signed) = (0u64, 0i64);
    for i in 0..m.rows() {
        for j in i + 1..m.rows() {
            let minor = m.get(i, i) * m.get(j, j) - m.get(i, j) * m.get(j, i);
            root_sum += minor.unsigned_abs().isqrt();
            signed += minor;
        }
    }
    let tau_sum = h
        .edges()
        .iter()
        .map(|e| u64::from(e.multiplicity) * two_partition_count(e.len()))
        .sum();
    let simple = h.is_simple();
    let plain_tau: i64 = h
        .edges()
        .iter()
        .map(|e| two_partition_count(e.len()) as i64)
        .sum();
    Ok(MinorSum {
        root_sum,
        tau_sum,
        signed_sum: simple.then_some(signed),
        signed_target: simple.then_some(-plain_tau),
    })
}

pub fn check_two_set_minor_sum(h: &Hypergraph) -> Vec<Check> {
    match two_set_minor_sum(h) {
        Err(_) => vec![Check::inapplicable("minor-sum", "loops present")],
        Ok(s) => {
            let mut checks = vec![Check::equal("minor-sum.root", s.root_sum, s.tau_sum)];
            if let (Some(a), Some(b)) = (s.signed_sum, s.signed_target) {
                checks.push(Check::equal("minor-sum.signed", a, b));
            }
            checks
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn all_pass(checks: &[Check]) -> bool {
        checks.iter().all(|c| c.status == Status::Holds)
    }

    #[test]
    fn single_three_edge() {
        let g = h(3, &[&[0, 1, 2]]);
        assert_eq!(trace_square_closed_form(&g), 6);
        assert!(all_pass(&check_trace_square_identity(&g).unwrap()));
        let s = two_set_minor_sum(&g).unwrap();
        assert_eq!((s.root_sum, s.tau_sum), (3, 3));
        assert_eq!(s.signed_sum, Some(-3));
    }

    #[test]
    fn loop_and_double_edge() {
        assert_eq!(trace_square_closed_form(&h(1, &[&[0]])), 1);
        let double = h(2, &[&[0, 1], &[0, 1]]);
        assert_eq!(trace_square_closed_form(&double), 8);
        let s = two_set_minor_sum(&double).unwrap();
        assert_eq!((s.root_sum, s.tau_sum, s.signed_sum), (2, 2, None));
        let checks = check_trace_square_identity(&double).unwrap();
        assert_eq!(checks[2].status, Status::Inapplicable);
    }

    #[test]
    fn row_sums_on_mixed_hypergraph() {
        let g = h(
            6,
            &[
                &[0],
                &[0, 1, 2],
                &[0, 1, 2],
                &[0, 1, 3],
                &[2, 3],
                &[3, 4, 5],
                &[4, 5],
            ],
        );
        assert!(all_pass(&check_row_sum_lemma(&g)));
        assert!(check_trace_square_identity(&g)
            .unwrap()
            .iter()
            .all(Check::passed));
        assert!(two_set_minor_sum(&g).is_err());
    }

    #[test]
    fn loop_with_included_pair() {
        let g = h(2, &[&[0], &[0, 1]]);
        assert!(all_pass(&check_trace_square_identity(&g).unwrap()));
    }
}
