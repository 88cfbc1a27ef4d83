//! Eigenvalue bounds and the exhaustive combinatorial oracles they are
//! checked against.

use std::collections::HashSet;

use crate::eigen::{eigen_spectrum, group_tolerance, Spectrum, TAU_GROUP, TAU_NUM};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::matrix::UnifiedMatrix;
use crate::poly::char_poly;
use crate::report::{Check, Report};
use crate::DEFAULT_BUDGET;

/// Largest vertex count for which induced-subhypergraph hypotheses are
/// checked exhaustively.
pub const HYPOTHESIS_MAX_VERTICES: usize = 8;
/// Largest vertex count for the subset-based independence oracle.
pub const SUBSET_ORACLE_MAX_VERTICES: usize = 24;

fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges()
        .iter()
        .map(|e| e.part.vertices().iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

/// Edges of cardinality at least two, grouped by their largest vertex.
fn edges_by_last_vertex(h: &Hypergraph) -> Vec<Vec<Vec<VertexId>>> {
    let mut out = vec![Vec::new(); h.n()];
    for e in h.edges() {
        if e.len() >= 2 {
            let vs = e.part.vertices();
            out[vs[vs.len() - 1]].push(vs.to_vec());
        }
    }
    out
}

/// Least number of colors such that `ok(colors, v)` accepts every prefix,
/// by backtracking with canonical color introduction. `None` when the step
/// budget runs out.
fn min_colors(n: usize, budget: u64, ok: impl Fn(&[usize], usize) -> bool) -> Option<usize> {
    struct Search<'a> {
        n: usize,
        limit: usize,
        colors: Vec<usize>,
        steps: u64,
        budget: u64,
        ok: &'a dyn Fn(&[usize], usize) -> bool,
    }

    impl Search<'_> {
        fn assign(&mut self, v: usize, used: usize) -> Option<bool> {
            if v == self.n {
                return Some(true);
            }
            for c in 0..self.limit.min(used + 1) {
                self.steps += 1;
                if self.steps > self.budget {
                    return None;
                }
                self.colors.push(c);
                if (self.ok)(&self.colors, v) && self.assign(v + 1, used.max(c + 1))? {
                    return Some(true);
                }
                self.colors.pop();
            }
            Some(false)
        }
    }

    if n == 0 {
        return Some(0);
    }
    let mut search = Search {
        n,
        limit: 0,
        colors: Vec::with_capacity(n),
        steps: 0,
        budget,
        ok: &ok,
    };
    for limit in 1..=n {
        search.limit = limit;
        search.colors.clear();
        if search.assign(0, 0)? {
            return Some(limit);
        }
    }
    Some(n)
}

/// Weak chromatic number: no edge of size two or more is monochromatic.
/// `Ok(None)` when the budget runs out.
pub fn chromatic_number(h: &Hypergraph, budget: u64) -> Result<Option<usize>> {
    if h.has_loops() {
        return Err(Error::HasLoops("the weak chromatic number"));
    }
    let closing = edges_by_last_vertex(h);
    Ok(min_colors(h.n(), budget, |colors, v| {
        closing[v]
            .iter()
            .all(|e| e.iter().any(|&w| colors[w] != colors[e[0]]))
    }))
}

/// Strong chromatic number: every edge is rainbow.
pub fn strong_chromatic_number(h: &Hypergraph, budget: u64) -> Option<usize> {
    let mut earlier: Vec<Vec<VertexId>> = vec![Vec::new(); h.n()];
    for e in h.edges() {
        for &a in e.part.vertices() {
            for &b in e.part.vertices() {
                if b < a {
                    earlier[a].push(b);
                }
            }
        }
    }
    min_colors(h.n(), budget, |colors, v| {
        earlier[v].iter().all(|&w| colors[w] != colors[v])
    })
}

/// Largest vertex set containing no edge; `None` above
/// [`SUBSET_ORACLE_MAX_VERTICES`].
pub fn independence_number(h: &Hypergraph) -> Option<usize> {
    let n = h.n();
    if n > SUBSET_ORACLE_MAX_VERTICES {
        return None;
    }
    let masks = edge_masks(h);
    (0u64..1 << n)
        .filter(|&w| masks.iter().all(|&e| e & w != e))
        .map(|w| w.count_ones() as usize)
        .max()
}

/// Largest vertex set all of whose non-empty subsets are edges; 0 when there
/// is none. Such a set is itself an edge, so only edges are candidates.
pub fn complete_clique_number(h: &Hypergraph) -> usize {
    if h.n() > 64 {
        return 0;
    }
    let masks: HashSet<u64> = edge_masks(h).into_iter().collect();
    let complete = |e: u64| {
        let mut sub = e;
        while sub != 0 {
            if !masks.contains(&sub) {
                return false;
            }
            sub = (sub - 1) & e;
        }
        true
    };
    masks
        .iter()
        .filter(|&&e| complete(e))
        .map(|e| e.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// The graph of all 2-edges of `h` on the same vertex set.
pub fn two_section_of_pairs(h: &Hypergraph) -> Hypergraph {
    Hypergraph::with_multiplicities(
        h.n(),
        h.edges()
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| (e.part.vertices().to_vec(), e.multiplicity)),
    )
    .expect("sub-edge list of a valid hypergraph")
}

struct Spectral {
    spectrum: Spectrum,
    tol: f64,
    k: usize,
}

impl Spectral {
    fn of(h: &Hypergraph) -> Result<Self> {
        let u = UnifiedMatrix::build(h);
        let spectrum = eigen_spectrum(u.matrix())?;
        let tol = group_tolerance(u.matrix(), TAU_NUM, TAU_GROUP);
        Ok(Spectral {
            spectrum,
            tol,
            k: u.order(),
        })
    }

    fn largest(&self) -> f64 {
        self.spectrum.largest().unwrap_or(0.0)
    }

    fn smallest(&self) -> f64 {
        self.spectrum.smallest().unwrap_or(0.0)
    }
}

/// Upper and lower bounds on the spectral radius.
pub fn spectral_radius_bounds(h: &Hypergraph) -> Result<Vec<Check>> {
    let s = Spectral::of(h)?;
    let k = s.k as f64;
    let lambda1 = s.largest();
    let degree_sum = h.unified_degree_sum() as f64;
    let partial = h.included_edge_count() as f64;
    let mut out = Vec::new();

    if !h.is_simple() {
        out.push(Check::inapplicable("radius.trace", "not simple"));
        out.push(Check::inapplicable("radius.max-degree", "not simple"));
    } else {
        let rhs = if s.k == 0 {
            0.0
        } else {
            (k - 1.0) / k * (degree_sum - partial)
        };
        out.push(Check::at_most_approx(
            "radius.trace",
            lambda1 * lambda1,
            rhs,
            s.tol * lambda1.abs().max(1.0),
        ));
        let modulus = lambda1.abs().max(s.smallest().abs());
        out.push(Check::at_most_approx(
            "radius.max-degree",
            modulus,
            h.max_degree() as f64,
            s.tol,
        ));
    }

    if s.k == 0 {
        out.push(Check::inapplicable(
            "radius.min-unified-degree",
            "empty edge index set",
        ));
    } else {
        let lower = h.min_unified_degree() as f64 - partial / k;
        out.push(Check::at_most_approx(
            "radius.min-unified-degree",
            lower,
            lambda1,
            s.tol,
        ));
    }

    let m = h.rank();
    let pairs = two_section_of_pairs(h);
    if h.has_loops() || m < 2 || pairs.has_multiple_edges() {
        out.push(Check::inapplicable(
            "radius.rank",
            "needs rank >= 2, no loops and a simple 2-edge graph",
        ));
    } else {
        let g = Spectral::of(&pairs)?;
        let (mf, lk) = (m as f64, s.smallest());
        let lhs = (3.0 - mf) * lambda1 + (mf - 2.0) * lk;
        out.push(Check::at_most_approx(
            "radius.rank",
            lhs,
            g.largest(),
            s.tol * mf,
        ));
    }

    if h.has_included_edges() || s.k == 0 {
        out.push(Check::inapplicable(
            "radius.average-degree",
            "has included edges",
        ));
    } else {
        out.push(Check::at_most_approx(
            "radius.average-degree",
            degree_sum / k,
            lambda1,
            s.tol,
        ));
    }
    Ok(out)
}

/// Eigenvalue interlacing between `H` and its subhypergraph induced by `keep`.
pub fn interlacing_check(h: &Hypergraph, keep: &[VertexId]) -> Result<Check> {
    let (sub, _) = h.induced_subhypergraph(keep)?;
    let big = Spectral::of(h)?;
    let small = Spectral::of(&sub)?;
    let (k1, k2) = (big.k, small.k);
    let lam = big.spectrum.eigenvalues();
    let mu = small.spectrum.eigenvalues();
    let worst = (0..k2)
        .map(|i| (lam[k1 - k2 + i] - mu[i]).max(mu[i] - lam[i]))
        .fold(f64::NEG_INFINITY, f64::max);
    let name = format!("interlacing[{}]", keep.len());
    if k2 == 0 {
        return Ok(Check::inapplicable(name, "empty induced subhypergraph"));
    }
    Ok(Check::at_most_approx(name, worst, 0.0, big.tol).with_note("largest interlacing excess"))
}

/// Whether every non-empty induced subhypergraph has `δ* = δ`. `None` above
/// [`HYPOTHESIS_MAX_VERTICES`].
pub fn min_degree_hypothesis(h: &Hypergraph) -> Option<bool> {
    let n = h.n();
    if n > HYPOTHESIS_MAX_VERTICES {
        return None;
    }
    Some((1u64..1 << n).all(|w| {
        let keep: Vec<VertexId> = (0..n).filter(|&v| w >> v & 1 == 1).collect();
        let (sub, _) = h.induced_subhypergraph(&keep).expect("vertices in range");
        sub.min_unified_degree() == sub.min_degree()
    }))
}

/// `χ <= 1 + λ1` and the chain `χ_s >= χ >= χ(G) >= 1 + λ1(G)/|λn(G)| >=
/// 1 + λ1(G)/|λk(H)|` with `G` the graph of 2-edges.
pub fn chromatic_bounds(h: &Hypergraph, budget: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let s = Spectral::of(h)?;
    let chi = if h.has_loops() {
        None
    } else {
        chromatic_number(h, budget)?
    };

    if h.has_loops() || h.has_included_edges() {
        out.push(Check::inapplicable(
            "chromatic.spectral",
            "needs loopless without included edges",
        ));
    } else {
        match (min_degree_hypothesis(h), chi) {
            (None, _) => out.push(Check::unverified(
                "chromatic.spectral",
                "hypothesis unverified above 8 vertices",
            )),
            (Some(false), _) => out.push(Check::inapplicable(
                "chromatic.spectral",
                "some induced subhypergraph has min unified degree below min degree",
            )),
            (Some(true), None) => out.push(Check::unverified(
                "chromatic.spectral",
                "chromatic oracle over budget",
            )),
            (Some(true), Some(chi)) => out.push(Check::at_most_approx(
                "chromatic.spectral",
                chi as f64,
                1.0 + s.largest(),
                s.tol,
            )),
        }
    }

    let pairs = two_section_of_pairs(h);
    if !h.is_simple() || pairs.edges().is_empty() {
        out.push(Check::inapplicable(
            "chromatic.chain",
            "needs simple with a 2-edge",
        ));
        return Ok(out);
    }
    let (Some(chi), Some(chi_s), Some(chi_g)) = (
        chi,
        strong_chromatic_number(h, budget),
        chromatic_number(&pairs, budget)?,
    ) else {
        out.push(Check::unverified(
            "chromatic.chain",
            "chromatic oracle over budget",
        ));
        return Ok(out);
    };
    let g = Spectral::of(&pairs)?;
    let hoffman = 1.0 + g.largest() / g.smallest().abs();
    let interlaced = 1.0 + g.largest() / s.smallest().abs();
    out.push(Check::at_most("chromatic.strong", chi, chi_s));
    out.push(Check::at_most("chromatic.graph", chi_g, chi));
    out.push(Check::at_most_approx(
        "chromatic.hoffman",
        hoffman,
        chi_g as f64,
        s.tol,
    ));
    out.push(Check::at_most_approx(
        "chromatic.interlaced",
        interlaced,
        hoffman,
        s.tol,
    ));
    Ok(out)
}

/// `α <= min(k - ℓ+, k - ℓ-)` and `ω <= min(n- + n0 + 1, n0 + n+, λ1)`, with
/// sign counts taken exactly from the characteristic polynomial.
pub fn independence_clique_bounds(h: &Hypergraph) -> Result<Vec<Check>> {
    let u = UnifiedMatrix::build(h);
    let p = char_poly(u.matrix())?;
    let (pos, neg) = p.sign_counts();
    let zero = p.zero_multiplicity();
    let k = u.order();
    let mut out = Vec::new();
    if !h.is_simple() {
        out.push(Check::inapplicable("independence", "not simple"));
    } else {
        match independence_number(h) {
            Some(alpha) => out.push(Check::at_most(
                "independence",
                alpha,
                (k - pos).min(k - neg),
            )),
            None => out.push(Check::unverified(
                "independence",
                "too many vertices for the oracle",
            )),
        }
    }
    if h.has_multiple_edges() {
        out.push(Check::inapplicable("clique.inertia", "multiple edges"));
        out.push(Check::inapplicable("clique.radius", "multiple edges"));
    } else {
        let omega = complete_clique_number(h);
        out.push(Check::at_most(
            "clique.inertia",
            omega,
            (neg + zero + 1).min(zero + pos),
        ));
        let s = Spectral::of(h)?;
        out.push(Check::at_most_approx(
            "clique.radius",
            omega as f64,
            s.largest(),
            s.tol,
        ));
    }
    Ok(out)
}

/// Every bound, with interlacing against each single-vertex deletion.
pub fn bounds_report(h: &Hypergraph, budget: u64) -> Result<Report> {
    let mut r = Report::new();
    r.extend(spectral_radius_bounds(h)?);
    for v in 0..h.n() {
        let keep: Vec<VertexId> = (0..h.n()).filter(|&w| w != v).collect();
        r.push(interlacing_check(h, &keep)?.with_note(format!("without vertex {v}")));
    }
    r.extend(chromatic_bounds(h, budget)?);
    r.extend(independence_clique_bounds(h)?);
    Ok(r)
}

pub fn default_bounds_report(h: &Hypergraph) -> Result<Report> {
    bounds_report(h, DEFAULT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn complete(n: usize) -> Hypergraph {
        Hypergraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j]))).unwrap()
    }

    fn status(checks: &[Check], name: &str) -> Status {
        checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("{name}"))
            .status
    }

    #[test]
    fn oracles_on_single_three_edge() {
        let e = h(3, &[&[0, 1, 2]]);
        assert_eq!(chromatic_number(&e, DEFAULT_BUDGET).unwrap(), Some(2));
        assert_eq!(strong_chromatic_number(&e, DEFAULT_BUDGET), Some(3));
        assert_eq!(independence_number(&e), Some(2));
        assert_eq!(complete_clique_number(&e), 0);
    }

    #[test]
    fn oracles_small_cases() {
        assert_eq!(complete_clique_number(&h(2, &[&[0], &[1], &[0, 1]])), 2);
        let empty = Hypergraph::edgeless(4);
        assert_eq!(chromatic_number(&empty, DEFAULT_BUDGET).unwrap(), Some(1));
        assert_eq!(independence_number(&empty), Some(4));
        assert_eq!(
            chromatic_number(&complete(5), DEFAULT_BUDGET).unwrap(),
            Some(5)
        );
        assert!(chromatic_number(&h(1, &[&[0]]), DEFAULT_BUDGET).is_err());
        assert_eq!(chromatic_number(&complete(6), 3).unwrap(), None);
    }

    #[test]
    fn complete_graph_is_tight() {
        let k4 = complete(4);
        let radius = spectral_radius_bounds(&k4).unwrap();
        assert_eq!(status(&radius, "radius.max-degree"), Status::Tight);
        assert_eq!(status(&radius, "radius.min-unified-degree"), Status::Tight);
        let chromatic = chromatic_bounds(&k4, DEFAULT_BUDGET).unwrap();
        assert_eq!(status(&chromatic, "chromatic.spectral"), Status::Tight);
    }

    #[test]
    fn edgeless_independence_is_tight() {
        let checks = independence_clique_bounds(&Hypergraph::edgeless(3)).unwrap();
        assert_eq!(status(&checks, "independence"), Status::Tight);
    }

    #[test]
    fn bipartite_hoffman_is_tight() {
        let c4 = h(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let checks = chromatic_bounds(&c4, DEFAULT_BUDGET).unwrap();
        assert_eq!(status(&checks, "chromatic.hoffman"), Status::Tight);
    }

    #[test]
    fn full_report_passes() {
        for g in [
            h(3, &[&[0, 1, 2]]),
            complete(4),
            h(5, &[&[0, 1], &[1, 2, 3], &[3, 4], &[0, 4]]),
        ] {
            let r = default_bounds_report(&g).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn interlacing_with_whole_vertex_set() {
        let g = h(4, &[&[0, 1, 2], &[2, 3]]);
        assert_eq!(
            interlacing_check(&g, &[0, 1, 2, 3]).unwrap().status,
            Status::Tight
        );
        assert!(interlacing_check(&g, &[1]).unwrap().passed());
    }
}
