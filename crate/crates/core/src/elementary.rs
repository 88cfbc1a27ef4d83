//! Elementary subhypergraphs and the coefficient formulas built on them.
//!
//! An elementary `q`-subhypergraph is a set of part-disjoint exact cycles and
//! edge 2-partitions covering `q` parts. These correspond one to one with the
//! elementary subgraphs of `G_H` (vertex-disjoint edges and cycles), which is
//! where the search runs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{exact_cycle_counts, exact_girth, odd_exact_girth};
use crate::hypergraph::{Hypergraph, Part};
use crate::matrix::{AssociatedGraph, UnifiedMatrix};
use crate::poly::{char_poly, CharPoly};
use crate::report::Check;
use crate::DEFAULT_BUDGET;

/// An elementary `q`-subhypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryConfig {
    pub q: usize,
    /// Exact cycles as cyclic part sequences.
    pub cycles: Vec<Vec<Part>>,
    /// 2-partitions `{S, S'}` of edges, smaller part first.
    pub edge_partitions: Vec<(Part, Part)>,
}

impl ElementaryConfig {
    /// Number of cycles, `c`.
    pub fn c(&self) -> usize {
        self.cycles.len()
    }

    /// Number of edge 2-partitions, `e`.
    pub fn e(&self) -> usize {
        self.edge_partitions.len()
    }

    /// `(-1)^(c+e) 2^c`, this configuration's term in `c_q`.
    pub fn coefficient_term(&self) -> BigInt {
        signed_term(self.c(), self.e())
    }

    /// Checks the defining conditions against `h`: every cycle is an exact
    /// cycle, every pair 2-partitions an edge, no part is used twice, and the
    /// parts covered number `q`.
    pub fn validate(&self, h: &Hypergraph) -> std::result::Result<(), String> {
        if self.cycles.is_empty() && self.edge_partitions.is_empty() {
            return Err("no cycles and no partitions".into());
        }
        let splits = |a: &Part, b: &Part| a.is_disjoint(b) && h.multiplicity(&a.union(b)) > 0;
        let mut used: Vec<&Part> = Vec::new();
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return Err(format!("cycle of length {} is too short", cycle.len()));
            }
            let mut edges = Vec::new();
            for i in 0..cycle.len() {
                let (a, b) = (&cycle[i], &cycle[(i + 1) % cycle.len()]);
                if !splits(a, b) {
                    return Err(format!("{a} and {b} do not 2-partition an edge"));
                }
                edges.push(a.union(b));
            }
            edges.sort();
            edges.dedup();
            if edges.len() < 3 {
                return Err("cycle uses fewer than three distinct edges".into());
            }
            used.extend(cycle);
        }
        for (a, b) in &self.edge_partitions {
            if !splits(a, b) {
                return Err(format!("{a} and {b} do not 2-partition an edge"));
            }
            used.push(a);
            used.push(b);
        }
        let covered = used.len();
        used.sort();
        used.dedup();
        if used.len() != covered {
            return Err("a part is used twice".into());
        }
        if covered != self.q {
            return Err(format!("covers {covered} parts, expected {}", self.q));
        }
        Ok(())
    }
}

impl fmt::Display for ElementaryConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}", self.q)?;
        for c in &self.cycles {
            let parts: Vec<String> = c.iter().map(Part::to_string).collect();
            write!(f, " ({})", parts.join(" "))?;
        }
        for (a, b) in &self.edge_partitions {
            write!(f, " {{{a},{b}}}")?;
        }
        Ok(())
    }
}

fn signed_term(c: usize, e: usize) -> BigInt {
    let magnitude = BigInt::one() << c;
    if (c + e).is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

fn require_simple(h: &Hypergraph, what: &'static str) -> Result<AssociatedGraph> {
    if !h.is_simple() {
        return Err(Error::NotSimple(what));
    }
    AssociatedGraph::build(h)
}

/// Backtracking over `G_H` vertices in index order. At each uncovered vertex
/// the search leaves it uncovered, pairs it with a larger neighbour, or closes
/// a cycle whose least vertex it is.
struct Search<'a, F> {
    g: &'a AssociatedGraph,
    covered: Vec<bool>,
    ncovered: usize,
    cycles: Vec<Vec<usize>>,
    pairs: Vec<(usize, usize)>,
    /// Configurations larger than this are not explored.
    limit: usize,
    /// When set, only configurations of exactly this size are reported.
    target: Option<usize>,
    steps: u64,
    budget: u64,
    visit: F,
}

impl<F: FnMut(&[Vec<usize>], &[(usize, usize)], usize)> Search<'_, F> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(Error::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    fn go(&mut self, v: usize) -> Result<()> {
        self.tick()?;
        let k = self.covered.len();
        if v == k {
            if self.target.is_none_or(|t| t == self.ncovered) {
                (self.visit)(&self.cycles, &self.pairs, self.ncovered);
            }
            return Ok(());
        }
        if self.covered[v] {
            return self.go(v + 1);
        }
        if let Some(t) = self.target {
            let free = (v..k).filter(|&i| !self.covered[i]).count();
            if self.ncovered + free < t {
                return Ok(());
            }
        }
        self.go(v + 1)?;
        let g = self.g;
        if self.ncovered + 2 <= self.limit {
            for &(w, _) in g.neighbors(v) {
                if w > v && !self.covered[w] {
                    self.cover(v, true);
                    self.cover(w, true);
                    self.pairs.push((v, w));
                    self.go(v + 1)?;
                    self.pairs.pop();
                    self.cover(w, false);
                    self.cover(v, false);
                }
            }
        }
        if self.ncovered + 3 <= self.limit {
            self.cover(v, true);
            let mut path = vec![v];
            self.extend_cycle(&mut path)?;
            self.cover(v, false);
        }
        Ok(())
    }

    fn extend_cycle(&mut self, path: &mut Vec<usize>) -> Result<()> {
        self.tick()?;
        let g = self.g;
        let start = path[0];
        let x = *path.last().expect("non-empty path");
        for &(y, _) in g.neighbors(x) {
            if y == start {
                if path.len() >= 3 && path[1] < x {
                    self.cycles.push(path.clone());
                    self.go(start + 1)?;
                    self.cycles.pop();
                }
            } else if y > start && !self.covered[y] && self.ncovered < self.limit {
                self.cover(y, true);
                path.push(y);
                self.extend_cycle(path)?;
                path.pop();
                self.cover(y, false);
            }
        }
        Ok(())
    }

    fn cover(&mut self, v: usize, on: bool) {
        self.covered[v] = on;
        if on {
            self.ncovered += 1;
        } else {
            self.ncovered -= 1;
        }
    }
}

fn run_search<F>(g: &AssociatedGraph, target: Option<usize>, budget: u64, visit: F) -> Result<()>
where
    F: FnMut(&[Vec<usize>], &[(usize, usize)], usize),
{
    let k = g.vertex_count();
    let mut s = Search {
        g,
        covered: vec![false; k],
        ncovered: 0,
        cycles: Vec::new(),
        pairs: Vec::new(),
        limit: target.unwrap_or(k),
        target,
        steps: 0,
        budget,
        visit,
    };
    s.go(0)
}

/// All elementary `q`-subhypergraphs of a simple hypergraph.
pub fn enumerate_elementary(h: &Hypergraph, q: usize) -> Result<Vec<ElementaryConfig>> {
    enumerate_elementary_with_budget(h, q, DEFAULT_BUDGET)
}

pub fn enumerate_elementary_with_budget(
    h: &Hypergraph,
    q: usize,
    budget: u64,
) -> Result<Vec<ElementaryConfig>> {
    let g = require_simple(h, "elementary subhypergraphs")?;
    let mut out = Vec::new();
    if q < 2 || q > g.vertex_count() {
        return Ok(out);
    }
    let part = |i: usize| g.index().get(i).clone();
    run_search(&g, Some(q), budget, |cycles, pairs, covered| {
        out.push(ElementaryConfig {
            q: covered,
            cycles: cycles
                .iter()
                .map(|c| c.iter().map(|&i| part(i)).collect())
                .collect(),
            edge_partitions: pairs.iter().map(|&(a, b)| (part(a), part(b))).collect(),
        });
    })?;
    Ok(out)
}

/// Per-size aggregates over all elementary subhypergraphs, indexed by `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryCensus {
    /// Number of elementary `q`-subhypergraphs.
    pub counts: Vec<u64>,
    /// `Σ (-1)^(c+e) 2^c`, which is `c_q`.
    pub terms: Vec<BigInt>,
    /// Number of those with no cycle.
    pub matchings: Vec<u64>,
}

pub fn elementary_census(h: &Hypergraph, budget: u64) -> Result<ElementaryCensus> {
    let g = require_simple(h, "elementary subhypergraphs")?;
    let k = g.vertex_count();
    let mut census = ElementaryCensus {
        counts: vec![0; k + 1],
        terms: vec![BigInt::zero(); k + 1],
        matchings: vec![0; k + 1],
    };
    run_search(&g, None, budget, |cycles, pairs, covered| {
        if covered == 0 {
            return;
        }
        census.counts[covered] += 1;
        census.terms[covered] += signed_term(cycles.len(), pairs.len());
        if cycles.is_empty() {
            census.matchings[covered] += 1;
        }
    })?;
    Ok(census)
}

/// Characteristic polynomial with `c_t = Σ (-1)^(c+e) 2^c` over elementary
/// `t`-subhypergraphs.
pub fn coeffs_via_elementary(h: &Hypergraph) -> Result<CharPoly> {
    coeffs_via_elementary_with_budget(h, DEFAULT_BUDGET)
}

pub fn coeffs_via_elementary_with_budget(h: &Hypergraph, budget: u64) -> Result<CharPoly> {
    let mut terms = elementary_census(h, budget)?.terms;
    terms[0] = BigInt::one();
    Ok(CharPoly::from_coefficients(terms))
}

/// `det U(H) = Σ (-1)^(k-c-e) 2^c` over elementary `k`-subhypergraphs.
///
/// ```
/// use unispec::{elementary::det_via_elementary, Hypergraph};
///
/// let h = Hypergraph::new(7, [
///     vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3], vec![4, 5, 6],
/// ]).unwrap();
/// assert_eq!(det_via_elementary(&h).unwrap(), 0.into());
/// ```
pub fn det_via_elementary(h: &Hypergraph) -> Result<BigInt> {
    det_via_elementary_with_budget(h, DEFAULT_BUDGET)
}

pub fn det_via_elementary_with_budget(h: &Hypergraph, budget: u64) -> Result<BigInt> {
    let g = require_simple(h, "elementary subhypergraphs")?;
    let k = g.vertex_count();
    let mut det = BigInt::zero();
    run_search(&g, Some(k), budget, |cycles, pairs, _| {
        det += signed_term(cycles.len(), pairs.len());
    })?;
    if k % 2 == 1 {
        det = -det;
    }
    Ok(det)
}

/// Girth data read off the characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientGirth {
    /// First odd index with a nonzero coefficient.
    pub odd_girth: Option<usize>,
    /// `-c_d / 2` at `d = odd_girth`.
    pub odd_count: Option<BigInt>,
    /// First index with nonzero `γ`.
    pub girth: Option<usize>,
    /// `-γ_t / 2` at `t = girth`.
    pub count: Option<BigInt>,
}

/// `γ_i = c_i` for odd `i` and `c_i - (-1)^(i/2) ω_i` for even `i`, where
/// `ω_i` counts the cycle-free elementary `i`-subhypergraphs.
pub fn girth_from_coeffs(h: &Hypergraph) -> Result<CoefficientGirth> {
    girth_from_coeffs_with_budget(h, DEFAULT_BUDGET)
}

pub fn girth_from_coeffs_with_budget(h: &Hypergraph, budget: u64) -> Result<CoefficientGirth> {
    require_simple(h, "the coefficient girth formulas")?;
    let census = elementary_census(h, budget)?;
    let p = char_poly(UnifiedMatrix::build(h).matrix())?;
    let k = p.degree();
    let half = |x: &BigInt| -> BigInt { -(x / BigInt::from(2)) };
    let odd_girth = (1..=k).step_by(2).find(|&i| !p.c(i).is_zero());
    let gamma = |i: usize| -> BigInt {
        if i % 2 == 1 {
            p.c(i).clone()
        } else {
            let w = BigInt::from(census.matchings[i]);
            if (i / 2).is_multiple_of(2) {
                p.c(i) - w
            } else {
                p.c(i) + w
            }
        }
    };
    let girth = (1..=k).find(|&i| !gamma(i).is_zero());
    Ok(CoefficientGirth {
        odd_girth,
        odd_count: odd_girth.map(|d| half(p.c(d))),
        girth,
        count: girth.map(|t| half(&gamma(t))),
    })
}

fn show<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "none".to_string(), T::to_string)
}

/// Compares the coefficient girth data with direct cycle search.
pub fn check_girth_from_coeffs(h: &Hypergraph, budget: u64) -> Result<Vec<Check>> {
    let from_coeffs = girth_from_coeffs_with_budget(h, budget)?;
    let girth = exact_girth(h)?;
    let odd = odd_exact_girth(h)?;
    let counted = |len: Option<usize>| -> Result<Option<BigInt>> {
        len.map(|l| exact_cycle_counts(h, l, budget).map(|c| BigInt::from(c[l])))
            .transpose()
    };
    Ok(vec![
        Check::equal(
            "coefficient-girth.odd",
            show(&from_coeffs.odd_girth),
            show(&odd),
        ),
        Check::equal(
            "coefficient-girth.odd-count",
            show(&from_coeffs.odd_count),
            show(&counted(odd)?),
        ),
        Check::equal(
            "coefficient-girth.even",
            show(&from_coeffs.girth),
            show(&girth),
        ),
        Check::equal(
            "coefficient-girth.count",
            show(&from_coeffs.count),
            show(&counted(girth)?),
        ),
    ])
}

/// Determinant and every coefficient via elementary subhypergraphs against
/// the exact characteristic polynomial.
pub fn check_elementary_formulas(h: &Hypergraph, budget: u64) -> Result<Vec<Check>> {
    let exact = char_poly(UnifiedMatrix::build(h).matrix())?;
    let via = coeffs_via_elementary_with_budget(h, budget)?;
    let det = det_via_elementary_with_budget(h, budget)?;
    Ok(vec![
        Check::equal("elementary.det", det, exact.determinant()),
        Check::equal(
            "elementary.coefficients",
            via.to_coefficient_list(),
            exact.to_coefficient_list(),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn square_and_triple() -> Hypergraph {
        h(7, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[4, 5, 6]])
    }

    #[test]
    fn square_and_triple_configurations() {
        let g = square_and_triple();
        let configs = enumerate_elementary(&g, 10).unwrap();
        assert_eq!(configs.len(), 3);
        let mut shape: Vec<(usize, usize)> = configs.iter().map(|c| (c.c(), c.e())).collect();
        shape.sort();
        assert_eq!(shape, vec![(0, 5), (0, 5), (1, 3)]);
        for c in &configs {
            c.validate(&g).unwrap();
        }
        assert_eq!(det_via_elementary(&g).unwrap(), BigInt::zero());
    }

    #[test]
    fn triangle_on_three_singletons() {
        let tri = h(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let configs = enumerate_elementary(&tri, 3).unwrap();
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0].to_string(), "q=3 ({0} {1} {2})");
    }

    #[test]
    fn single_three_edge_coefficients() {
        let p = coeffs_via_elementary(&h(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(p.to_coefficient_list(), "1,0,-3,0,3,0,-1");
    }

    #[test]
    fn edgeless_has_no_configurations() {
        let g = Hypergraph::edgeless(4);
        assert!(enumerate_elementary(&g, 2).unwrap().is_empty());
        assert_eq!(
            coeffs_via_elementary(&g).unwrap().to_coefficient_list(),
            "1,0,0,0,0"
        );
    }

    #[test]
    fn four_cycle_girth() {
        let c4 = h(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let census = elementary_census(&c4, DEFAULT_BUDGET).unwrap();
        assert_eq!(census.terms[4], BigInt::zero());
        assert_eq!(census.matchings[4], 2);
        let gc = girth_from_coeffs(&c4).unwrap();
        assert_eq!(gc.girth, Some(4));
        assert_eq!(gc.count, Some(BigInt::one()));
        assert_eq!(gc.odd_girth, None);
        assert!(check_girth_from_coeffs(&c4, DEFAULT_BUDGET)
            .unwrap()
            .iter()
            .all(Check::passed));
    }

    #[test]
    fn rejects_non_simple_and_budget() {
        assert!(enumerate_elementary(&h(2, &[&[0], &[0, 1]]), 2).is_err());
        assert_eq!(
            det_via_elementary_with_budget(&square_and_triple(), 5).unwrap_err(),
            Error::BudgetExceeded(5)
        );
    }

    #[test]
    fn validate_rejects_overlap() {
        let g = h(3, &[&[0, 1, 2]]);
        let p = |v: &[usize]| Part::new(v.iter().copied()).unwrap();
        let bad = ElementaryConfig {
            q: 4,
            cycles: vec![],
            edge_partitions: vec![(p(&[0]), p(&[1, 2])), (p(&[0]), p(&[1, 2]))],
        };
        assert!(bad.validate(&g).is_err());
    }
}
