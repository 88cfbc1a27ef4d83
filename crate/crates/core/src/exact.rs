//! Exact walks, distances, girth and cycles.
//!
//! Every query runs on the associated graph `G_H`: exact walks in `H` are
//! walks in `G_H`, and cycles of `G_H` of length at least three are exact
//! cycles.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::eigen::{eigen_decomposition, eigen_spectrum, group_tolerance, TAU_GROUP, TAU_NUM};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Part, VertexId};
use crate::matrix::{AssociatedGraph, UnifiedMatrix};
use crate::poly::char_poly;
use crate::report::{fmt_f64, Check};
use crate::DEFAULT_BUDGET;

/// An exact distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    /// No exact path joins the two vertices.
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("INF"),
        }
    }
}

/// `(U(H)^len)_{S,S'}`: the number of exact walks of length `len`.
pub fn count_exact_walks(h: &Hypergraph, from: &Part, to: &Part, len: u32) -> Result<BigInt> {
    if h.has_loops() {
        return Err(Error::HasLoops("exact walk counting"));
    }
    let u = UnifiedMatrix::build(h);
    let i = u.index().require(from)?;
    let j = u.index().require(to)?;
    Ok(u.matrix().pow_big(len).swap_remove(i).swap_remove(j))
}

/// All exact-walk counts of length `len`, indexed like `I(H)`.
pub fn walk_count_matrix(h: &Hypergraph, len: u32) -> Result<Vec<Vec<BigInt>>> {
    if h.has_loops() {
        return Err(Error::HasLoops("exact walk counting"));
    }
    Ok(UnifiedMatrix::build(h).matrix().pow_big(len))
}

/// Exact-walk counts of length `len` found by extending part sequences
/// through the edge list, one step per 2-partition, without forming `U(H)`.
pub fn enumerate_exact_walks(h: &Hypergraph, len: u32) -> Result<Vec<Vec<BigInt>>> {
    if h.has_loops() {
        return Err(Error::HasLoops("exact walk enumeration"));
    }
    let index = h.edge_index();
    let k = index.len();
    let steps: Vec<Vec<(usize, u32)>> = (0..k)
        .map(|i| {
            let s = index.get(i);
            h.edges()
                .iter()
                .filter(|e| s.is_proper_subset(&e.part))
                .map(|e| {
                    let rest = e.part.difference(s).expect("proper subset leaves a part");
                    (
                        index.require(&rest).expect("complements are indexed"),
                        e.multiplicity,
                    )
                })
                .collect()
        })
        .collect();
    fn walk(steps: &[Vec<(usize, u32)>], at: usize, left: u32, weight: u64, row: &mut [BigInt]) {
        if left == 0 {
            row[at] += weight;
            return;
        }
        for &(next, m) in &steps[at] {
            walk(steps, next, left - 1, weight * u64::from(m), row);
        }
    }
    let mut out = vec![vec![BigInt::zero(); k]; k];
    for (start, row) in out.iter_mut().enumerate() {
        walk(&steps, start, len, 1, row);
    }
    Ok(out)
}

/// `U(H)^ℓ` against enumerated exact walks for `ℓ = 1..=max_len`.
pub fn check_walk_counts(h: &Hypergraph, max_len: u32) -> Result<Vec<Check>> {
    let u = UnifiedMatrix::build(h);
    (1..=max_len)
        .map(|len| {
            let walks = enumerate_exact_walks(h, len)?;
            let power = u.matrix().pow_big(len);
            let bad = (0..walks.len())
                .flat_map(|i| (0..walks.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| walks[i][j] != power[i][j])
                .count();
            Ok(Check::equal(format!("walks[{len}]"), bad, 0).with_note("mismatched entries"))
        })
        .collect()
}

/// Exact distances between all vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Distance {
        self.d[u * self.n + v]
    }

    pub fn is_exactly_connected(&self) -> bool {
        self.d.iter().all(|d| *d != Distance::Unreachable)
    }

    /// Largest exact distance; `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        self.d
            .iter()
            .map(|d| d.finite())
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Triples `(u, v, w)` with `ed(u,w) > ed(u,v) + ed(v,w)`, all finite.
    pub fn triangle_violations(&self) -> Vec<(VertexId, VertexId, VertexId)> {
        let n = self.n;
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if let (Some(a), Some(b)) = (self.get(u, v).finite(), self.get(v, w).finite()) {
                        if self.get(u, w).finite().is_some_and(|c| c > a + b) {
                            out.push((u, v, w));
                        }
                    }
                }
            }
        }
        out
    }

    /// Square CSV with a header row of vertex ids; unreachable pairs print `INF`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex");
        for v in 0..self.n {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
        for u in 0..self.n {
            out.push_str(&u.to_string());
            for v in 0..self.n {
                out.push_str(&format!(",{}", self.get(u, v)));
            }
            out.push('\n');
        }
        out
    }
}

/// Exact distance table: `ed(u,u) = 0`; otherwise the least `G_H` distance
/// between distinct parts `S ∋ u` and `S' ∋ v`.
pub fn distance_table(h: &Hypergraph) -> Result<DistanceTable> {
    let g = AssociatedGraph::build(h)?;
    let n = h.n();
    let parts = g.index().parts();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p.vertices() {
            containing[v].push(i);
        }
    }
    let all: Vec<Vec<Option<usize>>> = (0..parts.len()).map(|i| g.bfs(i)).collect();
    let mut d = vec![Distance::Unreachable; n * n];
    for u in 0..n {
        d[u * n + u] = Distance::Finite(0);
        for v in u + 1..n {
            let best = containing[u]
                .iter()
                .flat_map(|&s| containing[v].iter().map(move |&t| (s, t)))
                .filter(|(s, t)| s != t)
                .filter_map(|(s, t)| all[s][t])
                .min();
            let dist = best.map_or(Distance::Unreachable, Distance::Finite);
            d[u * n + v] = dist;
            d[v * n + u] = dist;
        }
    }
    Ok(DistanceTable { n, d })
}

pub fn exact_distance(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<Distance> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    Ok(distance_table(h)?.get(u, v))
}

pub fn is_exactly_connected(h: &Hypergraph) -> Result<bool> {
    Ok(distance_table(h)?.is_exactly_connected())
}

/// The exact diameter; an error when `H` is not exactly connected.
pub fn exact_diameter(h: &Hypergraph) -> Result<usize> {
    distance_table(h)?
        .diameter()
        .ok_or(Error::NotExactlyConnected)
}

/// Shortest cycle length of the underlying simple graph of `G_H`, overall
/// and restricted to odd lengths.
fn bfs_girths(g: &AssociatedGraph) -> (Option<usize>, Option<usize>) {
    let k = g.vertex_count();
    let (mut girth, mut odd) = (usize::MAX, usize::MAX);
    for root in 0..k {
        let mut dist = vec![usize::MAX; k];
        let mut parent = vec![usize::MAX; k];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= girth.max(odd) {
                break;
            }
            for &(y, _) in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    girth = girth.min(dist[x] + dist[y] + 1);
                    if dist[x] == dist[y] {
                        odd = odd.min(2 * dist[x] + 1);
                    }
                }
            }
        }
    }
    let finite = |x: usize| (x != usize::MAX).then_some(x);
    (finite(girth), finite(odd))
}

/// Exact girth; `None` when `H` has no exact cycle.
pub fn exact_girth(h: &Hypergraph) -> Result<Option<usize>> {
    Ok(bfs_girths(&AssociatedGraph::build(h)?).0)
}

/// Length of a shortest odd exact cycle; `None` when there is none.
pub fn odd_exact_girth(h: &Hypergraph) -> Result<Option<usize>> {
    Ok(bfs_girths(&AssociatedGraph::build(h)?).1)
}

/// An exact cycle as its cyclic part sequence, listed once per unoriented,
/// basepoint-free cycle of `G_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCycle {
    /// `S_0, …, S_{l-1}`; the cycle closes back to `S_0`.
    pub parts: Vec<Part>,
    /// Number of exact cycles sharing this part sequence.
    pub weight: u64,
}

impl ExactCycle {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for ExactCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parts {
            write!(f, "{p} ")?;
        }
        write!(f, "{}", self.parts[0])?;
        if self.weight > 1 {
            write!(f, " x{}", self.weight)?;
        }
        Ok(())
    }
}

/// Parallel copies of an edge of `H` are distinct edges, so a cycle of `G_H`
/// stands for the product of its edge multiplicities.
fn cycle_weight(g: &AssociatedGraph, cycle: &[usize]) -> u64 {
    (0..cycle.len())
        .map(|i| u64::from(g.multiplicity(cycle[i], cycle[(i + 1) % cycle.len()])))
        .product()
}

/// Visits each cycle of `G_H` with length in `3..=max_len` once, as a vertex
/// sequence starting at its least vertex and with `c[1] < c[last]`.
fn for_each_cycle(
    g: &AssociatedGraph,
    max_len: usize,
    budget: u64,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    let k = g.vertex_count();
    let mut steps = 0u64;
    let mut on_path = vec![false; k];
    for start in 0..k {
        let mut path = vec![start];
        on_path[start] = true;
        // Each frame holds the next neighbour offset to try.
        let mut frames = vec![0usize];
        while let Some(next) = frames.last_mut() {
            let x = *path.last().expect("non-empty path");
            let nbrs = g.neighbors(x);
            if *next >= nbrs.len() {
                frames.pop();
                on_path[x] = false;
                path.pop();
                continue;
            }
            let y = nbrs[*next].0;
            *next += 1;
            steps += 1;
            if steps > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            if y == start && path.len() >= 3 && path[1] < path[path.len() - 1] {
                visit(&path);
            } else if y > start && !on_path[y] && path.len() < max_len {
                on_path[y] = true;
                path.push(y);
                frames.push(0);
            }
        }
        on_path[start] = false;
    }
    Ok(())
}

/// All exact cycles of length at most `max_len`.
pub fn enumerate_exact_cycles(h: &Hypergraph, max_len: usize) -> Result<Vec<ExactCycle>> {
    enumerate_exact_cycles_with_budget(h, max_len, DEFAULT_BUDGET)
}

pub fn enumerate_exact_cycles_with_budget(
    h: &Hypergraph,
    max_len: usize,
    budget: u64,
) -> Result<Vec<ExactCycle>> {
    let g = AssociatedGraph::build(h)?;
    let mut out = Vec::new();
    for_each_cycle(&g, max_len, budget, |c| {
        out.push(ExactCycle {
            parts: c.iter().map(|&i| g.index().get(i).clone()).collect(),
            weight: cycle_weight(&g, c),
        });
    })?;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.parts.cmp(&b.parts)));
    Ok(out)
}

/// `counts[l]` is the number of exact cycles of length `l <= max_len`.
pub fn exact_cycle_counts(h: &Hypergraph, max_len: usize, budget: u64) -> Result<Vec<u64>> {
    let g = AssociatedGraph::build(h)?;
    let mut counts = vec![0u64; max_len + 1];
    for_each_cycle(&g, max_len, budget, |c| {
        counts[c.len()] += cycle_weight(&g, c)
    })?;
    Ok(counts)
}

/// Number of exact cycles of length three.
pub fn e_triangle_count(h: &Hypergraph) -> Result<u64> {
    Ok(exact_cycle_counts(h, 3, DEFAULT_BUDGET)?[3])
}

/// `c_2 = (∂(H) - Σ d_H(S)) / 2` and `-c_3 = 2t`, `t` the e-triangle count.
pub fn check_c2_c3(h: &Hypergraph) -> Result<Vec<Check>> {
    if !h.is_simple() {
        return Err(Error::NotSimple("the c2/c3 relations"));
    }
    let u = UnifiedMatrix::build(h);
    let p = char_poly(u.matrix())?;
    let c2 = BigInt::from(h.included_edge_count() as i64 - h.unified_degree_sum() as i64);
    let t = e_triangle_count(h)?;
    Ok(vec![
        Check::equal("c2", BigInt::from(2) * p.c(2), c2).with_note("2*c2 vs partial - degree sum"),
        Check::equal("c3", -p.c(3), BigInt::from(2 * t)).with_note("-c3 vs 2*e-triangles"),
    ])
}

/// No odd exact cycle, vanishing odd coefficients and a spectrum symmetric
/// about the origin: the three must agree.
pub fn odd_cycle_free_characterization(h: &Hypergraph) -> Result<Vec<Check>> {
    if !h.is_simple() {
        return Err(Error::NotSimple("the odd-cycle characterization"));
    }
    let u = UnifiedMatrix::build(h);
    let no_odd_cycle = odd_exact_girth(h)?.is_none();
    let p = char_poly(u.matrix())?;
    let odd_zero = (1..=p.degree()).step_by(2).all(|i| p.c(i).is_zero());
    let symmetric = eigen_spectrum(u.matrix())?.is_symmetric_about_zero();
    Ok(vec![Check::boolean(
        "odd-cycle.equivalence",
        no_odd_cycle == odd_zero && odd_zero == symmetric,
        format!(
            "no-odd-cycle={no_odd_cycle},odd-coefficients-zero={odd_zero},symmetric={symmetric}"
        ),
    )])
}

/// Diameter bounds from the spectrum: `ED <= ℓ - 1` with `ℓ` distinct
/// eigenvalues, and the logarithmic bound from the Perron vector.
pub fn diameter_eigen_bounds(h: &Hypergraph) -> Result<Vec<Check>> {
    let table = distance_table(h)?;
    let Some(ed) = table.diameter() else {
        return Ok(vec![
            Check::inapplicable("diameter.distinct", "not exactly connected"),
            Check::inapplicable("diameter.log", "not exactly connected"),
        ]);
    };
    let u = UnifiedMatrix::build(h);
    let m = u.matrix();
    let spectrum = eigen_spectrum(m)?;
    let distinct = spectrum.distinct_count();
    let mut checks = vec![Check::at_most(
        "diameter.distinct",
        ed,
        distinct.saturating_sub(1),
    )];

    let g = AssociatedGraph::build(h)?;
    if g.components().len() != 1 {
        checks.push(Check::inapplicable(
            "diameter.log",
            "associated graph disconnected",
        ));
        return Ok(checks);
    }
    let tol = group_tolerance(m, TAU_NUM, TAU_GROUP);
    let e = eigen_decomposition(m)?;
    let lambda1 = e.values[0];
    let second = e.values[1..].iter().map(|x| x.abs()).fold(0.0, f64::max);
    if second <= tol {
        checks.push(Check::inapplicable(
            "diameter.log",
            "second eigenvalue is zero",
        ));
        return Ok(checks);
    }
    if lambda1 - second <= tol {
        checks.push(Check::inapplicable(
            "diameter.log",
            "largest modulus is not simple",
        ));
        return Ok(checks);
    }
    let omega = e.vectors[0]
        .iter()
        .map(|x| x.abs())
        .fold(f64::INFINITY, f64::min);
    let w2 = omega * omega;
    let value = ((1.0 - w2) / w2).ln() / (lambda1 / second).ln();
    let nearest = value.round();
    let bound = if (value - nearest).abs() < 1e-9 {
        nearest
    } else {
        value.ceil()
    };
    checks.push(
        Check::at_most_approx("diameter.log", ed as f64, bound, 0.0).with_note(format!(
            "omega={} ratio-exponent={}",
            fmt_f64(omega),
            fmt_f64(value)
        )),
    );
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn enumerated_walks_match_powers() {
        let g = h(5, &[&[0, 1, 2], &[0, 1, 2], &[2, 3], &[1, 3, 4]]);
        assert!(check_walk_counts(&g, 4).unwrap().iter().all(Check::passed));
        let w = enumerate_exact_walks(&h(3, &[&[0, 1, 2]]), 2).unwrap();
        assert_eq!(w[0][0], BigInt::from(1));
    }

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
    }

    fn part(v: &[usize]) -> Part {
        Part::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn walks_in_single_edge() {
        let g = h(3, &[&[0, 1, 2]]);
        assert_eq!(
            count_exact_walks(&g, &part(&[0]), &part(&[1, 2]), 3).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            count_exact_walks(&g, &part(&[0]), &part(&[0]), 0).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            count_exact_walks(&g, &part(&[0]), &part(&[1]), 0).unwrap(),
            BigInt::from(0)
        );
        assert!(count_exact_walks(&h(1, &[&[0]]), &part(&[0]), &part(&[0]), 1).is_err());
    }

    #[test]
    fn distances() {
        let g = h(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(exact_distance(&g, 0, 1).unwrap(), Distance::Finite(1));
        assert_eq!(exact_distance(&g, 0, 3).unwrap(), Distance::Unreachable);
        assert_eq!(exact_diameter(&g).unwrap_err(), Error::NotExactlyConnected);
        assert_eq!(exact_diameter(&cycle(5)).unwrap(), 2);
        assert_eq!(exact_diameter(&h(1, &[])).unwrap(), 0);
    }

    #[test]
    fn triangle_inequality_fails() {
        let g = h(
            9,
            &[
                &[0, 1],
                &[1, 2, 3],
                &[2, 4],
                &[0, 5],
                &[5, 6],
                &[6, 7],
                &[7, 8],
                &[8, 4],
            ],
        );
        let t = distance_table(&g).unwrap();
        assert_eq!(t.get(0, 2), Distance::Finite(2));
        assert_eq!(t.get(2, 4), Distance::Finite(1));
        assert_eq!(t.get(0, 4), Distance::Finite(5));
        assert!(t.triangle_violations().contains(&(0, 2, 4)));
    }

    #[test]
    fn girths() {
        assert_eq!(exact_girth(&cycle(5)).unwrap(), Some(5));
        assert_eq!(odd_exact_girth(&cycle(6)).unwrap(), None);
        assert_eq!(exact_girth(&cycle(6)).unwrap(), Some(6));
        assert_eq!(exact_girth(&h(3, &[&[0, 1, 2]])).unwrap(), None);
    }

    #[test]
    fn weighted_e_triangle() {
        let g = h(4, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 3], &[2, 3]]);
        let cycles = enumerate_exact_cycles(&g, 3).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].parts, vec![part(&[2]), part(&[3]), part(&[0, 1])]);
        assert_eq!(cycles[0].weight, 2);
        assert_eq!(cycles[0].to_string(), "{2} {3} {0,1} {2} x2");
    }

    #[test]
    fn c2_c3_examples() {
        let tri = cycle(3);
        assert!(check_c2_c3(&tri)
            .unwrap()
            .iter()
            .all(|c| c.status == Status::Holds));
        assert_eq!(e_triangle_count(&tri).unwrap(), 1);
        assert!(check_c2_c3(&h(3, &[&[0, 1, 2]]))
            .unwrap()
            .iter()
            .all(Check::passed));
        assert!(check_c2_c3(&h(2, &[&[0], &[0, 1]])).is_err());
    }

    #[test]
    fn odd_cycle_equivalence() {
        for g in [h(3, &[&[0, 1, 2]]), cycle(3), cycle(4)] {
            assert!(odd_cycle_free_characterization(&g).unwrap()[0].passed());
        }
    }

    #[test]
    fn diameter_bounds() {
        let k4 =
            Hypergraph::new(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| vec![i, j]))).unwrap();
        let checks = diameter_eigen_bounds(&k4).unwrap();
        assert_eq!(checks[0].status, Status::Tight);
        assert_eq!(checks[1].status, Status::Tight);
        let p4 = h(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let checks = diameter_eigen_bounds(&p4).unwrap();
        assert_eq!(checks[0].status, Status::Tight);
        assert_eq!(checks[1].status, Status::Inapplicable);
    }
}
