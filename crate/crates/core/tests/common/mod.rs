//! Brute-force oracles built straight from the definitions, sharing no code
//! with the library beyond the hypergraph container.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use unispec::Hypergraph;

pub type Set = Vec<usize>;

pub fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
}

pub fn edges_with_mult(h: &Hypergraph) -> Vec<(Set, u32)> {
    h.edges()
        .iter()
        .map(|e| (e.part.vertices().to_vec(), e.multiplicity))
        .collect()
}

/// Singletons plus every non-empty proper subset of every edge of size >= 2,
/// ordered by size then lexicographically.
pub fn parts(h: &Hypergraph) -> Vec<Set> {
    let mut out: BTreeSet<(usize, Set)> = (0..h.n()).map(|v| (1, vec![v])).collect();
    for (e, _) in edges_with_mult(h) {
        if e.len() < 2 {
            continue;
        }
        for mask in 1..(1u32 << e.len()) - 1 {
            let s: Set = (0..e.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| e[i])
                .collect();
            out.insert((s.len(), s));
        }
    }
    out.into_iter().map(|(_, s)| s).collect()
}

fn union_if_disjoint(a: &Set, b: &Set) -> Option<Set> {
    if a.iter().any(|x| b.contains(x)) {
        return None;
    }
    let mut u: Set = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    Some(u)
}

/// The unified matrix straight from its entrywise definition.
pub fn unified(h: &Hypergraph) -> (Vec<Set>, Vec<Vec<i64>>) {
    let ps = parts(h);
    let edges = edges_with_mult(h);
    let mult = |s: &Set| {
        edges
            .iter()
            .find(|(e, _)| e == s)
            .map_or(0, |&(_, m)| i64::from(m))
    };
    let k = ps.len();
    let mut m = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = if i == j {
                if ps[i].len() == 1 {
                    mult(&ps[i])
                } else {
                    0
                }
            } else {
                union_if_disjoint(&ps[i], &ps[j]).map_or(0, |u| mult(&u))
            };
        }
    }
    (ps, m)
}

/// Walks of length `len` between parts, counted by extending sequences one
/// part at a time and weighting each step by the edge multiplicity.
pub fn walk_counts(h: &Hypergraph, len: u32) -> Vec<Vec<u64>> {
    let (ps, m) = unified(h);
    let k = ps.len();
    let mut out = vec![vec![0u64; k]; k];
    fn go(m: &[Vec<i64>], at: usize, left: u32, w: u64, row: &mut [u64]) {
        if left == 0 {
            row[at] += w;
            return;
        }
        for (next, &c) in m[at].iter().enumerate() {
            if c > 0 && next != at {
                go(m, next, left - 1, w * c as u64, row);
            }
        }
    }
    for (s, row) in out.iter_mut().enumerate() {
        go(&m, s, len, 1, row);
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut total = BigInt::from(0);
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][j]) * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_bareiss(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k] == BigInt::from(0) {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != BigInt::from(0)) else {
                return BigInt::from(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    prev * sign
}

/// `c_i = (-1)^i Σ` of the `i × i` principal minors, highest power first.
pub fn charpoly_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let k = m.len();
    let mut c = vec![BigInt::from(0); k + 1];
    c[0] = BigInt::from(1);
    for mask in 1u64..1 << k {
        let idx: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| m[i][j]).collect())
            .collect();
        let d = det_bareiss(&sub);
        if idx.len().is_multiple_of(2) {
            c[idx.len()] += d;
        } else {
            c[idx.len()] -= d;
        }
    }
    c
}

/// Edge list of the loopless graph with adjacency `m`, one entry per
/// parallel copy.
pub fn graph_edges(m: &[Vec<i64>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate().skip(i + 1) {
            for _ in 0..x {
                out.push((i, j));
            }
        }
    }
    out
}

/// Shape of an edge subset: `Some((covered, cycles, single_edges))` when it
/// is a disjoint union of single edges and cycles of length >= 3.
fn elementary_shape(
    k: usize,
    edges: &[(usize, usize)],
    mask: u64,
) -> Option<(usize, usize, usize)> {
    let mut deg = vec![0u32; k];
    let mut adj = vec![Vec::new(); k];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            deg[a] += 1;
            deg[b] += 1;
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    if deg.iter().any(|&d| d > 2) {
        return None;
    }
    let mut seen = vec![false; k];
    let (mut cycles, mut singles, mut covered) = (0, 0, 0);
    for s in 0..k {
        if seen[s] || deg[s] == 0 {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &t in &adj[comp[i]] {
                if !seen[t] {
                    seen[t] = true;
                    comp.push(t);
                }
            }
            i += 1;
        }
        covered += comp.len();
        let edge_count: u32 = comp.iter().map(|&v| deg[v]).sum::<u32>() / 2;
        if comp.len() == 2 && edge_count == 1 {
            singles += 1;
        } else if comp.len() >= 3 && comp.iter().all(|&v| deg[v] == 2) {
            cycles += 1;
        } else {
            return None;
        }
    }
    Some((covered, cycles, singles))
}

/// Per-size counts and coefficient terms `Σ (-1)^(c+e) 2^c` over elementary
/// subgraphs found by scanning every edge subset.
pub fn elementary_by_subsets(m: &[Vec<i64>]) -> (Vec<u64>, Vec<BigInt>) {
    let k = m.len();
    let edges = graph_edges(m);
    assert!(edges.len() <= 24, "edge-subset oracle limited to 24 edges");
    let mut counts = vec![0u64; k + 1];
    let mut terms = vec![BigInt::from(0); k + 1];
    for mask in 1u64..1 << edges.len() {
        if let Some((q, c, e)) = elementary_shape(k, &edges, mask) {
            counts[q] += 1;
            let t = BigInt::from(1u64 << c);
            if (c + e) % 2 == 0 {
                terms[q] += t;
            } else {
                terms[q] -= t;
            }
        }
    }
    (counts, terms)
}

/// Cycle counts by length over edge subsets forming one connected cycle.
pub fn cycles_by_subsets(m: &[Vec<i64>]) -> Vec<u64> {
    let k = m.len();
    let edges = graph_edges(m);
    assert!(edges.len() <= 24, "edge-subset oracle limited to 24 edges");
    let mut out = vec![0u64; k + 1];
    for mask in 1u64..1 << edges.len() {
        if let Some((q, 1, 0)) = elementary_shape(k, &edges, mask) {
            out[q] += 1;
        }
    }
    out
}

/// All-pairs shortest path lengths in the graph with adjacency `m`.
pub fn floyd(m: &[Vec<i64>]) -> Vec<Vec<Option<usize>>> {
    let k = m.len();
    let mut d: Vec<Vec<Option<usize>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        Some(0)
                    } else if m[i][j] > 0 {
                        Some(1)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    for via in 0..k {
        for i in 0..k {
            for j in 0..k {
                if let (Some(a), Some(b)) = (d[i][via], d[via][j]) {
                    if d[i][j].is_none_or(|x| a + b < x) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Colorings by exhaustive product enumeration: least `c` with some
/// assignment `0..c` per vertex accepted by `ok`.
fn least_colors(n: usize, ok: impl Fn(&[usize]) -> bool) -> usize {
    for c in 1..=n {
        let mut col = vec![0usize; n];
        loop {
            if ok(&col) {
                return c;
            }
            let mut i = 0;
            while i < n && col[i] == c - 1 {
                col[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            col[i] += 1;
        }
    }
    n
}

pub fn weak_chromatic(h: &Hypergraph) -> usize {
    let edges: Vec<Set> = edges_with_mult(h)
        .into_iter()
        .map(|(e, _)| e)
        .filter(|e| e.len() >= 2)
        .collect();
    least_colors(h.n(), |col| {
        edges.iter().all(|e| e.iter().any(|&v| col[v] != col[e[0]]))
    })
}

pub fn strong_chromatic(h: &Hypergraph) -> usize {
    let edges: Vec<Set> = edges_with_mult(h).into_iter().map(|(e, _)| e).collect();
    least_colors(h.n(), |col| {
        edges.iter().all(|e| {
            e.iter()
                .enumerate()
                .all(|(i, &a)| e[i + 1..].iter().all(|&b| col[a] != col[b]))
        })
    })
}

pub fn independence(h: &Hypergraph) -> usize {
    let edges: Vec<Set> = edges_with_mult(h).into_iter().map(|(e, _)| e).collect();
    (0u32..1 << h.n())
        .filter(|w| edges.iter().all(|e| !e.iter().all(|&v| w >> v & 1 == 1)))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn complete_clique(h: &Hypergraph) -> usize {
    let edges: BTreeSet<Set> = edges_with_mult(h).into_iter().map(|(e, _)| e).collect();
    (1u32..1 << h.n())
        .filter(|&w| {
            let vs: Set = (0..h.n()).filter(|v| w >> v & 1 == 1).collect();
            (1u32..1 << vs.len()).all(|sub| {
                let s: Set = (0..vs.len())
                    .filter(|i| sub >> i & 1 == 1)
                    .map(|i| vs[i])
                    .collect();
                edges.contains(&s)
            })
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// The worked determinant fixture: a 4-cycle of 2-edges beside one 3-edge.
pub fn square_and_triple() -> Hypergraph {
    hg(7, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[4, 5, 6]])
}

/// The worked matrix fixture with vertices numbered from zero.
pub fn mixed_multigraph() -> Hypergraph {
    hg(
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
    )
}

pub fn complete_graph(n: usize) -> Hypergraph {
    let edges: Vec<Vec<usize>> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| vec![a, b]))
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Hypergraph {
    Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
}

/// Small named fixtures covering loops, multiple, included and large edges.
pub fn named_fixtures() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("square-and-triple", square_and_triple()),
        ("mixed-multigraph", mixed_multigraph()),
        ("triangle", complete_graph(3)),
        ("k4", complete_graph(4)),
        ("c4", cycle_graph(4)),
        ("c5", cycle_graph(5)),
        ("single-3-edge", hg(3, &[&[0, 1, 2]])),
        ("single-4-edge", hg(4, &[&[0, 1, 2, 3]])),
        ("shared-vertex", hg(5, &[&[0, 1, 2], &[2, 3, 4]])),
        ("included", hg(4, &[&[0, 1], &[0, 1, 2], &[1, 2, 3]])),
        ("double", hg(3, &[&[0, 1], &[0, 1], &[1, 2]])),
        ("edgeless", Hypergraph::edgeless(4)),
    ]
}
