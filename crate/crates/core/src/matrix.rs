//! The unified matrix `U(H)` and the associated graph `G_H`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hypergraph::{two_partitions, EdgeIndexSet, Hypergraph, Part};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Position of the first asymmetric entry, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.unsigned_abs() as f64)
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }

    pub fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Exact integer power of a square matrix.
    pub fn pow_big(&self, exp: u32) -> Vec<Vec<BigInt>> {
        assert!(self.is_square());
        let n = self.rows;
        let base = self.to_bigint_rows();
        let mut acc: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        for _ in 0..exp {
            acc = mul_big(&acc, &base);
        }
        acc
    }
}

pub(crate) fn mul_big(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    let mut out = vec![vec![BigInt::from(0); m]; n];
    for i in 0..n {
        for t in 0..inner {
            if a[i][t] == BigInt::from(0) {
                continue;
            }
            for j in 0..m {
                if b[t][j] != BigInt::from(0) {
                    out[i][j] += &a[i][t] * &b[t][j];
                }
            }
        }
    }
    out
}

/// A matrix whose rows and columns carry part labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix {
    pub row_labels: Vec<Part>,
    pub col_labels: Vec<Part>,
    pub matrix: IntMatrix,
}

/// The unified matrix of a hypergraph, indexed by its edge index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnifiedMatrix {
    index: EdgeIndexSet,
    matrix: IntMatrix,
}

impl UnifiedMatrix {
    /// Builds `U(H)`.
    ///
    /// Loops put their multiplicity on the diagonal; two parts forming a
    /// 2-partition of an edge `e` get `m(e)` off the diagonal. Every other
    /// entry is zero.
    pub fn build(h: &Hypergraph) -> Self {
        let index = h.edge_index();
        let mut matrix = IntMatrix::zeros(index.len(), index.len());
        for e in h.edges() {
            let m = i64::from(e.multiplicity);
            if e.is_loop() {
                let i = index.position(&e.part).expect("singletons are indexed");
                matrix.set(i, i, m);
                continue;
            }
            for (a, b) in two_partitions(&e.part) {
                let i = index.position(&a).expect("parts are indexed");
                let j = index.position(&b).expect("parts are indexed");
                matrix.set(i, j, m);
                matrix.set(j, i, m);
            }
        }
        UnifiedMatrix { index, matrix }
    }

    pub fn index(&self) -> &EdgeIndexSet {
        &self.index
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The e-index.
    pub fn order(&self) -> usize {
        self.index.len()
    }

    pub fn entry(&self, a: &Part, b: &Part) -> Result<i64> {
        Ok(self
            .matrix
            .get(self.index.require(a)?, self.index.require(b)?))
    }

    /// `M(rows | cols)`: deletes the listed rows and columns.
    pub fn delete(&self, rows: &[Part], cols: &[Part]) -> Result<LabeledMatrix> {
        let drop_rows = self.positions(rows)?;
        let drop_cols = self.positions(cols)?;
        let keep_rows: Vec<usize> = (0..self.order())
            .filter(|i| !drop_rows.contains(i))
            .collect();
        let keep_cols: Vec<usize> = (0..self.order())
            .filter(|i| !drop_cols.contains(i))
            .collect();
        Ok(LabeledMatrix {
            row_labels: keep_rows
                .iter()
                .map(|&i| self.index.get(i).clone())
                .collect(),
            col_labels: keep_cols
                .iter()
                .map(|&i| self.index.get(i).clone())
                .collect(),
            matrix: self.matrix.select(&keep_rows, &keep_cols),
        })
    }

    /// `M(D | D)` as a bare matrix.
    pub fn principal_delete(&self, parts: &[Part]) -> Result<IntMatrix> {
        Ok(self.delete(parts, parts)?.matrix)
    }

    fn positions(&self, parts: &[Part]) -> Result<BTreeSet<usize>> {
        parts.iter().map(|p| self.index.require(p)).collect()
    }

    /// Nonzero entries as `row<TAB>col<TAB>value` lines, row-major.
    pub fn to_triplets(&self) -> String {
        let mut out = String::new();
        for i in 0..self.order() {
            for j in 0..self.order() {
                let v = self.matrix.get(i, j);
                if v != 0 {
                    let _ = writeln!(out, "{}\t{}\t{}", self.index.get(i), self.index.get(j), v);
                }
            }
        }
        out
    }

    /// Dense CSV with a header row of part labels.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("part");
        for p in self.index.parts() {
            let _ = write!(out, ",\"{p}\"");
        }
        out.push('\n');
        for i in 0..self.order() {
            let _ = write!(out, "\"{}\"", self.index.get(i));
            for v in self.matrix.row(i) {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }
}

/// The loopless multigraph on `I(H)` whose adjacency matrix is `U(H)`.
#[derive(Clone, Debug)]
pub struct AssociatedGraph {
    index: EdgeIndexSet,
    /// `(i, j, multiplicity)` with `i < j`, sorted.
    edges: Vec<(usize, usize, u32)>,
    adjacency: Vec<Vec<(usize, u32)>>,
}

impl AssociatedGraph {
    pub fn build(h: &Hypergraph) -> Result<Self> {
        if h.has_loops() {
            return Err(Error::HasLoops("the associated graph"));
        }
        Ok(Self::from_unified(&UnifiedMatrix::build(h)))
    }

    pub(crate) fn from_unified(u: &UnifiedMatrix) -> Self {
        let k = u.order();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); k];
        for i in 0..k {
            for j in i + 1..k {
                let c = u.matrix.get(i, j);
                if c > 0 {
                    let c = c as u32;
                    edges.push((i, j, c));
                    adjacency[i].push((j, c));
                    adjacency[j].push((i, c));
                }
            }
        }
        AssociatedGraph {
            index: u.index.clone(),
            edges,
            adjacency,
        }
    }

    pub fn index(&self) -> &EdgeIndexSet {
        &self.index
    }

    pub fn vertex_count(&self) -> usize {
        self.index.len()
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    /// Neighbours of `i` with edge multiplicities, in increasing order.
    pub fn neighbors(&self, i: usize) -> &[(usize, u32)] {
        &self.adjacency[i]
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.adjacency[i]
            .iter()
            .find(|&&(w, _)| w == j)
            .map_or(0, |&(_, c)| c)
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.adjacency[i].iter().map(|&(_, c)| u64::from(c)).sum()
    }

    /// Weighted adjacency matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let k = self.vertex_count();
        let mut m = IntMatrix::zeros(k, k);
        for &(i, j, c) in &self.edges {
            m.set(i, j, i64::from(c));
            m.set(j, i, i64::from(c));
        }
        m
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self.vertex_count(), |i| {
            self.adjacency[i].iter().map(|&(w, _)| w)
        })
    }

    /// Breadth-first distances from `source`; `None` when unreachable.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &(y, _) in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

/// Connected components of the graph on `0..n` with the given neighbour
/// function.
pub(crate) fn components_of<F, I>(n: usize, neighbors: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Part {
        Part::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn loopless_graph_matrix_is_adjacency() {
        let h = Hypergraph::new(4, [vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let u = UnifiedMatrix::build(&h);
        let expected = IntMatrix::from_rows(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 0],
        ]);
        assert_eq!(u.matrix(), &expected);
    }

    #[test]
    fn single_loop() {
        let h = Hypergraph::new(1, [vec![0]]).unwrap();
        let u = UnifiedMatrix::build(&h);
        assert_eq!(u.matrix(), &IntMatrix::from_rows(&[vec![1]]));
    }

    #[test]
    fn included_edge_part_has_zero_diagonal() {
        let h = Hypergraph::new(3, [vec![0, 1, 2], vec![1, 2]]).unwrap();
        let u = UnifiedMatrix::build(&h);
        assert_eq!(u.entry(&p(&[1, 2]), &p(&[1, 2])).unwrap(), 0);
        assert_eq!(u.entry(&p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(u.entry(&p(&[0]), &p(&[1, 2])).unwrap(), 1);
    }

    #[test]
    fn associated_graph_of_a_three_edge() {
        let h = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        let g = AssociatedGraph::build(&h).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edges().len(), 3);
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(g.adjacency_matrix(), *UnifiedMatrix::build(&h).matrix());
    }

    #[test]
    fn associated_graph_rejects_loops() {
        let h = Hypergraph::new(2, [vec![0], vec![0, 1]]).unwrap();
        assert_eq!(
            AssociatedGraph::build(&h).unwrap_err(),
            Error::HasLoops("the associated graph")
        );
    }

    #[test]
    fn delete_rows_and_columns() {
        let h = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        let u = UnifiedMatrix::build(&h);
        let same = u.delete(&[], &[]).unwrap();
        assert_eq!(&same.matrix, u.matrix());
        let all_but_one: Vec<Part> = u.index().parts()[1..].to_vec();
        let one = u.delete(&all_but_one, &all_but_one).unwrap();
        assert_eq!(one.matrix.rows(), 1);
        assert_eq!(one.row_labels, vec![p(&[0])]);
        assert!(matches!(
            u.delete(&[p(&[0, 5])], &[]),
            Err(Error::UnknownPart(_))
        ));
        let rect = u.delete(&[p(&[0])], &[]).unwrap();
        assert_eq!((rect.matrix.rows(), rect.matrix.cols()), (5, 6));
    }

    #[test]
    fn triplet_export() {
        let h = Hypergraph::new(2, [vec![0, 1], vec![0, 1]]).unwrap();
        let u = UnifiedMatrix::build(&h);
        assert_eq!(u.to_triplets(), "{0}\t{1}\t2\n{1}\t{0}\t2\n");
        assert!(u.to_csv().starts_with("part,\"{0}\",\"{1}\"\n"));
    }

    #[test]
    fn matrix_power() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let sq = m.pow_big(2);
        assert_eq!(sq[0][0], BigInt::from(1));
        assert_eq!(sq[0][1], BigInt::from(0));
        assert_eq!(m.pow_big(0)[1][1], BigInt::from(1));
    }
}
