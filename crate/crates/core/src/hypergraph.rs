//! Hypergraphs with multiset edges, parts of edges, and the edge index set.
//!
//! A hypergraph here is a vertex count `n` (vertices are `0..n`) together
//! with a multiset of non-empty vertex subsets. The multiset is stored in
//! normalized form: one [`Edge`] per distinct underlying set, carrying its
//! multiplicity.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Default upper bound on edge cardinality. An edge of cardinality `r`
/// contributes `2^r - 2` parts to the edge index set.
pub const DEFAULT_MAX_RANK: usize = 20;

/// A non-empty set of vertices, stored sorted and deduplicated.
///
/// Parts are ordered by cardinality first and then lexicographically on the
/// sorted ids, which fixes the row order of every unified matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Part(Vec<VertexId>);

impl Part {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let set: BTreeSet<VertexId> = vertices.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyEdge);
        }
        Ok(Part(set.into_iter().collect()))
    }

    pub fn singleton(v: VertexId) -> Self {
        Part(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Part) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn is_proper_subset(&self, other: &Part) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn is_disjoint(&self, other: &Part) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Part) -> Part {
        let mut v: Vec<VertexId> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Part(v)
    }

    /// `self \ other`, or `None` when the difference is empty.
    pub fn difference(&self, other: &Part) -> Option<Part> {
        let v: Vec<VertexId> = self
            .0
            .iter()
            .copied()
            .filter(|x| !other.contains(*x))
            .collect();
        (!v.is_empty()).then_some(Part(v))
    }

    /// All non-empty proper subsets, in no particular order.
    pub fn proper_subsets(&self) -> Vec<Part> {
        let m = self.len();
        let full = (1u64 << m) - 1;
        (1..full).map(|mask| self.select(mask)).collect()
    }

    fn select(&self, mask: u64) -> Part {
        Part(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect(),
        )
    }

    pub(crate) fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Part {
        let mut v: Vec<VertexId> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        v.dedup();
        Part(v)
    }
}

impl Ord for Part {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All unordered 2-partitions `{S, e \ S}` of a vertex set. Each pair is
/// returned with its smaller part first. A loop has none.
pub fn two_partitions(e: &Part) -> Vec<(Part, Part)> {
    let m = e.len();
    if m < 2 {
        return Vec::new();
    }
    // Fixing the first vertex on one side enumerates each unordered pair once.
    let rest = m - 1;
    let full = (1u64 << m) - 1;
    (0..(1u64 << rest) - 1)
        .map(|mask| {
            let side = (mask << 1) | 1;
            let a = e.select(side);
            let b = e.select(full & !side);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// Number of 2-partitions of a set of the given cardinality.
pub fn two_partition_count(cardinality: usize) -> u64 {
    if cardinality < 2 {
        0
    } else {
        (1u64 << (cardinality - 1)) - 1
    }
}

/// An edge of a hypergraph: its vertex set and how many times it occurs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub part: Part,
    pub multiplicity: u32,
}

impl Edge {
    pub fn len(&self) -> usize {
        self.part.len()
    }

    pub fn is_empty(&self) -> bool {
        self.part.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.part.is_singleton()
    }
}

/// A finite hypergraph on vertices `0..n`.
///
/// Edges are kept sorted by [`Part`] order, one entry per distinct set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds a hypergraph from a list of edges; repeated edges accumulate
    /// multiplicity.
    ///
    /// ```
    /// use unispec::Hypergraph;
    ///
    /// let h = Hypergraph::new(3, [vec![0, 1, 2], vec![0, 1, 2], vec![1]]).unwrap();
    /// assert_eq!(h.edges().len(), 2);
    /// assert_eq!(h.vertex_degree(1).unwrap(), 3);
    /// ```
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = VertexId>,
    {
        Self::with_rank_limit(n, edges, DEFAULT_MAX_RANK)
    }

    pub fn with_rank_limit<I, E>(n: usize, edges: I, max_rank: usize) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = VertexId>,
    {
        Self::from_multiset(n, edges.into_iter().map(|e| (e, 1)), max_rank)
    }

    /// Builds a hypergraph from `(edge, multiplicity)` pairs.
    pub fn with_multiplicities<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, u32)>,
        E: IntoIterator<Item = VertexId>,
    {
        Self::from_multiset(n, edges, DEFAULT_MAX_RANK)
    }

    fn from_multiset<I, E>(n: usize, edges: I, max_rank: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (E, u32)>,
        E: IntoIterator<Item = VertexId>,
    {
        let mut acc: BTreeMap<Part, u32> = BTreeMap::new();
        for (e, m) in edges {
            if m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            let part = Part::new(e)?;
            if let Some(&v) = part.vertices().iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if part.len() > max_rank {
                return Err(Error::RankLimit {
                    rank: part.len(),
                    limit: max_rank,
                });
            }
            *acc.entry(part).or_insert(0) += m;
        }
        let edges = acc
            .into_iter()
            .map(|(part, multiplicity)| Edge { part, multiplicity })
            .collect();
        Ok(Hypergraph { n, edges })
    }

    pub fn edgeless(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distinct edges with multiplicities.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Size of the edge multiset.
    pub fn edge_count(&self) -> u64 {
        self.edges.iter().map(|e| u64::from(e.multiplicity)).sum()
    }

    /// The set `E*(H)` of distinct edges.
    pub fn distinct_edges(&self) -> impl Iterator<Item = &Part> {
        self.edges.iter().map(|e| &e.part)
    }

    pub fn multiplicity(&self, set: &Part) -> u32 {
        self.edges
            .binary_search_by(|e| e.part.cmp(set))
            .map(|i| self.edges[i].multiplicity)
            .unwrap_or(0)
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Number of edges containing `v`, counted with multiplicity.
    pub fn vertex_degree(&self, v: VertexId) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.part.contains(v))
            .map(|e| u64::from(e.multiplicity))
            .sum())
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut d = vec![0u64; self.n];
        for e in &self.edges {
            for &v in e.part.vertices() {
                d[v] += u64::from(e.multiplicity);
            }
        }
        d
    }

    /// `δ(H)`; zero for a hypergraph without vertices.
    pub fn min_degree(&self) -> u64 {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// `Δ(H)`.
    pub fn max_degree(&self) -> u64 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Unified degree of a part: the number of edges (with multiplicity)
    /// containing it.
    pub fn unified_degree(&self, part: &Part) -> Result<u64> {
        if !self.is_indexed_part(part) {
            return Err(Error::UnknownPart(part.clone()));
        }
        Ok(self.containing_count(part))
    }

    fn containing_count(&self, part: &Part) -> u64 {
        self.edges
            .iter()
            .filter(|e| part.is_subset(&e.part))
            .map(|e| u64::from(e.multiplicity))
            .sum()
    }

    fn is_indexed_part(&self, part: &Part) -> bool {
        if part.is_singleton() {
            return part.vertices()[0] < self.n;
        }
        self.edges.iter().any(|e| part.is_proper_subset(&e.part))
    }

    /// `δ*(H)`, the minimum unified degree over the edge index set.
    pub fn min_unified_degree(&self) -> u64 {
        self.edge_index()
            .parts()
            .iter()
            .map(|p| self.containing_count(p))
            .min()
            .unwrap_or(0)
    }

    /// Sum of unified degrees over the edge index set.
    pub fn unified_degree_sum(&self) -> u64 {
        self.edge_index()
            .parts()
            .iter()
            .map(|p| self.containing_count(p))
            .sum()
    }

    /// `∂(H)`: included edges of cardinality at least two, with multiplicity.
    pub fn included_edge_count(&self) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.len() >= 2 && self.is_included(&e.part))
            .map(|e| u64::from(e.multiplicity))
            .sum()
    }

    /// Whether some other distinct edge strictly contains `set`.
    pub fn is_included(&self, set: &Part) -> bool {
        self.edges.iter().any(|f| set.is_proper_subset(&f.part))
    }

    /// Whether any edge (loops included) is contained in another edge.
    pub fn has_included_edges(&self) -> bool {
        self.edges.iter().any(|e| self.is_included(&e.part))
    }

    pub fn rank(&self) -> usize {
        self.edges.iter().map(Edge::len).max().unwrap_or(0)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn has_multiple_edges(&self) -> bool {
        self.edges.iter().any(|e| e.multiplicity > 1)
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_multiple_edges()
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// A vertex in no edge of cardinality greater than two.
    pub fn is_g_vertex(&self, v: VertexId) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(!self.edges.iter().any(|e| e.len() > 2 && e.part.contains(v)))
    }

    /// The edge index set `I(H)` in canonical order.
    pub fn edge_index(&self) -> EdgeIndexSet {
        let mut set: BTreeSet<Part> = (0..self.n).map(Part::singleton).collect();
        for e in &self.edges {
            if e.len() >= 2 {
                set.extend(e.part.proper_subsets());
            }
        }
        EdgeIndexSet::from_sorted(set.into_iter().collect())
    }

    /// The subhypergraph induced by `keep`: the vertices of `keep` and every
    /// edge lying entirely inside it. Vertices are relabeled densely in
    /// increasing order; the returned map sends new ids to old ids.
    pub fn induced_subhypergraph(&self, keep: &[VertexId]) -> Result<(Hypergraph, Vec<VertexId>)> {
        for &v in keep {
            self.check_vertex(v)?;
        }
        let kept: BTreeSet<VertexId> = keep.iter().copied().collect();
        let old: Vec<VertexId> = kept.iter().copied().collect();
        let new_id: HashMap<VertexId, VertexId> =
            old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.part.vertices().iter().all(|v| kept.contains(v)))
            .map(|e| Edge {
                part: e.part.map(|v| new_id[&v]),
                multiplicity: e.multiplicity,
            })
            .collect::<Vec<_>>();
        let mut h = Hypergraph {
            n: old.len(),
            edges,
        };
        h.edges.sort_by(|a, b| a.part.cmp(&b.part));
        Ok((h, old))
    }

    /// `H \ T`: removes the vertices of `T` together with every edge that
    /// meets them, one vertex at a time. Returns the relabeling map as in
    /// [`Hypergraph::induced_subhypergraph`].
    pub fn delete_vertices(&self, remove: &[VertexId]) -> Result<(Hypergraph, Vec<VertexId>)> {
        for &v in remove {
            self.check_vertex(v)?;
        }
        let gone: BTreeSet<VertexId> = remove.iter().copied().collect();
        let keep: Vec<VertexId> = (0..self.n).filter(|v| !gone.contains(v)).collect();
        self.induced_subhypergraph(&keep)
    }

    /// Disjoint union; the vertices of the `i`-th operand are shifted past
    /// those of all earlier operands.
    pub fn disjoint_union(parts: &[&Hypergraph]) -> Hypergraph {
        let mut offset = 0;
        let mut edges = Vec::new();
        for h in parts {
            edges.extend(h.edges.iter().map(|e| Edge {
                part: e.part.map(|v| v + offset),
                multiplicity: e.multiplicity,
            }));
            offset += h.n;
        }
        edges.sort_by(|a, b| a.part.cmp(&b.part));
        Hypergraph { n: offset, edges }
    }

    /// Adds `count` fresh isolated vertices.
    pub fn with_extra_vertices(&self, count: usize) -> Hypergraph {
        Hypergraph {
            n: self.n + count,
            edges: self.edges.clone(),
        }
    }

    /// Adds one copy of `edge`.
    pub fn with_edge(&self, edge: impl IntoIterator<Item = VertexId>) -> Result<Hypergraph> {
        let list = self
            .edges
            .iter()
            .map(|e| (e.part.vertices().to_vec(), e.multiplicity))
            .chain(std::iter::once((edge.into_iter().collect::<Vec<_>>(), 1)));
        Hypergraph::from_multiset(self.n, list, usize::MAX)
    }

    /// The hypergraph with every vertex renamed through `f`, which must be a
    /// bijection onto `0..n`.
    pub(crate) fn relabeled(
        &self,
        n: usize,
        f: impl Fn(VertexId) -> VertexId,
    ) -> Result<Hypergraph> {
        let list = self
            .edges
            .iter()
            .map(|e| (e.part.map(&f).vertices().to_vec(), e.multiplicity));
        Hypergraph::from_multiset(n, list, usize::MAX)
    }
}

/// The edge index set `I(H)`: every singleton together with every part of
/// every 2-partition of every edge, in canonical [`Part`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndexSet {
    parts: Vec<Part>,
    position: HashMap<Part, usize>,
}

impl EdgeIndexSet {
    pub(crate) fn from_sorted(parts: Vec<Part>) -> Self {
        let position = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        EdgeIndexSet { parts, position }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// The e-index `k`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn position(&self, part: &Part) -> Option<usize> {
        self.position.get(part).copied()
    }

    pub fn require(&self, part: &Part) -> Result<usize> {
        self.position(part)
            .ok_or_else(|| Error::UnknownPart(part.clone()))
    }

    pub fn get(&self, i: usize) -> &Part {
        &self.parts[i]
    }
}
