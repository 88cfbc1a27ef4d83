//! Seeded random hypergraphs for property checks and corpus runs.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::constructions::PartSizeProfile;
use crate::hypergraph::Hypergraph;

/// Shape limits for generated hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_rank: usize,
    /// Edges are rejected once the index set would exceed this size.
    pub max_index: usize,
    /// Upper limit on edge draws; `None` means `n + 3`.
    pub max_edges: Option<usize>,
    pub loops: bool,
    pub multiple_edges: bool,
}

impl RandomSpec {
    /// Simple hypergraphs of rank at most 4 on up to `max_vertices` vertices.
    pub fn simple(max_vertices: usize) -> Self {
        RandomSpec {
            min_vertices: 1,
            max_vertices: max_vertices.max(1),
            max_rank: 4,
            max_index: 14,
            max_edges: None,
            loops: false,
            multiple_edges: false,
        }
    }
}

/// Draws one hypergraph from `rng`.
pub fn random_hypergraph<R: rand::Rng>(spec: &RandomSpec, rng: &mut R) -> Hypergraph {
    let top = spec.max_vertices.max(1);
    let n = rng.random_range(spec.min_vertices.clamp(1, top)..=top);
    let mut h = Hypergraph::edgeless(n);
    let min_rank = if spec.loops { 1 } else { 2 };
    let max_rank = spec.max_rank.min(n);
    if max_rank < min_rank {
        return h;
    }
    let attempts = rng.random_range(1..=spec.max_edges.unwrap_or(n + 3).max(1));
    let mut vertices: Vec<usize> = (0..n).collect();
    for _ in 0..attempts {
        let r = rng.random_range(min_rank..=max_rank);
        vertices.shuffle(rng);
        let edge = &vertices[..r];
        if !spec.multiple_edges
            && h.distinct_edges()
                .any(|e| e.len() == r && edge.iter().all(|&v| e.contains(v)))
        {
            continue;
        }
        let candidate = h
            .with_edge(edge.iter().copied())
            .expect("vertices drawn from range");
        if candidate.edge_index().len() <= spec.max_index {
            h = candidate;
        }
    }
    h
}

/// `count` hypergraphs from a xoshiro256++ stream seeded with `seed`.
///
/// ```
/// use unispec::random::{corpus, RandomSpec};
///
/// let a = corpus(5, &RandomSpec::simple(6), 7);
/// assert_eq!(a, corpus(5, &RandomSpec::simple(6), 7));
/// ```
pub fn corpus(count: usize, spec: &RandomSpec, seed: u64) -> Vec<Hypergraph> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    (0..count)
        .map(|_| random_hypergraph(spec, &mut rng))
        .collect()
}

/// A unified cycle on 3 to 6 edges or a unified path on 2 to 4 edges, part
/// sizes in `1..=3`; cycles always have a part of size above one.
pub fn random_profile<R: rand::Rng>(rng: &mut R) -> PartSizeProfile {
    if rng.random_bool(0.5) {
        let n = rng.random_range(3..=6);
        let mut sizes: Vec<usize> = (0..n).map(|_| rng.random_range(1..=3)).collect();
        if sizes.iter().all(|&s| s == 1) {
            let i = rng.random_range(0..n);
            sizes[i] = rng.random_range(2..=3);
        }
        PartSizeProfile::cycle(sizes).expect("sizes are in range")
    } else {
        let n = rng.random_range(2..=4);
        let sizes = (0..=n).map(|_| rng.random_range(1..=3)).collect();
        PartSizeProfile::path(sizes).expect("sizes are in range")
    }
}

/// `count` profiles from a xoshiro256++ stream seeded with `seed`.
pub fn profile_corpus(count: usize, seed: u64) -> Vec<PartSizeProfile> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    (0..count).map(|_| random_profile(&mut rng)).collect()
}
