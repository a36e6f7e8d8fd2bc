//! Seeded random instances.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64(seed)`. A random tree
//! on `n >= 3` vertices is the Prüfer sequence of `n - 2` values drawn with
//! `gen_range(0..n)`, decoded by repeatedly joining the smallest current
//! leaf to the next sequence entry. Same seed, same tree.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::LeafRoot;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Tree with the given Prüfer sequence; entries must be `< n` and
/// `sequence.len() == n - 2`.
pub fn prufer_decode(n: usize, sequence: &[usize]) -> Result<Graph> {
    match n {
        0 => return Err(Error::Parameter("a tree needs at least one vertex".into())),
        1 | 2 => {
            if !sequence.is_empty() {
                return Err(Error::Parameter("Prüfer sequence too long".into()));
            }
            return Ok(Graph::path(n));
        }
        _ => {}
    }
    if sequence.len() != n - 2 {
        return Err(Error::Parameter(format!(
            "Prüfer sequence for {n} vertices has length {}, expected {}",
            sequence.len(),
            n - 2
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in sequence {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::from_edges(n, &edges)
}

pub fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    let len = n.saturating_sub(2);
    let sequence: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &sequence)
}

/// Uniformly random labeled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree_with(n, &mut rng_from_seed(seed))
}

/// Random `k`-leaf root: a random tree on `inner` vertices, each vertex
/// receiving up to `max_pendants` extra leaves, with the final leaves
/// mapped to graph vertices in shuffled order.
pub fn random_leaf_root_with<R: Rng>(
    inner: usize,
    max_pendants: usize,
    k: usize,
    rng: &mut R,
) -> Result<LeafRoot> {
    let base = random_tree_with(inner, rng)?;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut n = inner;
    for v in 0..inner {
        for _ in 0..rng.gen_range(0..=max_pendants) {
            edges.push((v, n));
            n += 1;
        }
    }
    let tree = Graph::from_edges(n, &edges)?;
    let mut leaves: Vec<usize> = (0..n).filter(|&v| tree.degree(v) <= 1).collect();
    leaves.shuffle(rng);
    LeafRoot::new(tree, k, leaves)
}

pub fn random_leaf_root(
    inner: usize,
    max_pendants: usize,
    k: usize,
    seed: u64,
) -> Result<LeafRoot> {
    random_leaf_root_with(inner, max_pendants, k, &mut rng_from_seed(seed))
}
