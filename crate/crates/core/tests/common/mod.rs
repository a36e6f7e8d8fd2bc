#![allow(dead_code)]

use std::collections::HashSet;

use leafbox::random::{random_tree_with, rng_from_seed};
use leafbox::rep::{BoxRep, Interval};
use leafbox::Graph;
use rand::Rng;

/// Interval recognition by exhaustive search over endpoint sequences.
///
/// A sequence of `2n` events (each vertex opens, later closes) realizes `g`
/// iff two vertices are adjacent exactly when each opens before the other
/// closes. Opening `v` is legal iff every currently open vertex is a
/// neighbor and no closed vertex is; closing `v` is legal iff all its
/// neighbors have opened. Dead states are memoized.
pub fn brute_force_is_interval(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16, "brute force is for small graphs");
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let mut dead = HashSet::new();
    search(n, &nbr, 0, 0, &mut dead)
}

fn search(n: usize, nbr: &[u32], opened: u32, closed: u32, dead: &mut HashSet<(u32, u32)>) -> bool {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    if closed == full {
        return true;
    }
    if dead.contains(&(opened, closed)) {
        return false;
    }
    let open_now = opened & !closed;
    for v in 0..n {
        let bit = 1u32 << v;
        if opened & bit == 0 {
            if open_now & !nbr[v] == 0
                && closed & nbr[v] == 0
                && search(n, nbr, opened | bit, closed, dead)
            {
                return true;
            }
        } else if closed & bit == 0
            && nbr[v] & !opened == 0
            && search(n, nbr, opened, closed | bit, dead)
        {
            return true;
        }
    }
    dead.insert((opened, closed));
    false
}

/// Parses the stored catalog: `n:u-v u-v ...` per line.
pub fn load_catalog() -> Vec<Graph> {
    let text = include_str!("../data/connected_graphs_upto6.txt");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let (n, rest) = line.split_once(':').expect("n:edges");
            let edges: Vec<(usize, usize)> = rest
                .split_whitespace()
                .map(|e| {
                    let (u, v) = e.split_once('-').unwrap();
                    (u.parse().unwrap(), v.parse().unwrap())
                })
                .collect();
            Graph::from_edges(n.parse().unwrap(), &edges).unwrap()
        })
        .collect()
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Exact box representation of any graph with one axis per non-edge: the
/// two endpoints of the non-edge get `[0,0]` and `[2,2]`, everyone else
/// `[0,2]`. A single all-`[0,0]` axis when the graph is complete.
pub fn non_edge_box_rep(g: &Graph) -> BoxRep<i64> {
    let n = g.n();
    let mut axes: Vec<Vec<Interval<i64>>> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let mut axis = vec![Interval::new(0, 2).unwrap(); n];
                axis[u] = Interval::point(0);
                axis[v] = Interval::point(2);
                axes.push(axis);
            }
        }
    }
    if axes.is_empty() {
        axes.push(vec![Interval::point(0); n]);
    }
    let boxes = (0..n)
        .map(|v| axes.iter().map(|a| a[v]).collect())
        .collect();
    BoxRep::new(axes.len(), boxes).unwrap()
}

/// Clones every vertex into `1..=max_copies` true twins (pairwise adjacent,
/// same outside neighbors). Returns the graph and each new vertex's origin.
pub fn plant_twins<R: Rng>(base: &Graph, max_copies: usize, rng: &mut R) -> (Graph, Vec<usize>) {
    let mut origin = Vec::new();
    for v in 0..base.n() {
        for _ in 0..rng.gen_range(1..=max_copies) {
            origin.push(v);
        }
    }
    let n = origin.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if origin[a] == origin[b] || base.has_edge(origin[a], origin[b]) {
                edges.push((a, b));
            }
        }
    }
    (Graph::from_edges(n, &edges).unwrap(), origin)
}

/// Seeded tree corpus: tree `i` uses seed `i`, with `n` drawn from
/// `min_n..=max_n` by the same generator.
pub fn tree_corpus(count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    (0..count as u64)
        .map(|seed| {
            let mut rng = rng_from_seed(seed);
            let n = rng.gen_range(min_n..=max_n);
            random_tree_with(n, &mut rng).unwrap()
        })
        .collect()
}

/// Straight-line re-evaluation of the `w` recurrence in machine integers.
pub fn w_reference(i: u32) -> u128 {
    fn choose2(x: u128) -> u128 {
        if x < 2 {
            0
        } else {
            x * (x - 1) / 2
        }
    }
    let mut table = vec![0u128, 1, 3];
    for j in 3..=i as u128 {
        let w_jm2 = table[(j - 2) as usize];
        table.push(2 * (j - 1) + 1 + (choose2(j - 1) * 4 * (w_jm2 - 1) + 1));
    }
    table[i as usize]
}

pub fn f_reference(k: u32) -> u128 {
    2 * k as u128 * (w_reference(k) - 1) + 1
}
