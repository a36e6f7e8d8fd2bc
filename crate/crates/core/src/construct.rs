//! Box representations of tree powers and leaf powers.
//!
//! For a rooted tree `T` and `k >= 1`, `T^k` is the intersection of `k + 1`
//! interval graphs:
//!
//! * the depth graph, `u -> [depth(u), depth(u) + k]`;
//! * for each `0 <= i < k`, the layer graph
//!   `u -> [s(p^i(u)), t(p^(k-1-i)(u))]`, where `p^j` is the `j`-th ancestor
//!   and `s`/`t` are the leaf spans of [`RootedTree`].
//!
//! Stacking these as axes gives a `(k + 1)`-box representation of `T^k`.
//! A `k`-leaf power reduces to a tree power of the leaf root with its leaves
//! pruned, which gives `k - 1` axes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, CliqueMapping, Graph};
use crate::rep::{BoxRep, Interval, IntervalRep, RepFamily};
use crate::scalar::{Endpoint, IntEndpoint};
use crate::tree::RootedTree;

/// Layer interval graph `i` for the `k`-th power.
pub fn build_layer_rep<T: IntEndpoint>(
    rt: &RootedTree,
    k: usize,
    i: usize,
) -> Result<IntervalRep<T>> {
    if rt.n() < 3 {
        return Err(Error::Parameter(
            "layer intervals need a tree with at least 3 vertices".into(),
        ));
    }
    if i >= k {
        return Err(Error::LayerOutOfRange { i, k });
    }
    let intervals = (0..rt.n())
        .map(|u| {
            let lo = rt.span_s(rt.ancestor_at(u, i));
            let hi = rt.span_t(rt.ancestor_at(u, k - 1 - i));
            // the two ancestors are comparable, so their spans nest
            assert!(
                lo <= hi,
                "layer {i} interval of vertex {u} is empty: [{lo}, {hi}]"
            );
            Ok(Interval::new(T::from_index(lo)?, T::from_index(hi)?).expect("checked above"))
        })
        .collect::<Result<_>>()?;
    Ok(IntervalRep::new(RepFamily::Layer(i), intervals))
}

/// Depth interval graph for the `k`-th power.
pub fn build_depth_rep<T: IntEndpoint>(rt: &RootedTree, k: usize) -> Result<IntervalRep<T>> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let intervals = (0..rt.n())
        .map(|u| {
            let d = rt.depth(u);
            Ok(Interval::new(T::from_index(d)?, T::from_index(d + k)?).expect("k >= 1"))
        })
        .collect::<Result<_>>()?;
    Ok(IntervalRep::new(RepFamily::Depth, intervals))
}

/// All `k + 1` coordinates: depth first, then layers `0..k`.
pub fn tree_power_coordinates<T: IntEndpoint>(
    rt: &RootedTree,
    k: usize,
) -> Result<Vec<IntervalRep<T>>> {
    let mut coords = Vec::with_capacity(k + 1);
    coords.push(build_depth_rep(rt, k)?);
    for i in 0..k {
        coords.push(build_layer_rep(rt, k, i)?);
    }
    Ok(coords)
}

/// `(k + 1)`-box representation of `tree^k`.
///
/// Trees on at most two vertices have a complete `k`-th power; they get a
/// one-dimensional representation with every interval `[0, 0]`.
pub fn build_box_rep<T: IntEndpoint>(
    tree: &Graph,
    k: usize,
    root: Option<usize>,
) -> Result<BoxRep<T>> {
    let rt = RootedTree::build(tree, root)?;
    build_box_rep_rooted(&rt, k)
}

pub fn build_box_rep_rooted<T: IntEndpoint>(rt: &RootedTree, k: usize) -> Result<BoxRep<T>> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if rt.n() <= 2 {
        return Ok(complete_rep(rt.n(), 1));
    }
    BoxRep::from_coordinates(&tree_power_coordinates(rt, k)?)
}

fn complete_rep<T: IntEndpoint>(n: usize, dimension: usize) -> BoxRep<T> {
    let zero = Interval::point(T::zero());
    BoxRep::new(dimension, vec![vec![zero; dimension]; n]).expect("dimension >= 1")
}

/// Gives every vertex of `G` the box of its critical clique, turning a
/// representation of `CC(G)` into one of `G`.
pub fn lift_representation<T: Endpoint>(
    rep: &BoxRep<T>,
    mapping: &CliqueMapping,
) -> Result<BoxRep<T>> {
    if rep.len() != mapping.clique_count() {
        return Err(Error::SizeMismatch {
            expected: mapping.clique_count(),
            found: rep.len(),
        });
    }
    let boxes = mapping
        .class_of
        .iter()
        .map(|&c| {
            rep.boxes().get(c).cloned().ok_or(Error::VertexOutOfRange {
                vertex: c,
                n: rep.len(),
            })
        })
        .collect::<Result<_>>()?;
    BoxRep::new(rep.dimension(), boxes)
}

/// A `k`-leaf root: a tree whose leaves stand for the vertices of a graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "LeafRootJson", into = "LeafRootJson")]
pub struct LeafRoot {
    tree: Graph,
    k: usize,
    leaves: Vec<usize>,
}

/// Wire form: `{"tree": <graph>, "k": 3, "leaves": [..]}` where
/// `leaves[v]` is the tree leaf standing for graph vertex `v`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeafRootJson {
    pub tree: Graph,
    pub k: usize,
    pub leaves: Vec<usize>,
}

impl LeafRoot {
    /// `leaves[v]` is the tree leaf of graph vertex `v`; every leaf of the
    /// tree must appear exactly once.
    pub fn new(tree: Graph, k: usize, leaves: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidLeafRoot(format!(
                "k must be at least 2, got {k}"
            )));
        }
        if !tree.is_tree() {
            return Err(Error::InvalidLeafRoot(
                "underlying graph is not a tree".into(),
            ));
        }
        let n = tree.n();
        let mut seen = vec![false; n];
        for &l in &leaves {
            if l >= n {
                return Err(Error::VertexOutOfRange { vertex: l, n });
            }
            if tree.degree(l) > 1 {
                return Err(Error::InvalidLeafRoot(format!("vertex {l} is not a leaf")));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(Error::InvalidLeafRoot(format!("leaf {l} mapped twice")));
            }
        }
        if let Some(l) = (0..n).find(|&v| tree.degree(v) <= 1 && !seen[v]) {
            return Err(Error::InvalidLeafRoot(format!("leaf {l} is not mapped")));
        }
        Ok(LeafRoot { tree, k, leaves })
    }

    /// Maps the leaves in increasing index order to `0, 1, ...`.
    pub fn from_tree(tree: Graph, k: usize) -> Result<Self> {
        let leaves = (0..tree.n()).filter(|&v| tree.degree(v) <= 1).collect();
        Self::new(tree, k, leaves)
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `leaves()[v]` is the leaf of graph vertex `v`.
    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn vertex_count(&self) -> usize {
        self.leaves.len()
    }
}

impl TryFrom<LeafRootJson> for LeafRoot {
    type Error = Error;

    fn try_from(json: LeafRootJson) -> Result<Self> {
        LeafRoot::new(json.tree, json.k, json.leaves)
    }
}

impl From<LeafRoot> for LeafRootJson {
    fn from(lr: LeafRoot) -> Self {
        LeafRootJson {
            tree: lr.tree,
            k: lr.k,
            leaves: lr.leaves,
        }
    }
}

/// The `k`-leaf power: graph vertices are adjacent iff their leaves are at
/// tree distance at most `k`.
pub fn build_graph_from_leaf_root(lr: &LeafRoot) -> Graph {
    let tree = &lr.tree;
    let mut vertex_of = vec![usize::MAX; tree.n()];
    for (v, &l) in lr.leaves.iter().enumerate() {
        vertex_of[l] = v;
    }
    let adj = lr
        .leaves
        .iter()
        .map(|&l| {
            tree.bfs_distances(l, Some(lr.k))
                .iter()
                .enumerate()
                .filter(|&(x, d)| x != l && d.is_some() && vertex_of[x] != usize::MAX)
                .map(|(x, _)| vertex_of[x])
                .collect()
        })
        .collect();
    let g = Graph::from_adjacency(adj);
    match tree.labels() {
        Some(labels) => g
            .with_labels(lr.leaves.iter().map(|&l| labels[l].clone()).collect())
            .expect("one label per leaf"),
        None => g,
    }
}

/// `(k - 1)`-box representation of the `k`-leaf power (one axis for
/// `k = 2`).
///
/// Each vertex is anchored at the neighbor of its leaf. With the leaves
/// pruned, two leaves are at distance `d + 2` where `d` is the distance of
/// their anchors, so the leaf power is the `(k - 2)`-th power of the pruned
/// tree pulled back through the anchors. For `k = 2` it is a disjoint union
/// of cliques, one per anchor, laid out as distinct points.
pub fn build_leaf_power_box_rep<T: IntEndpoint>(lr: &LeafRoot) -> Result<BoxRep<T>> {
    let k = lr.k;
    let tree = &lr.tree;
    let dimension = (k - 1).max(1);
    if tree.n() <= 2 {
        // one or two leaves at distance <= 1 < k
        return Ok(complete_rep(lr.vertex_count(), dimension));
    }
    let anchors: Vec<usize> = lr.leaves.iter().map(|&l| tree.neighbors(l)[0]).collect();

    if k == 2 {
        let mut distinct = anchors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let boxes = anchors
            .iter()
            .map(|a| {
                let pos = distinct.binary_search(a).expect("anchor listed");
                Ok(vec![Interval::point(T::from_index(pos)?)])
            })
            .collect::<Result<_>>()?;
        return BoxRep::new(1, boxes);
    }

    let inner: Vec<usize> = (0..tree.n()).filter(|&v| tree.degree(v) > 1).collect();
    let (pruned, _) = induced_subgraph(tree, &inner)?;
    let mut pruned_index = vec![usize::MAX; tree.n()];
    for (i, &v) in inner.iter().enumerate() {
        pruned_index[v] = i;
    }
    let pruned_rep: BoxRep<T> = build_box_rep(&pruned.without_labels(), k - 2, None)?;
    let pruned_rep = pruned_rep.padded_to(dimension);
    let boxes = anchors
        .iter()
        .map(|&a| pruned_rep.get(pruned_index[a]).to_vec())
        .collect();
    BoxRep::new(dimension, boxes)
}
