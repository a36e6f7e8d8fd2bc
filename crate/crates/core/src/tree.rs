//! Rooted trees with DFS leaf ordering and leaf spans.
//!
//! The leaves `l_1, ..., l_m` are numbered (1-based) in the order a
//! depth-first traversal from the root meets them, visiting children in
//! increasing vertex index. For every vertex `u`, `span(u) = (s(u), t(u))`
//! is the smallest and largest index of a leaf below `u`; the leaves below
//! `u` occupy exactly that contiguous range.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    leaf_order: Vec<usize>,
    span_s: Vec<usize>,
    span_t: Vec<usize>,
}

impl RootedTree {
    /// Roots `tree` at `root`, or at its smallest-index non-leaf vertex.
    ///
    /// Trees on one or two vertices have no non-leaf vertex; they are rooted
    /// at vertex 0 unless a root is given.
    pub fn build(tree: &Graph, root: Option<usize>) -> Result<Self> {
        check_tree(tree)?;
        let n = tree.n();
        if let Some(r) = root {
            if r >= n {
                return Err(Error::VertexOutOfRange { vertex: r, n });
            }
        }
        let root = if n <= 2 {
            root.unwrap_or(0)
        } else {
            match root {
                Some(r) if tree.degree(r) < 2 => return Err(Error::LeafRoot(r)),
                Some(r) => r,
                None => (0..n)
                    .find(|&v| tree.degree(v) >= 2)
                    .expect("n >= 3 tree has an inner vertex"),
            }
        };

        let mut parent = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut preorder = Vec::with_capacity(n);
        parent[root] = root;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            preorder.push(u);
            for &v in tree.neighbors(u) {
                if v != parent[u] {
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    children[u].push(v);
                }
            }
            // pop order must be ascending
            stack.extend(children[u].iter().rev());
        }

        let leaf_order: Vec<usize> = preorder
            .iter()
            .copied()
            .filter(|&u| children[u].is_empty())
            .collect();
        let mut span_s = vec![usize::MAX; n];
        let mut span_t = vec![0; n];
        for (i, &leaf) in leaf_order.iter().enumerate() {
            span_s[leaf] = i + 1;
            span_t[leaf] = i + 1;
        }
        for &u in preorder.iter().rev() {
            if u != root {
                let p = parent[u];
                span_s[p] = span_s[p].min(span_s[u]);
                span_t[p] = span_t[p].max(span_t[u]);
            }
        }

        Ok(RootedTree {
            graph: tree.clone(),
            root,
            parent,
            children,
            depth,
            leaf_order,
            span_s,
            span_t,
        })
    }

    /// Builds from a parent array with `parent[root] == root`.
    pub fn from_parents(parent: &[usize], root: usize) -> Result<Self> {
        let n = parent.len();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        if parent[root] != root {
            return Err(Error::NotATree(format!(
                "parent of root {root} must be itself, found {}",
                parent[root]
            )));
        }
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for (v, &p) in parent.iter().enumerate() {
            if v == root {
                continue;
            }
            if p == v {
                return Err(Error::NotATree(format!("vertex {v} is a second root")));
            }
            edges.push((v, p));
        }
        let g = Graph::from_edges(n, &edges)?;
        Self::build(&g, Some(root))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, u: usize) -> usize {
        self.parent[u]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub fn children(&self, u: usize) -> &[usize] {
        &self.children[u]
    }

    /// `d_T(root, u)`.
    pub fn depth(&self, u: usize) -> usize {
        self.depth[u]
    }

    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn is_leaf(&self, u: usize) -> bool {
        self.children[u].is_empty()
    }

    /// Leaves in DFS order; `leaf_order()[i - 1]` is `l_i`.
    pub fn leaf_order(&self) -> &[usize] {
        &self.leaf_order
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_order.len()
    }

    /// `(s(u), t(u))`, 1-based leaf indices.
    pub fn span(&self, u: usize) -> (usize, usize) {
        (self.span_s[u], self.span_t[u])
    }

    pub fn span_s(&self, u: usize) -> usize {
        self.span_s[u]
    }

    pub fn span_t(&self, u: usize) -> usize {
        self.span_t[u]
    }

    /// `p^i(u)`; the walk stays at the root once it gets there.
    pub fn ancestor_at(&self, u: usize, i: usize) -> usize {
        let mut v = u;
        for _ in 0..i.min(self.depth[u]) {
            v = self.parent[v];
        }
        v
    }

    /// Whether `a` lies on the root path of `d` (`a ⪯ d`); reflexive.
    pub fn is_ancestor(&self, a: usize, d: usize) -> bool {
        self.depth[a] <= self.depth[d] && self.ancestor_at(d, self.depth[d] - self.depth[a]) == a
    }

    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut a, mut b) = (u, v);
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        a = self.ancestor_at(a, self.depth[a] - self.depth[b]);
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
        }
        a
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        let x = self.lca(u, v);
        self.depth[u] + self.depth[v] - 2 * self.depth[x]
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            n: self.n(),
            parent: self.parent.clone(),
            root: self.root,
        }
    }
}

fn check_tree(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::NotATree("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    if g.edge_count() != g.n() - 1 {
        return Err(Error::NotATree(format!(
            "graph has a cycle ({} edges on {} vertices)",
            g.edge_count(),
            g.n()
        )));
    }
    Ok(())
}

/// Wire form: `{"n": 3, "parent": [1, 1, 1], "root": 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub parent: Vec<usize>,
    pub root: usize,
}

impl TryFrom<&TreeJson> for RootedTree {
    type Error = Error;

    fn try_from(json: &TreeJson) -> Result<Self> {
        if json.parent.len() != json.n {
            return Err(Error::SizeMismatch {
                expected: json.n,
                found: json.parent.len(),
            });
        }
        RootedTree::from_parents(&json.parent, json.root)
    }
}
