//! Simple undirected graphs on integer-indexed vertices, plus the graph
//! operations the rest of the crate is built on: powers, edge-set
//! intersection, induced subgraphs and the critical clique quotient.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph. Vertex identity is the index; labels are only
/// carried along for display.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct Graph {
    // sorted, deduplicated, symmetric, loop-free
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj, labels: None }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are in range")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("cycle edge is in range");
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from per-vertex neighbor lists that are already known
    /// to be symmetric and loop-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        check_vertex(u, n)?;
        check_vertex(v, n)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
        }
        if let Err(pos) = self.adj[v].binary_search(&u) {
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, otherwise the index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0, None).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() == self.n() - 1 && self.is_connected()
    }

    /// Breadth-first distances from `source`, optionally truncated at
    /// `limit`. Unreached vertices are `None`.
    pub fn bfs_distances(&self, source: usize, limit: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if limit.is_some_and(|l| du >= l) {
                continue;
            }
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest path from `from` to `to` through vertices with
    /// `allowed[v] == true`. Both endpoints must be allowed.
    pub fn shortest_path(&self, from: usize, to: usize, allowed: &[bool]) -> Option<Vec<usize>> {
        if !allowed[from] || !allowed[to] {
            return None;
        }
        let mut prev = vec![usize::MAX; self.n()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &v in &self.adj[u] {
                if allowed[v] && prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Connected component ids of the subgraph induced by the allowed
    /// vertices; `None` for removed vertices.
    pub fn components(&self, allowed: &[bool]) -> Vec<Option<usize>> {
        let mut comp = vec![None; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if !allowed[s] || comp[s].is_some() {
                continue;
            }
            comp[s] = Some(next);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if allowed[v] && comp[v].is_none() {
                        comp[v] = Some(next);
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Graphviz DOT text. Every vertex gets its own statement so isolated
    /// vertices survive a round trip.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            match &self.labels {
                Some(labels) => {
                    writeln!(out, "  {v} [label=\"{}\"];", escape_dot(&labels[v])).unwrap()
                }
                None => writeln!(out, "  {v};").unwrap(),
            }
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Parses the DOT subset written by [`Graph::to_dot`]: numeric node ids,
    /// optional `label` attributes and `--` edges.
    pub fn from_dot(text: &str) -> Result<Self> {
        let open = text
            .find('{')
            .ok_or_else(|| Error::Parse("missing '{' in DOT input".into()))?;
        let close = text
            .rfind('}')
            .ok_or_else(|| Error::Parse("missing '}' in DOT input".into()))?;
        let header = text[..open].trim();
        if !header.starts_with("graph") && !header.starts_with("strict graph") {
            return Err(Error::Parse(format!(
                "expected undirected graph, got '{header}'"
            )));
        }
        let mut n = 0usize;
        let mut edges = Vec::new();
        let mut labels: BTreeMap<usize, String> = BTreeMap::new();
        for stmt in split_statements(&text[open + 1..close]) {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            if stmt.contains("--") {
                let ids: Vec<usize> = stmt
                    .split("--")
                    .map(|p| parse_id(p.trim()))
                    .collect::<Result<_>>()?;
                for w in ids.windows(2) {
                    edges.push((w[0], w[1]));
                }
                n = n.max(ids.iter().max().map_or(0, |m| m + 1));
            } else {
                let (id_part, attrs) = match stmt.find('[') {
                    Some(pos) => (&stmt[..pos], Some(&stmt[pos..])),
                    None => (stmt, None),
                };
                let id = parse_id(id_part.trim())?;
                n = n.max(id + 1);
                if let Some(label) = attrs.and_then(parse_label_attr) {
                    labels.insert(id, label?);
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if labels.is_empty() {
            return Ok(g);
        }
        let labels = (0..n)
            .map(|v| labels.remove(&v).unwrap_or_else(|| v.to_string()))
            .collect();
        g.with_labels(labels)
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

// Splits on ';' and newlines outside quoted strings.
fn split_statements(body: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_quotes = false;
    let mut escaped = false;
    for c in body.chars() {
        if in_quotes {
            cur.push(c);
            if escaped {
                escaped = false;
            } else if c == '\\' {
                escaped = true;
            } else if c == '"' {
                in_quotes = false;
            }
            continue;
        }
        match c {
            '"' => {
                in_quotes = true;
                cur.push(c);
            }
            ';' | '\n' => out.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    out.push(cur);
    out
}

fn parse_id(s: &str) -> Result<usize> {
    let s = s.trim_matches('"');
    s.parse()
        .map_err(|_| Error::Parse(format!("expected numeric node id, got '{s}'")))
}

fn parse_label_attr(attrs: &str) -> Option<Result<String>> {
    let start = attrs.find("label")?;
    let rest = attrs[start + 5..]
        .trim_start()
        .strip_prefix('=')?
        .trim_start();
    let Some(rest) = rest.strip_prefix('"') else {
        let end = rest.find([',', ']', ' ']).unwrap_or(rest.len());
        return Some(Ok(rest[..end].to_string()));
    };
    let mut label = String::new();
    let mut chars = rest.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => match chars.next() {
                Some(e) => label.push(e),
                None => break,
            },
            '"' => return Some(Ok(label)),
            _ => label.push(c),
        }
    }
    Some(Err(Error::Parse("unterminated label string".into())))
}

/// Wire form: `{"n": 3, "edges": [[0,1],[1,2]], "labels": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels,
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        let edges: Vec<_> = json.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edges(json.n, &edges)?;
        match json.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

/// `G^k`: same vertex set, `u ~ v` iff `1 <= d(u, v) <= k`. Computed by a
/// depth-limited BFS from every vertex. Labels are kept.
pub fn power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let adj = (0..g.n())
        .map(|v| {
            g.bfs_distances(v, Some(k))
                .iter()
                .enumerate()
                .filter(|&(u, d)| u != v && d.is_some())
                .map(|(u, _)| u)
                .collect()
        })
        .collect();
    Ok(Graph {
        adj,
        labels: g.labels.clone(),
    })
}

/// Graph on the common vertex set whose edges are present in every input.
/// Labels come from the first graph.
pub fn intersect(gs: &[Graph]) -> Result<Graph> {
    let (first, rest) = gs.split_first().ok_or(Error::EmptyIntersection)?;
    for g in rest {
        if g.n() != first.n() {
            return Err(Error::SizeMismatch {
                expected: first.n(),
                found: g.n(),
            });
        }
    }
    let adj = (0..first.n())
        .map(|u| {
            first.adj[u]
                .iter()
                .copied()
                .filter(|&v| rest.iter().all(|g| g.has_edge(u, v)))
                .collect()
        })
        .collect();
    Ok(Graph {
        adj,
        labels: first.labels.clone(),
    })
}

/// Correspondence between the vertices of a graph and its critical cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueMapping {
    /// Critical clique index of each original vertex.
    pub class_of: Vec<usize>,
    /// Members of each critical clique, ascending.
    pub representatives: Vec<Vec<usize>>,
}

impl CliqueMapping {
    pub fn identity(n: usize) -> Self {
        CliqueMapping {
            class_of: (0..n).collect(),
            representatives: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn clique_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Critical clique graph `CC(G)`: vertices with equal closed neighborhoods
/// are merged, and two classes are adjacent iff their union is a clique.
/// Classes are numbered by their smallest member.
pub fn critical_clique_graph(g: &Graph) -> (Graph, CliqueMapping) {
    let mut by_nbhd: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(g.n());
    let mut representatives: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        let next = representatives.len();
        let class = *by_nbhd.entry(g.closed_neighborhood(v)).or_insert(next);
        if class == next {
            representatives.push(Vec::new());
        }
        representatives[class].push(v);
        class_of.push(class);
    }
    // members of one class share N[v], so one representative pair decides
    let adj = representatives
        .iter()
        .map(|members| {
            let mut list: Vec<usize> = g.adj[members[0]]
                .iter()
                .map(|&u| class_of[u])
                .filter(|&c| c != class_of[members[0]])
                .collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();
    let labels = representatives
        .iter()
        .map(|members| {
            let names: Vec<String> = members.iter().map(|&v| g.label(v)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let cc = Graph {
        adj,
        labels: Some(labels),
    };
    (
        cc,
        CliqueMapping {
            class_of,
            representatives,
        },
    )
}

/// Subgraph induced by `vertices`, renumbered in the given order. The second
/// component maps new indices to old ones.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut new_index = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        check_vertex(v, g.n())?;
        if new_index[v] != usize::MAX {
            return Err(Error::Parameter(format!("vertex {v} listed twice")));
        }
        new_index[v] = i;
    }
    let adj = vertices
        .iter()
        .map(|&v| {
            g.adj[v]
                .iter()
                .filter(|&&u| new_index[u] != usize::MAX)
                .map(|&u| new_index[u])
                .collect()
        })
        .collect();
    let labels = g
        .labels
        .as_ref()
        .map(|labels| vertices.iter().map(|&v| labels[v].clone()).collect());
    Ok((
        Graph::from_adjacency(adj).with_labels_opt(labels),
        vertices.to_vec(),
    ))
}

impl Graph {
    fn with_labels_opt(mut self, labels: Option<Vec<String>>) -> Self {
        self.labels = labels;
        self
    }
}

/// First point where two graphs differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphMismatch {
    VertexCount {
        left: usize,
        right: usize,
    },
    /// `(u, v)` with `u < v` is an edge of exactly one side.
    Edge {
        u: usize,
        v: usize,
        in_left: bool,
    },
}

/// `Ok` iff same vertex count and identical edge sets (labels ignored);
/// otherwise the lexicographically first differing pair.
pub fn graphs_equal(a: &Graph, b: &Graph) -> std::result::Result<(), GraphMismatch> {
    if a.n() != b.n() {
        return Err(GraphMismatch::VertexCount {
            left: a.n(),
            right: b.n(),
        });
    }
    for u in 0..a.n() {
        if a.adj[u] == b.adj[u] {
            continue;
        }
        // merge walk over the two sorted lists, only pairs with v > u
        let (mut i, mut j) = (0, 0);
        let (la, lb) = (&a.adj[u], &b.adj[u]);
        loop {
            let x = la.get(i).copied();
            let y = lb.get(j).copied();
            match (x, y) {
                (Some(x), Some(y)) if x == y => {
                    i += 1;
                    j += 1;
                }
                (Some(x), y) if y.is_none_or(|y| x < y) => {
                    if x > u {
                        return Err(GraphMismatch::Edge {
                            u,
                            v: x,
                            in_left: true,
                        });
                    }
                    i += 1;
                }
                (_, Some(y)) => {
                    if y > u {
                        return Err(GraphMismatch::Edge {
                            u,
                            v: y,
                            in_left: false,
                        });
                    }
                    j += 1;
                }
                _ => break,
            }
        }
    }
    Ok(())
}
