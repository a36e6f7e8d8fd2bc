//! Independent checks for representations and graph classes.
//!
//! Nothing here depends on how a representation was built: intersection
//! graphs are computed pair by pair from the endpoints, and graph classes
//! are decided from the graph alone. Negative answers carry a witness that
//! can be re-checked with [`check_chordless_cycle`] or
//! [`check_asteroidal_triple`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rep::{BoxRep, IntervalRep};
use crate::scalar::Endpoint;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            ok: true,
            witness: None,
        }
    }

    pub fn pass_with(witness: Witness) -> Self {
        Verdict {
            ok: true,
            witness: Some(witness),
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            ok: false,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `(u, v)` is an edge on exactly one side. `overlaps[c]` says whether
    /// the two boxes meet along axis `c`.
    PairMismatch {
        u: usize,
        v: usize,
        in_graph: bool,
        overlaps: Vec<bool>,
    },
    /// Induced cycle of length at least 4, in cyclic order.
    ChordlessCycle { cycle: Vec<usize> },
    /// Perfect elimination ordering: each vertex is simplicial among the
    /// vertices after it.
    EliminationOrdering { order: Vec<usize> },
    /// `paths[i]` joins the two other members of `triple` and avoids the
    /// closed neighborhood of `triple[i]`.
    AsteroidalTriple {
        triple: [usize; 3],
        paths: [Vec<usize>; 3],
    },
    /// The embedding disagrees with the graph on `(u, v)`.
    SteinerViolation {
        u: usize,
        v: usize,
        distance: Option<usize>,
        adjacent: bool,
    },
}

impl Witness {
    /// Vertices the witness talks about, for display.
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Witness::PairMismatch { u, v, .. } | Witness::SteinerViolation { u, v, .. } => {
                vec![*u, *v]
            }
            Witness::ChordlessCycle { cycle } => cycle.clone(),
            Witness::EliminationOrdering { order } => order.clone(),
            Witness::AsteroidalTriple { triple, .. } => triple.to_vec(),
        }
    }
}

/// `u ~ v` iff their intervals share a point.
pub fn interval_intersection_graph<T: Endpoint>(rep: &IntervalRep<T>) -> Graph {
    let n = rep.len();
    let adj = (0..n)
        .map(|u| {
            let iu = rep.get(u);
            (0..n)
                .filter(|&v| v != u && iu.overlaps(&rep.get(v)))
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// `u ~ v` iff their boxes meet on every axis.
pub fn box_intersection_graph<T: Endpoint>(rep: &BoxRep<T>) -> Graph {
    let n = rep.len();
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && rep.boxes_meet(u, v)).collect())
        .collect();
    Graph::from_adjacency(adj)
}

/// `ok` iff the box intersection graph of `rep` is exactly `g`; otherwise
/// the lexicographically first disagreeing pair.
pub fn verify_representation<T: Endpoint>(g: &Graph, rep: &BoxRep<T>) -> Result<Verdict> {
    if g.n() != rep.len() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: rep.len(),
        });
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let in_graph = g.has_edge(u, v);
            if in_graph != rep.boxes_meet(u, v) {
                let overlaps = rep
                    .get(u)
                    .iter()
                    .zip(rep.get(v))
                    .map(|(a, b)| a.overlaps(b))
                    .collect();
                return Ok(Verdict::fail(Witness::PairMismatch {
                    u,
                    v,
                    in_graph,
                    overlaps,
                }));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Maximum cardinality search visit order; ties go to the smallest index.
/// The reverse of this order is a perfect elimination ordering iff the
/// graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    }
    order
}

/// First vertex of `order` (an elimination order) whose later neighbors are
/// not a clique, with two non-adjacent later neighbors.
fn elimination_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| position[u] > position[v])
            .collect();
        let Some(&first) = later.iter().min_by_key(|&&u| position[u]) else {
            continue;
        };
        if let Some(&x) = later.iter().find(|&&x| x != first && !g.has_edge(first, x)) {
            return Some((v, first, x));
        }
    }
    None
}

/// Chordless cycle through `v` entering at `x` and leaving at `y`, where
/// `x` and `y` are non-adjacent neighbors of `v`.
fn cycle_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let mut allowed = vec![true; g.n()];
    allowed[v] = false;
    for &u in g.neighbors(v) {
        if u != x && u != y {
            allowed[u] = false;
        }
    }
    let path = g.shortest_path(x, y, &allowed)?;
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

fn find_chordless_cycle(g: &Graph, hint: Option<(usize, usize, usize)>) -> Option<Vec<usize>> {
    if let Some((v, x, y)) = hint {
        if let Some(c) = cycle_through(g, v, x, y) {
            return Some(c);
        }
    }
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !g.has_edge(x, y) {
                    if let Some(c) = cycle_through(g, v, x, y) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Chordality by maximum cardinality search. Passes with a perfect
/// elimination ordering, fails with a chordless cycle.
pub fn is_chordal(g: &Graph) -> Verdict {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    match elimination_violation(g, &order) {
        None => Verdict::pass_with(Witness::EliminationOrdering { order }),
        Some(hint) => {
            let cycle = find_chordless_cycle(g, Some(hint))
                .expect("a graph without a perfect elimination ordering has a chordless cycle");
            Verdict::fail(Witness::ChordlessCycle { cycle })
        }
    }
}

/// Lexicographically first asteroidal triple, with its three avoiding
/// paths.
///
/// For each vertex `u`, the components of `G - N[u]` are computed once;
/// `{a, b, c}` (pairwise non-adjacent) is asteroidal iff each member's
/// removal leaves the other two in one component.
pub fn find_asteroidal_triple(g: &Graph) -> Option<Witness> {
    let n = g.n();
    let removal_components: Vec<Vec<Option<usize>>> =
        (0..n).map(|u| g.components(&avoiding(g, u))).collect();
    let together = |u: usize, a: usize, b: usize| {
        let comp = &removal_components[u];
        comp[a].is_some() && comp[a] == comp[b]
    };
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if together(a, b, c) && together(b, a, c) && together(c, a, b) {
                    let path = |x: usize, y: usize, z: usize| {
                        g.shortest_path(y, z, &avoiding(g, x))
                            .expect("co-component vertices are joined")
                    };
                    return Some(Witness::AsteroidalTriple {
                        triple: [a, b, c],
                        paths: [path(a, b, c), path(b, a, c), path(c, a, b)],
                    });
                }
            }
        }
    }
    None
}

// mask of vertices outside N[u]
fn avoiding(g: &Graph, u: usize) -> Vec<bool> {
    let mut allowed = vec![true; g.n()];
    allowed[u] = false;
    for &v in g.neighbors(u) {
        allowed[v] = false;
    }
    allowed
}

/// Interval graphs are exactly the chordal, asteroidal-triple-free graphs.
pub fn is_interval_graph(g: &Graph) -> Verdict {
    let chordal = is_chordal(g);
    if !chordal.ok {
        return chordal;
    }
    match find_asteroidal_triple(g) {
        Some(at) => Verdict::fail(at),
        None => Verdict::pass(),
    }
}

/// Outcome of checking that a list of interval graphs intersects to `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobertsReport {
    pub verdict: Verdict,
    /// Per representation: is its interval graph a supergraph of `g`?
    pub supergraph: Vec<bool>,
}

pub fn roberts_check<T: Endpoint>(g: &Graph, reps: &[IntervalRep<T>]) -> Result<RobertsReport> {
    if reps.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    for rep in reps {
        if rep.len() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                found: rep.len(),
            });
        }
    }
    let supergraph = reps
        .iter()
        .map(|rep| g.edges().all(|(u, v)| rep.get(u).overlaps(&rep.get(v))))
        .collect();
    let stacked = BoxRep::from_coordinates(reps)?;
    Ok(RobertsReport {
        verdict: verify_representation(g, &stacked)?,
        supergraph,
    })
}

/// Checks that `embed` is a `k`-Steiner embedding of `g` into the tree
/// `host`: `u ~ v` iff `d(embed[u], embed[v]) <= k`.
pub fn steiner_check(host: &Graph, embed: &[usize], g: &Graph, k: usize) -> Result<Verdict> {
    if !host.is_tree() {
        return Err(Error::NotATree("Steiner host must be a tree".into()));
    }
    if embed.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: embed.len(),
        });
    }
    let mut owner = vec![usize::MAX; host.n()];
    for (v, &x) in embed.iter().enumerate() {
        if x >= host.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: host.n(),
            });
        }
        if owner[x] != usize::MAX {
            return Err(Error::NotInjective(owner[x], v));
        }
        owner[x] = v;
    }
    for u in 0..g.n() {
        let dist = host.bfs_distances(embed[u], None);
        for v in u + 1..g.n() {
            let d = dist[embed[v]];
            let adjacent = g.has_edge(u, v);
            if adjacent != d.is_some_and(|d| d <= k) {
                return Ok(Verdict::fail(Witness::SteinerViolation {
                    u,
                    v,
                    distance: d,
                    adjacent,
                }));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Is `cycle` an induced cycle of `g` with at least 4 vertices?
pub fn check_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 4 {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    if !cycle.iter().all(|&v| v < g.n() && seen.insert(v)) {
        return false;
    }
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Literal check of the asteroidal triple definition against the supplied
/// paths.
pub fn check_asteroidal_triple(g: &Graph, triple: [usize; 3], paths: &[Vec<usize>; 3]) -> bool {
    let [a, b, c] = triple;
    if [a, b, c].iter().any(|&v| v >= g.n()) || a == b || b == c || a == c {
        return false;
    }
    if g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c) {
        return false;
    }
    let ends = [(b, c), (a, c), (a, b)];
    triple
        .iter()
        .zip(paths)
        .zip(ends)
        .all(|((&x, path), (y, z))| {
            let joins = match (path.first(), path.last()) {
                (Some(&p), Some(&q)) => (p, q) == (y, z) || (p, q) == (z, y),
                _ => false,
            };
            let walk = path.windows(2).all(|w| g.has_edge(w[0], w[1]));
            let avoids = path.iter().all(|&p| p != x && !g.has_edge(p, x));
            joins && walk && avoids
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_box_rep;
    use crate::gadgets::build_sk;
    use crate::graph::{graphs_equal, intersect, power};
    use crate::rep::{Interval, RepFamily};

    fn iv(lo: i64, hi: i64) -> Interval<i64> {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn interval_graph_basics() {
        let same = IntervalRep::new(RepFamily::Other, vec![iv(0, 1); 4]);
        assert!(graphs_equal(&interval_intersection_graph(&same), &Graph::complete(4)).is_ok());
        let apart = IntervalRep::new(RepFamily::Other, vec![iv(0, 0), iv(1, 1), iv(2, 2)]);
        assert_eq!(interval_intersection_graph(&apart).edge_count(), 0);
        // depth rep of a-b-c rooted at b, k = 1
        let depth = IntervalRep::new(RepFamily::Depth, vec![iv(1, 2), iv(0, 1), iv(1, 2)]);
        assert!(graphs_equal(&interval_intersection_graph(&depth), &Graph::complete(3)).is_ok());
    }

    #[test]
    fn box_graph_is_intersection_of_axes() {
        let rep = build_box_rep::<i64>(&Graph::path(3), 1, Some(1)).unwrap();
        let direct = box_intersection_graph(&rep);
        assert!(graphs_equal(&direct, &Graph::path(3)).is_ok());
        let axes: Vec<Graph> = (0..rep.dimension())
            .map(|c| interval_intersection_graph(&rep.coordinate(c)))
            .collect();
        assert!(graphs_equal(&intersect(&axes).unwrap(), &direct).is_ok());

        let one = IntervalRep::new(RepFamily::Other, vec![iv(0, 1), iv(1, 2), iv(3, 3)]);
        assert!(graphs_equal(
            &box_intersection_graph(&one.clone().into_box_rep()),
            &interval_intersection_graph(&one)
        )
        .is_ok());
    }

    #[test]
    fn verify_cases() {
        let s2 = build_sk(2).unwrap();
        let sq = power(&s2, 2).unwrap();
        let rep = build_box_rep::<i64>(&s2, 2, None).unwrap();
        assert!(verify_representation(&sq, &rep).unwrap().ok);
        assert!(graphs_equal(&box_intersection_graph(&rep), &sq).is_ok());

        let bad = BoxRep::new(1, vec![vec![iv(0, 1)], vec![iv(1, 2)], vec![iv(3, 4)]]).unwrap();
        let v = verify_representation(&Graph::complete(3), &bad).unwrap();
        assert!(!v.ok);
        assert_eq!(
            v.witness,
            Some(Witness::PairMismatch {
                u: 0,
                v: 2,
                in_graph: true,
                overlaps: vec![false]
            })
        );

        let depth = IntervalRep::new(RepFamily::Depth, vec![iv(1, 2), iv(0, 1), iv(1, 2)]);
        let v = verify_representation(&Graph::path(3), &depth.into_box_rep()).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::PairMismatch {
                u: 0,
                v: 2,
                in_graph: false,
                overlaps: vec![true]
            })
        );
        assert!(verify_representation(&Graph::path(2), &bad).is_err());
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&Graph::path(6)).ok);
        let v = is_chordal(&Graph::cycle(4));
        assert!(!v.ok);
        let Some(Witness::ChordlessCycle { cycle }) = v.witness else {
            panic!()
        };
        assert_eq!(cycle.len(), 4);
        assert!(check_chordless_cycle(&Graph::cycle(4), &cycle));

        let s2 = build_sk(2).unwrap();
        let v = is_chordal(&power(&s2, 2).unwrap());
        assert!(matches!(
            v.witness,
            Some(Witness::EliminationOrdering { .. })
        ));
    }

    #[test]
    fn chordless_cycle_in_larger_graph() {
        // C_6 with one chord (0,3): two 4-cycles, neither has a chord
        let mut g = Graph::cycle(6);
        g.add_edge(0, 3).unwrap();
        let v = is_chordal(&g);
        let Some(Witness::ChordlessCycle { cycle }) = v.witness else {
            panic!()
        };
        assert!(check_chordless_cycle(&g, &cycle));
    }

    #[test]
    fn asteroidal_triples() {
        assert!(find_asteroidal_triple(&Graph::complete(3)).is_none());
        let c6 = Graph::cycle(6);
        let Some(Witness::AsteroidalTriple { triple, paths }) = find_asteroidal_triple(&c6) else {
            panic!("C_6 has an asteroidal triple")
        };
        assert_eq!(triple, [0, 2, 4]);
        assert!(check_asteroidal_triple(&c6, triple, &paths));

        let s2 = build_sk(2).unwrap();
        let sq = power(&s2, 2).unwrap();
        let Some(Witness::AsteroidalTriple { triple, paths }) = find_asteroidal_triple(&sq) else {
            panic!("(S_2)^2 has an asteroidal triple")
        };
        let names: Vec<String> = triple.iter().map(|&v| sq.label(v)).collect();
        assert_eq!(names, ["v_{2,1}", "v_{2,2}", "v_{2,3}"]);
        assert!(check_asteroidal_triple(&sq, triple, &paths));
    }

    #[test]
    fn interval_recognition() {
        assert!(is_interval_graph(&Graph::path(7)).ok);
        let v = is_interval_graph(&Graph::cycle(4));
        assert!(matches!(v.witness, Some(Witness::ChordlessCycle { .. })));
        let sq = power(&build_sk(2).unwrap(), 2).unwrap();
        let v = is_interval_graph(&sq);
        assert!(!v.ok);
        assert!(matches!(v.witness, Some(Witness::AsteroidalTriple { .. })));
    }

    #[test]
    fn roberts() {
        let s2 = build_sk(2).unwrap();
        let rt = crate::tree::RootedTree::build(&s2, None).unwrap();
        let coords = crate::construct::tree_power_coordinates::<i64>(&rt, 2).unwrap();
        let report = roberts_check(&power(&s2, 2).unwrap(), &coords).unwrap();
        assert!(report.verdict.ok);
        assert_eq!(report.supergraph, vec![true; 3]);

        let p = IntervalRep::new(RepFamily::Other, vec![iv(0, 1), iv(1, 2), iv(2, 3)]);
        assert!(roberts_check(&Graph::path(3), &[p]).unwrap().verdict.ok);

        let path4 = IntervalRep::new(
            RepFamily::Other,
            vec![iv(0, 1), iv(1, 2), iv(2, 3), iv(3, 4)],
        );
        let report = roberts_check(&Graph::cycle(4), &[path4]).unwrap();
        assert!(!report.verdict.ok);
        assert_eq!(report.supergraph, vec![false]);
        assert!(roberts_check::<i64>(&Graph::cycle(4), &[]).is_err());
    }

    #[test]
    fn steiner() {
        let k2 = Graph::complete(2);
        let v = steiner_check(&Graph::path(3), &[0, 2], &k2, 1).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::SteinerViolation {
                u: 0,
                v: 1,
                distance: Some(2),
                adjacent: true
            })
        );
        let star = Graph::from_edges(4, &[(3, 0), (3, 1), (3, 2)]).unwrap();
        assert!(
            steiner_check(&star, &[0, 1, 2], &Graph::complete(3), 2)
                .unwrap()
                .ok
        );
        assert_eq!(
            steiner_check(&star, &[0, 0, 2], &Graph::complete(3), 2).unwrap_err(),
            Error::NotInjective(0, 1)
        );
        assert!(steiner_check(&Graph::cycle(3), &[0], &Graph::new(1), 1).is_err());
    }

    #[test]
    fn witness_checkers_reject_bad_witnesses() {
        let c6 = Graph::cycle(6);
        assert!(!check_chordless_cycle(&c6, &[0, 1, 2]));
        assert!(!check_chordless_cycle(&Graph::complete(4), &[0, 1, 2, 3]));
        let paths = [vec![2, 3, 4], vec![0, 5, 4], vec![0, 1, 2]];
        assert!(check_asteroidal_triple(&c6, [0, 2, 4], &paths));
        let wrong = [vec![2, 1, 0, 5, 4], vec![0, 5, 4], vec![0, 1, 2]];
        assert!(!check_asteroidal_triple(&c6, [0, 2, 4], &wrong));
        assert!(!check_asteroidal_triple(&c6, [0, 1, 4], &paths));
    }

    #[test]
    fn float_and_rational_endpoints() {
        use num_rational::Ratio;
        let f = BoxRep::new(
            2,
            vec![
                vec![
                    Interval::new(0.0, 0.5).unwrap(),
                    Interval::new(0.0, 1.0).unwrap(),
                ],
                vec![
                    Interval::new(0.5, 1.0).unwrap(),
                    Interval::new(0.25, 0.75).unwrap(),
                ],
                vec![
                    Interval::new(0.75, 2.0).unwrap(),
                    Interval::new(0.0, 0.1).unwrap(),
                ],
            ],
        )
        .unwrap();
        let g = box_intersection_graph(&f);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(verify_representation(&Graph::path(2), &f).is_err());

        let r = |a: i64, b: i64| Ratio::new(a, b);
        let q = IntervalRep::new(
            RepFamily::Other,
            vec![
                Interval::new(r(0, 1), r(1, 3)).unwrap(),
                Interval::new(r(1, 3), r(2, 3)).unwrap(),
                Interval::new(r(2, 3) + r(1, 1000), r(1, 1)).unwrap(),
            ],
        );
        assert_eq!(
            interval_intersection_graph(&q).edges().collect::<Vec<_>>(),
            vec![(0, 1)]
        );
    }
}
