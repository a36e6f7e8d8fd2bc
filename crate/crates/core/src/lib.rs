//! Box representations of tree powers and leaf powers.
//!
//! * [`graph`]: simple graphs, powers, intersections, critical cliques.
//! * [`tree`]: rooted trees with DFS leaf order and leaf spans.
//! * [`construct`]: the `(k + 1)`-box representation of `T^k`, the
//!   `(k - 1)`-box representation of a `k`-leaf power, and lifting through
//!   critical cliques.
//! * [`gadgets`]: the spider trees `S_k`, `T_k` and the tight leaf power.
//! * [`verify`]: intersection graphs, chordality, asteroidal triples,
//!   interval recognition and embedding checks, all independent of
//!   [`construct`].
//!
//! Representations are generic over the endpoint type; the aliases below
//! fix the common choices.

pub mod construct;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod random;
pub mod rep;
pub mod scalar;
pub mod svg;
pub mod tree;
pub mod verify;

pub use construct::{
    build_box_rep, build_depth_rep, build_graph_from_leaf_root, build_layer_rep,
    build_leaf_power_box_rep, lift_representation, LeafRoot,
};
pub use error::{Error, Result};
pub use graph::{
    critical_clique_graph, graphs_equal, induced_subgraph, intersect, power, CliqueMapping, Graph,
};
pub use rep::RepFamily;
pub use scalar::{Endpoint, IntEndpoint};
pub use tree::RootedTree;
pub use verify::{Verdict, Witness};

/// Integer-endpoint interval, what the constructions emit by default.
pub type Interval = rep::Interval<i64>;
pub type IntervalRep = rep::IntervalRep<i64>;
pub type BoxRep = rep::BoxRep<i64>;

pub type IntervalF64 = rep::Interval<f64>;
pub type IntervalRepF64 = rep::IntervalRep<f64>;
pub type BoxRepF64 = rep::BoxRep<f64>;

pub type IntervalU32 = rep::Interval<u32>;
pub type BoxRepU32 = rep::BoxRep<u32>;
