//! Extremal instances: the recurrences `w` and `f`, the spider trees `S_k`
//! and `T_k`, and the tight `k`-leaf power built from `T_{k-2}`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::construct::LeafRoot;
use crate::error::{Error, Result};
use crate::graph::{power, Graph};

/// Gadgets larger than this are refused rather than allocated.
pub const MAX_GADGET_VERTICES: usize = 1 << 22;

/// `w(1) = 1`, `w(2) = 3`, and for `i >= 3`
/// `w(i) = 2(i-1) + 1 + [C(i-1, 2) * 4 * (w(i-2) - 1) + 1]`.
pub fn w_value(i: usize) -> Result<BigUint> {
    if i == 0 {
        return Err(Error::Parameter("w is defined for i >= 1".into()));
    }
    // values at i-2 and i-1
    let mut prev2 = BigUint::one();
    let mut prev1 = BigUint::from(3u32);
    if i == 1 {
        return Ok(prev2);
    }
    for j in 3..=i {
        let pairs = BigUint::from((j - 1) * (j - 2) / 2);
        let next = BigUint::from(2 * (j - 1) + 1) + pairs * 4u32 * (&prev2 - 1u32) + 1u32;
        prev2 = std::mem::replace(&mut prev1, next);
    }
    Ok(prev1)
}

/// `f(k) = 2k (w(k) - 1) + 1`.
pub fn f_value(k: usize) -> Result<BigUint> {
    let w = w_value(k)?;
    Ok(BigUint::from(2 * k) * (w - 1u32) + 1u32)
}

/// A center `v_0` with `leg_count` disjoint paths of `leg_length` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpiderSpec {
    pub leg_count: usize,
    pub leg_length: usize,
}

impl SpiderSpec {
    pub fn vertex_count(&self) -> usize {
        1 + self.leg_count * self.leg_length
    }

    /// Index of `v_{depth, leg}` (both 1-based). Leg `j` occupies the
    /// contiguous block starting at `1 + (j - 1) * leg_length`.
    pub fn index(&self, depth: usize, leg: usize) -> usize {
        debug_assert!(
            (1..=self.leg_length).contains(&depth) && (1..=self.leg_count).contains(&leg)
        );
        1 + (leg - 1) * self.leg_length + (depth - 1)
    }
}

/// Labeled spider: vertex 0 is `v_0`, and `v_{i,j}` is the depth-`i`
/// vertex of leg `j`.
pub fn build_spider(spec: SpiderSpec) -> Result<Graph> {
    if spec.leg_count == 0 || spec.leg_length == 0 {
        return Err(Error::Parameter(
            "spider needs at least one leg of positive length".into(),
        ));
    }
    let n = spec
        .leg_count
        .checked_mul(spec.leg_length)
        .and_then(|m| m.checked_add(1))
        .filter(|&n| n <= MAX_GADGET_VERTICES)
        .ok_or_else(|| {
            Error::TooLarge(format!(
                "spider with {} legs of length {}",
                spec.leg_count, spec.leg_length
            ))
        })?;
    let mut edges = Vec::with_capacity(n - 1);
    let mut labels = vec![String::from("v_0"); n];
    for leg in 1..=spec.leg_count {
        for depth in 1..=spec.leg_length {
            let v = spec.index(depth, leg);
            let up = if depth == 1 {
                0
            } else {
                spec.index(depth - 1, leg)
            };
            edges.push((up, v));
            labels[v] = format!("v_{{{depth},{leg}}}");
        }
    }
    Graph::from_edges(n, &edges)?.with_labels(labels)
}

fn to_count(value: BigUint, what: &str) -> Result<usize> {
    value
        .to_usize()
        .filter(|&c| c <= MAX_GADGET_VERTICES)
        .ok_or_else(|| Error::TooLarge(format!("{what} = {value}")))
}

pub fn sk_spec(k: usize) -> Result<SpiderSpec> {
    Ok(SpiderSpec {
        leg_count: to_count(w_value(k)?, &format!("w({k})"))?,
        leg_length: k,
    })
}

pub fn tk_spec(k: usize) -> Result<SpiderSpec> {
    Ok(SpiderSpec {
        leg_count: to_count(f_value(k)?, &format!("f({k})"))?,
        leg_length: k + 1,
    })
}

/// `S_k`: `w(k)` legs of length `k`.
pub fn build_sk(k: usize) -> Result<Graph> {
    build_spider(sk_spec(k)?)
}

/// `T_k`: `f(k)` legs of length `k + 1`.
pub fn build_tk(k: usize) -> Result<Graph> {
    build_spider(tk_spec(k)?)
}

/// `G = (T_{k-2})^{k-2}` together with a `k`-leaf root of it: `T_{k-2}`
/// with one pendant leaf hung on every vertex. Pendant leaves sit at
/// distance `d + 2` when their hosts are at distance `d`.
///
/// In the leaf root, vertex `v` of `T_{k-2}` keeps index `v` and its
/// pendant is `n + v`; graph vertex `v` is the pendant `n + v`.
pub fn build_tight_leaf_power_instance(k: usize) -> Result<(LeafRoot, Graph)> {
    if k < 3 {
        return Err(Error::Parameter(format!(
            "tight instance needs k >= 3, got {k}"
        )));
    }
    let base = build_tk(k - 2)?;
    let g = power(&base, k - 2)?;
    let n = base.n();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    edges.extend((0..n).map(|v| (v, n + v)));
    let base_labels = base.labels().expect("gadgets are labeled");
    let labels = base_labels
        .iter()
        .map(|l| format!("host:{l}"))
        .chain(base_labels.iter().cloned())
        .collect();
    let tree = Graph::from_edges(2 * n, &edges)?.with_labels(labels)?;
    let lr = LeafRoot::new(tree, k, (n..2 * n).collect())?;
    Ok((lr, g))
}
