//! Interval and box representations.
//!
//! All types are generic over the endpoint scalar. The constructions in
//! [`crate::construct`] emit primitive integers; the intersection tests in
//! [`crate::verify`] accept any [`Endpoint`], so a representation written
//! with float or rational endpoints can be checked as well.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Endpoint;

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(T, T)", into = "(T, T)")]
#[serde(bound(
    serialize = "T: Endpoint + Serialize",
    deserialize = "T: Endpoint + Deserialize<'de>"
))]
pub struct Interval<T: Endpoint = i64> {
    lo: T,
    hi: T,
}

impl<T: Endpoint> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        // also rejects NaN endpoints
        if lo <= hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            })
        }
    }

    pub fn point(x: T) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    #[inline]
    pub fn overlaps(&self, other: &Self) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl<T: Endpoint> TryFrom<(T, T)> for Interval<T> {
    type Error = Error;

    fn try_from((lo, hi): (T, T)) -> Result<Self> {
        Interval::new(lo, hi)
    }
}

impl<T: Endpoint> From<Interval<T>> for (T, T) {
    fn from(i: Interval<T>) -> Self {
        (i.lo, i.hi)
    }
}

/// Which interval family a representation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepFamily {
    /// Intervals `[depth, depth + k]`.
    Depth,
    /// Intervals built from leaf spans of the `i`-th and `(k-1-i)`-th ancestors.
    Layer(usize),
    /// Anything not produced by the tree construction.
    Other,
}

/// One interval per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Endpoint + Serialize",
    deserialize = "T: Endpoint + Deserialize<'de>"
))]
pub struct IntervalRep<T: Endpoint = i64> {
    pub family: RepFamily,
    pub intervals: Vec<Interval<T>>,
}

impl<T: Endpoint> IntervalRep<T> {
    pub fn new(family: RepFamily, intervals: Vec<Interval<T>>) -> Self {
        IntervalRep { family, intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, v: usize) -> Interval<T> {
        self.intervals[v]
    }

    /// Single-coordinate box representation.
    pub fn into_box_rep(self) -> BoxRep<T> {
        BoxRep {
            dimension: 1,
            boxes: self.intervals.into_iter().map(|i| vec![i]).collect(),
        }
    }
}

/// A `d`-box per vertex: `boxes[v][c]` is the interval of `v` along axis `c`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Endpoint + Serialize"))]
pub struct BoxRep<T: Endpoint = i64> {
    dimension: usize,
    boxes: Vec<Vec<Interval<T>>>,
}

impl<T: Endpoint> BoxRep<T> {
    pub fn new(dimension: usize, boxes: Vec<Vec<Interval<T>>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Parameter("box dimension must be at least 1".into()));
        }
        for (vertex, b) in boxes.iter().enumerate() {
            if b.len() != dimension {
                return Err(Error::Dimension {
                    vertex,
                    expected: dimension,
                    found: b.len(),
                });
            }
        }
        Ok(BoxRep { dimension, boxes })
    }

    /// Stacks per-axis interval representations; all must cover the same
    /// vertex count.
    pub fn from_coordinates(coords: &[IntervalRep<T>]) -> Result<Self> {
        let first = coords
            .first()
            .ok_or_else(|| Error::Parameter("box dimension must be at least 1".into()))?;
        for c in coords {
            if c.len() != first.len() {
                return Err(Error::SizeMismatch {
                    expected: first.len(),
                    found: c.len(),
                });
            }
        }
        let boxes = (0..first.len())
            .map(|v| coords.iter().map(|c| c.intervals[v]).collect())
            .collect();
        Ok(BoxRep {
            dimension: coords.len(),
            boxes,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[Vec<Interval<T>>] {
        &self.boxes
    }

    pub fn get(&self, v: usize) -> &[Interval<T>] {
        &self.boxes[v]
    }

    /// Projection onto axis `c`.
    pub fn coordinate(&self, c: usize) -> IntervalRep<T> {
        IntervalRep {
            family: RepFamily::Other,
            intervals: self.boxes.iter().map(|b| b[c]).collect(),
        }
    }

    /// Boxes of `u` and `v` meet iff they meet on every axis.
    #[inline]
    pub fn boxes_meet(&self, u: usize, v: usize) -> bool {
        self.boxes[u]
            .iter()
            .zip(&self.boxes[v])
            .all(|(a, b)| a.overlaps(b))
    }

    /// Repeats the last axis until the representation has `dimension`
    /// axes. The intersection graph does not change.
    pub fn padded_to(mut self, dimension: usize) -> Self {
        if dimension > self.dimension {
            for b in &mut self.boxes {
                let last = *b.last().expect("dimension >= 1");
                b.resize(dimension, last);
            }
            self.dimension = dimension;
        }
        self
    }

    /// One row per vertex: `vertex,lo_1,hi_1,...,lo_d,hi_d`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex");
        for c in 1..=self.dimension {
            write!(out, ",lo_{c},hi_{c}").unwrap();
        }
        out.push('\n');
        for (v, b) in self.boxes.iter().enumerate() {
            write!(out, "{v}").unwrap();
            for i in b {
                write!(out, ",{},{}", i.lo, i.hi).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Deserialize)]
struct BoxRepJson<T> {
    dimension: usize,
    boxes: Vec<Vec<(T, T)>>,
}

impl<'de, T: Endpoint + Deserialize<'de>> Deserialize<'de> for BoxRep<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BoxRepJson::<T>::deserialize(d)?;
        let boxes = raw
            .boxes
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(Interval::try_from)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        BoxRep::new(raw.dimension, boxes).map_err(serde::de::Error::custom)
    }
}
