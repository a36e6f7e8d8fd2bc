use std::fmt::{Debug, Display};

use num_traits::{NumCast, PrimInt};

use crate::error::{Error, Result};

/// Interval endpoint. Anything totally ordered on the values actually used
/// works for intersection tests: integers, floats, `num_rational::Ratio`.
pub trait Endpoint: Copy + PartialOrd + Debug + Display + Send + Sync {}

impl<T: Copy + PartialOrd + Debug + Display + Send + Sync> Endpoint for T {}

/// Endpoint type the constructions can emit. Constructions are exact, so
/// only primitive integers qualify.
pub trait IntEndpoint: Endpoint + PrimInt {
    fn from_index(value: usize) -> Result<Self> {
        <Self as NumCast>::from(value).ok_or(Error::EndpointOverflow(value))
    }
}

impl<T: Endpoint + PrimInt> IntEndpoint for T {}
