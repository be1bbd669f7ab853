//! The coefficient ring used by power-sum polynomials and graph combinations.
//!
//! Every exact signed type from `num` works: machine integers for speed,
//! [`num_bigint::BigInt`] when coefficients may grow without bound, and
//! rationals if a caller wants to divide.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

pub trait Coefficient:
    Clone + Ord + Signed + FromPrimitive + FromStr + Display + Debug + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone + Ord + Signed + FromPrimitive + FromStr + Display + Debug + Send + Sync + 'static
{
}

/// Lossless conversion of an exact count into the coefficient ring.
pub(crate) fn from_i64<C: Coefficient>(value: i64) -> C {
    C::from_i64(value).expect("coefficient type cannot represent an i64 count")
}

pub(crate) fn from_u64<C: Coefficient>(value: u64) -> C {
    C::from_u64(value).expect("coefficient type cannot represent a u64 count")
}
