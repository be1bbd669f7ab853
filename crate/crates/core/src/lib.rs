//! Chromatic symmetric functions of simple graphs in the power-sum basis.
//!
//! The polynomial and graph-combination types are generic over an exact
//! coefficient ring ([`Coefficient`]); the aliases below fix it to
//! arbitrary-precision integers, which is what every top-level operation
//! returns.
//!
//! ```
//! use csfkit::{chromatic_symmetric_function, graph::generators, Partition};
//!
//! let x = chromatic_symmetric_function(&generators::complete(3)).unwrap();
//! assert_eq!(x.coefficient(&Partition::new(vec![2, 1]).unwrap()), (-3).into());
//! assert_eq!(x.specialize(3), 6.into());
//! ```

pub mod csf;
pub mod dsu;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod pairgen;
pub mod partition;
pub mod rewrite;
pub mod scalar;
pub mod search;
mod tally;
pub mod treedata;

use num_bigint::BigInt;

pub use csf::{
    chromatic_symmetric_function, chromatic_symmetric_function_with, count_proper_colorings,
    csf_equal, extract_invariants, CsfConfig, ExtractedReport, PowerSumPolynomial,
};
pub use error::{Error, Result};
pub use graph::{EdgeSubset, Graph};
pub use partition::{compare_balanced, Partition};
pub use rewrite::GraphCombination;
pub use scalar::Coefficient;

/// Power-sum polynomial with arbitrary-precision integer coefficients.
pub type Csf = PowerSumPolynomial<BigInt>;

/// Integer-weighted combination of graphs.
pub type Combination = GraphCombination<BigInt>;

/// Invariants recovered from a [`Csf`].
pub type Extracted = ExtractedReport<BigInt>;
