//! Simultaneous core partitions through order ideals of numerical-semigroup posets.
//!
//! A partition is an `(a_1, ..., a_r)`-core exactly when its β-set (the hook
//! lengths of its first column) is an order ideal of the poset `P_(a_1,...,a_r)`
//! of positive integers not representable by the generators. This crate builds
//! those posets, enumerates their ideals, and computes exact enumerative data
//! for the consecutive tuples `(s, s+1, s+2)`:
//!
//! - [`enumeration::count_r`]: number of cores (the Motzkin numbers),
//! - [`extremal::max_size_l`] and [`extremal::extremal_report`]: largest cores,
//! - [`enumeration::sum_h`] and friends: total size, via four independent routes,
//! - [`oracle`]: brute-force hook-length scans used as ground truth.
//!
//! All counts are arbitrary precision ([`BigCount`]); no floating point is used
//! in any computation.

pub mod cli;
pub mod enumeration;
mod error;
pub mod extremal;
pub mod oracle;
pub mod partition;
pub mod poset;
pub mod series;

pub use error::{Error, Result};
pub use partition::{BetaSet, CoreTuple, Partition};
pub use poset::{CorePoset, OrderIdeal};

/// Exact nonnegative integer used for every count and size.
pub type BigCount = num_bigint::BigUint;

/// Reduced nonnegative fraction.
pub type ExactRational = num_rational::Ratio<BigCount>;
