//! Exact integer arithmetic: valuations, binomials, named sums, series.

mod series;
mod sums;
mod valuation;

pub use series::IntSeries;
pub use sums::{binom, binom_nat, r_sp, s_full, s_odd, sigma};
pub(crate) use sums::{odd_power_sum, pow_u};
pub use valuation::{nu, nu_i64, Valuation};

/// Arbitrary-precision signed integer used for every quantity in the crate.
pub type ExactInt = num_bigint::BigInt;
