//! Exact linear algebra over the integers.

mod group;
mod matrix;
mod snf;

pub use group::{cokernel, duality_mismatch, kernel_count_mod, qz_kernel, two_primary, two_primary_torsion, FinAbGroup, TwoGroup};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
