//! Exact computation of the K-theory Bousfield–Kan 1-line groups
//! `v^{2m}(Sp(n))` and `v^{2m}(Spin(2n+1))`, localized at 2.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactmath`]: big integers, 2-adic valuations, generalized binomials,
//!   the named binomial sums and truncated integer power series.
//! * [`intlinalg`]: dense integer matrices, Smith normal form, cokernels and
//!   the `Q/Z` kernel dual, 2-primary parts.
//! * [`adamsmodules`]: integral models of `PK^1(Sp(n))` and
//!   `PK^1(Spin(2n+1))` in the ξ-basis with their Adams operations.
//! * [`vone`]: the groups themselves, computed four independent ways.
//! * [`identities`]: grid verification of the combinatorial identities the
//!   closed forms rest on.

pub mod adamsmodules;
pub mod error;
pub mod exactmath;
pub mod identities;
pub mod intlinalg;
pub mod vone;

pub use adamsmodules::{AdamsModule, Family, ModuleSpec, Variant, XiVector};
pub use error::{Error, Result};
pub use exactmath::{binom, nu, r_sp, s_full, s_odd, sigma, ExactInt, IntSeries, Valuation};
pub use identities::IdentityReport;
pub use intlinalg::{cokernel, qz_kernel, smith_normal_form, two_primary, FinAbGroup, IntMatrix, SmithForm, TwoGroup};
pub use vone::{EspMethod, Method, RelationPair, VGroupResult};
