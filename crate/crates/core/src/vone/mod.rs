//! The groups `v^{2m}(Sp(n))` and `v^{2m}(Spin(2n+1))`, computed several
//! independent ways.

mod esp;
mod relations;
mod spin;
mod table;

use std::fmt;
use std::str::FromStr;

use crate::adamsmodules::{Family, Variant};
use crate::error::{invalid, Error, Result};
use crate::intlinalg::TwoGroup;

pub use esp::{esp, esp_oracle, esp_windowed, v_sp_oracle, EspMethod, WindowedEsp, DEFAULT_WINDOW};
pub use relations::{
    comb_relations, fast_r1_coef, fast_r2_coef, inner_sum, r1_sum, r2_sum, r3_d_numerator, r3_sum, CombRelations,
    RelationPair,
};
pub use spin::{
    spin9_exponent, v_spin_algorithm, v_spin_algorithm_trace, v_spin_closed, v_spin_oracle, v_spin_relations,
    AlgorithmTrace,
};
pub use table::{cross_check, four_way, reference_row, table, table_row, CrossReport, TableRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    Relations,
    Algorithm,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Closed, Method::Relations, Method::Algorithm, Method::Oracle];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::Relations => "relations",
            Method::Algorithm => "algorithm",
            Method::Oracle => "oracle",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "closed" => Ok(Method::Closed),
            "relations" => Ok(Method::Relations),
            "algorithm" => Ok(Method::Algorithm),
            "oracle" => Ok(Method::Oracle),
            _ => Err(invalid(format!("unknown method {s:?}"))),
        }
    }
}

/// A computed group together with the inputs that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VGroupResult {
    pub family: Family,
    pub n: u32,
    pub m: u32,
    pub variant: Variant,
    pub method: Method,
    pub group: TwoGroup,
}

/// `v^{2m}` (or `ṽ^{2m}`) of the given family by the given method.
///
/// For `Sp(n)`, `Closed` is the windowed minimum of `ν(S'_{m,j})`,
/// `Relations` adds the `R_{m,j}` terms, and `Algorithm` is unavailable.
/// Non-oracle methods describe `V`; they are accepted for `VTilde` once
/// `m > n^2`, where the two agree.
pub fn compute(family: Family, n: u32, m: u32, method: Method, variant: Variant) -> Result<VGroupResult> {
    if method != Method::Oracle && variant == Variant::VTilde && u64::from(m) <= u64::from(n) * u64::from(n) {
        return Err(Error::Unsupported(format!(
            "method {method} computes the vtilde variant only for m > n^2"
        )));
    }
    let group = match (family, method) {
        (Family::Sp, Method::Oracle) => v_sp_oracle(m, n, variant)?,
        (Family::Sp, Method::Closed | Method::Relations) => {
            let value = if m.is_multiple_of(2) && method == Method::Closed {
                crate::exactmath::Valuation::Finite(1)
            } else {
                esp_windowed(m, n, DEFAULT_WINDOW, method == Method::Relations)?.value
            };
            let e = value
                .finite()
                .ok_or_else(|| Error::Unsupported(format!("windowed eSp({m},{n}) has an empty range")))?;
            TwoGroup::new(vec![e])
        }
        (Family::Sp, Method::Algorithm) => {
            return Err(Error::Unsupported("the elimination algorithm applies to Spin only".into()))
        }
        (Family::Spin, Method::Oracle) => v_spin_oracle(m, n, variant)?,
        (Family::Spin, Method::Closed) => v_spin_closed(m, n)?,
        (Family::Spin, Method::Relations) => v_spin_relations(m, n)?,
        (Family::Spin, Method::Algorithm) => v_spin_algorithm(m, n)?,
    };
    Ok(VGroupResult { family, n, m, variant, method, group })
}
