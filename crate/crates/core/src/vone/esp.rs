//! The exponent `eSp(m, n)` of the cyclic group `v^{2m}(Sp(n))`.

use log::warn;

use crate::adamsmodules::{presentation, ModuleSpec, Variant};
use crate::error::{invalid, Error, Result};
use crate::exactmath::{nu, r_sp, s_odd, Valuation};
use crate::intlinalg::{cokernel, two_primary, TwoGroup};

pub const DEFAULT_WINDOW: u32 = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EspMethod {
    /// Cyclic 2-part of the full symplectic presentation.
    #[default]
    Oracle,
    /// Minimum of `ν(S'_{m,j})` for `2n < j <= min(2n + window, m)`, together
    /// with `ν(R_{m,j})` for `n < j <= 2n` when `with_r` is set.
    Windowed { window: u32, with_r: bool },
}

/// Outcome of a windowed minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowedEsp {
    pub value: Valuation,
    /// The window cut the range short and the minimum sits on its last index,
    /// so a larger window might lower it.
    pub at_edge: bool,
}

fn check_args(m: u32, n: u32) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(invalid(format!("eSp needs m >= 1 and n >= 1, got m={m}, n={n}")));
    }
    Ok(())
}

/// `v^{2m}(Sp(n))` from the full presentation.
pub fn v_sp_oracle(m: u32, n: u32, variant: Variant) -> Result<TwoGroup> {
    check_args(m, n)?;
    two_primary(&cokernel(&presentation(m, ModuleSpec::sp(n)?, variant)?))
}

pub fn esp_oracle(m: u32, n: u32) -> Result<Valuation> {
    let g = v_sp_oracle(m, n, Variant::V)?;
    match g.exponents() {
        [] => Ok(Valuation::Finite(0)),
        [e] => Ok(Valuation::Finite(*e)),
        _ => Err(Error::Consistency(format!("v^{{{}}}(Sp({n})) is not cyclic: {g}", 2 * m))),
    }
}

pub fn esp_windowed(m: u32, n: u32, window: u32, with_r: bool) -> Result<WindowedEsp> {
    check_args(m, n)?;
    let mut best = Valuation::Infinite;
    if with_r {
        for j in n + 1..=2 * n {
            best = best.min(nu(&r_sp(m, j, n)?));
        }
    }
    let last = (2 * n).saturating_add(window).min(m);
    let mut best_j = None;
    for j in 2 * n + 1..=last {
        let v = nu(&s_odd(m, j));
        if v < best {
            best = v;
            best_j = Some(j);
        }
    }
    let truncated = (2 * n).saturating_add(window) < m;
    let at_edge = truncated && best_j == Some(last);
    if at_edge {
        warn!("eSp({m},{n}) window minimum {best} attained at the window edge j={last}");
    }
    Ok(WindowedEsp { value: best, at_edge })
}

pub fn esp(m: u32, n: u32, method: EspMethod) -> Result<Valuation> {
    match method {
        EspMethod::Oracle => esp_oracle(m, n),
        EspMethod::Windowed { window, with_r } => Ok(esp_windowed(m, n, window, with_r)?.value),
    }
}
