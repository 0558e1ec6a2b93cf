//! Per-`m` tables of `(eSp, e1, e2)` and cross-method sweeps.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::esp::{esp_oracle, esp_windowed, DEFAULT_WINDOW};
use super::spin::{spin9_exponent, v_spin_algorithm, v_spin_closed, v_spin_oracle, v_spin_relations};
use crate::adamsmodules::Variant;
use crate::error::{Error, Result};
use crate::exactmath::nu;
use crate::intlinalg::TwoGroup;

/// One table line. `esp` is `None` where no value is claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TableRow {
    pub m: u32,
    pub esp: Option<u64>,
    pub e1: u64,
    pub e2: u64,
}

fn exps2(g: &TwoGroup) -> Result<(u64, u64)> {
    match g.exponents() {
        [] => Ok((0, 0)),
        [a] => Ok((*a, 0)),
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::Consistency(format!("more than two summands: {g}"))),
    }
}

/// Computed row for `Spin(2n+1)` at `m`, from the full presentations.
pub fn table_row(n: u32, m: u32) -> Result<TableRow> {
    let esp = esp_oracle(m, n)?
        .finite()
        .ok_or_else(|| Error::Consistency(format!("eSp({m},{n}) is infinite")))?;
    let (e1, e2) = exps2(&v_spin_oracle(m, n, Variant::V)?)?;
    Ok(TableRow { m, esp: Some(esp), e1, e2 })
}

/// Rows for the odd `m` in `m_from..=m_to`, in increasing order.
pub fn table(n: u32, m_from: u32, m_to: u32) -> Result<Vec<TableRow>> {
    let ms: Vec<u32> = (m_from..=m_to).filter(|m| m % 2 == 1).collect();
    ms.par_iter().map(|&m| table_row(n, m)).collect()
}

fn v(x: i64) -> crate::exactmath::Valuation {
    nu(&BigInt::from(x))
}

/// Residue-class formulas for `n = 4, 5, 6` and odd `m > n^2`.
pub fn reference_row(n: u32, m: u32) -> Option<TableRow> {
    if m.is_multiple_of(2) || u64::from(m) <= u64::from(n) * u64::from(n) {
        return None;
    }
    let mi = i64::from(m);
    let (esp, e1, e2) = match n {
        4 => {
            let e = spin9_exponent(m);
            (None, e.max(3), e.min(3))
        }
        5 => match (mi % 8, mi % 4) {
            (3, _) => (Some(8), 5, 4),
            (7, _) => (Some((v(mi - 7) + 6).capped(11)), (v(mi - 103) + 2).capped(11), 5),
            (_, 1) => (Some((v(mi - 73) + 6).capped(14)), (v(mi - 73) + 4).capped(12), 3),
            _ => unreachable!(),
        },
        6 => match (mi % 16, mi % 8, mi % 4) {
            (15, _, _) => (Some(11), 6, 6),
            (7, _, _) => (Some(11), (v(mi - 23) + 4).capped(9), 5),
            (_, 3, _) => (Some((v(mi - 75) + 9).capped(15)), (v(mi - 523) + 5).capped(15), 4),
            (_, _, 1) => (Some((v(mi - 9) + 8).capped(14)), (v(mi - 201) + 5).capped(13), 3),
            _ => unreachable!(),
        },
        _ => return None,
    };
    Some(TableRow { m, esp, e1, e2 })
}

/// Closed, relations, algorithm and oracle results, in that order.
pub fn four_way(m: u32, n: u32) -> Result<[TwoGroup; 4]> {
    Ok([
        v_spin_closed(m, n)?,
        v_spin_relations(m, n)?,
        v_spin_algorithm(m, n)?,
        v_spin_oracle(m, n, Variant::V)?,
    ])
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossReport {
    pub cases: usize,
    /// First disagreement in grid order.
    pub first_mismatch: Option<String>,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Four-way agreement plus oracle/windowed eSp agreement over odd
/// `m in (n^2, n^2 + span]` for each `n`.
pub fn cross_check(ns: &[u32], span: u32) -> CrossReport {
    let cells: Vec<(u32, u32)> = ns
        .iter()
        .flat_map(|&n| (n * n + 1..=n * n + span).filter(|m| m % 2 == 1).map(move |m| (n, m)))
        .collect();
    let outcomes: Vec<Option<String>> = cells
        .par_iter()
        .map(|&(n, m)| {
            let check = || -> Result<Option<String>> {
                let r = four_way(m, n)?;
                if r.iter().any(|g| g != &r[3]) {
                    return Ok(Some(format!(
                        "n={n} m={m}: closed={} relations={} algorithm={} oracle={}",
                        r[0], r[1], r[2], r[3]
                    )));
                }
                let o = esp_oracle(m, n)?;
                for with_r in [true, false] {
                    let w = esp_windowed(m, n, DEFAULT_WINDOW, with_r)?.value;
                    if w != o {
                        return Ok(Some(format!("n={n} m={m}: eSp oracle={o} windowed(with_r={with_r})={w}")));
                    }
                }
                Ok(None)
            };
            check().unwrap_or_else(|e| Some(format!("n={n} m={m}: error {e}")))
        })
        .collect();
    CrossReport { cases: cells.len(), first_mismatch: outcomes.into_iter().flatten().next() }
}
