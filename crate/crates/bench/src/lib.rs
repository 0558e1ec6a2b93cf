//! Shared inputs for the benchmarks in `benches/`.

use kline::adamsmodules::{presentation, ModuleSpec};
use kline::{IntMatrix, Variant};

/// `(n, m)` pairs with odd `m` just above `n^2`.
pub fn spin_cells() -> Vec<(u32, u32)> {
    [3u32, 5, 6, 8, 10].iter().map(|&n| (n, n * n + 1 + (n * n) % 2)).collect()
}

pub fn spin_presentation(n: u32, m: u32) -> IntMatrix {
    presentation(m, ModuleSpec::spin(n).expect("n >= 2"), Variant::V).expect("valid presentation")
}
