//! Generalized binomial coefficients and the named binomial sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// Generalized binomial coefficient `a(a-1)...(a-k+1)/k!`.
///
/// Zero for `k < 0`; the upper index may be negative, so `binom(-1, k) = (-1)^k`.
pub fn binom(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if a < 0 {
        // C(a, k) = (-1)^k C(k - a - 1, k)
        let c = binom(k - a - 1, k);
        return if k % 2 == 0 { c } else { -c };
    }
    if k > a {
        return BigInt::zero();
    }
    let k = k.min(a - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Ordinary binomial coefficient: zero unless `0 <= k <= a`.
pub fn binom_nat(a: i64, k: i64) -> BigInt {
    if a < 0 {
        BigInt::zero()
    } else {
        binom(a, k)
    }
}

pub(crate) fn pow_u(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `S_{m,j} = sum_{k=0}^{j} (-1)^k C(j,k) k^m` (with `0^0 = 1`).
pub fn s_full(m: u32, j: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=j {
        let term = binom(j.into(), k.into()) * pow_u(k.into(), m);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `S'_{m,j} = sum_{odd k <= j} C(j,k) k^m`.
pub fn s_odd(m: u32, j: u32) -> BigInt {
    (1..=j)
        .step_by(2)
        .map(|k| binom(j.into(), k.into()) * pow_u(k.into(), m))
        .sum()
}

/// `R_{m,j}` of the symplectic presentation, defined for `n < j <= 2n`:
/// `sum_{odd k} C(2n+1, j-k) k^m - sum_{odd k} C(2n+1, 2n+1-j-k) k^m`.
pub fn r_sp(m: u32, j: u32, n: u32) -> Result<BigInt> {
    if n == 0 || j <= n || j > 2 * n {
        return Err(invalid(format!("r_sp requires n < j <= 2n, got j={j}, n={n}")));
    }
    let (n, j) = (i64::from(n), i64::from(j));
    let top = 2 * n + 1;
    let mut acc = BigInt::zero();
    for k in (1..=j).step_by(2) {
        acc += binom(top, j - k) * pow_u(k, m);
    }
    for k in (1..=top - j).step_by(2) {
        acc -= binom(top, top - j - k) * pow_u(k, m);
    }
    Ok(acc)
}

/// Partial row sum `sigma_j = sum_{k=0}^{j} C(2n+1, k)`; zero for `j < 0`.
pub fn sigma(j: i64, n: u32) -> BigInt {
    let top = 2 * i64::from(n) + 1;
    if j < 0 {
        return BigInt::zero();
    }
    (0..=j.min(top)).map(|k| binom(top, k)).sum()
}

/// `sum_{odd k >= 1} k^m * weight(k)`, stopping at `k_max`.
pub(crate) fn odd_power_sum(m: u32, k_max: i64, mut weight: impl FnMut(i64) -> BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for k in (1..=k_max).step_by(2) {
        let w = weight(k);
        if !w.is_zero() {
            acc += w * pow_u(k, m);
        }
    }
    acc
}
