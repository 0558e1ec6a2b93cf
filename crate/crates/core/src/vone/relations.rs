//! The two-generator relations on `ξ_1, D` for `v^{2m}(Spin(2n+1))`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exactmath::{binom, binom_nat, odd_power_sum, pow_u, sigma};

/// The relation `xi1_coef * ξ_1 + d_coef * D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationPair {
    pub xi1_coef: BigInt,
    pub d_coef: BigInt,
}

impl RelationPair {
    pub fn new(xi1_coef: BigInt, d_coef: BigInt) -> Self {
        RelationPair { xi1_coef, d_coef }
    }

    pub fn row(&self) -> Vec<BigInt> {
        vec![self.xi1_coef.clone(), self.d_coef.clone()]
    }
}

impl std::ops::Neg for RelationPair {
    type Output = RelationPair;

    fn neg(self) -> RelationPair {
        RelationPair::new(-self.xi1_coef, -self.d_coef)
    }
}

impl fmt::Display for RelationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})ξ_1 + ({})D", self.xi1_coef, self.d_coef)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombRelations {
    pub r1: RelationPair,
    pub r2: RelationPair,
    pub r3: RelationPair,
}

/// `sum_{t >= 0} C(top, base - step*t)` with ordinary binomials.
fn stepped_sum(top: i64, base: i64, step: i64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut k = base;
    while k >= 0 {
        acc += binom_nat(top, k);
        k -= step;
    }
    acc
}

/// `sum_{odd k} k^m sigma_{n-k}`.
pub fn r1_sum(m: u32, n: u32) -> BigInt {
    odd_power_sum(m, n.into(), |k| sigma(i64::from(n) - k, n))
}

/// `sum_{odd k} k^m sum_t C(2n+2, n-1-k-4t)`.
pub fn r2_sum(m: u32, n: u32) -> BigInt {
    let n = i64::from(n);
    odd_power_sum(m, n, |k| stepped_sum(2 * n + 2, n - 1 - k, 4))
}

/// `sum_{odd k} k^m sum_t C(2n+1, n-1-k-3t)`.
pub fn r3_sum(m: u32, n: u32) -> BigInt {
    let n = i64::from(n);
    odd_power_sum(m, n, |k| stepped_sum(2 * n + 1, n - 1 - k, 3))
}

/// `(2^{2n+1} + 1 - 3^{m+1}) / 3`.
pub fn r3_d_numerator(m: u32, n: u32) -> Result<BigInt> {
    let num: BigInt = (BigInt::one() << (2 * n as usize + 1)) + 1 - pow_u(3, m + 1);
    let (q, r) = num.div_rem(&BigInt::from(3));
    if !r.is_zero() {
        return Err(Error::IntegralityViolation {
            context: format!("D coefficient of r3 for m={m}, n={n}"),
            numerator: num,
            divisor: BigInt::from(3),
        });
    }
    Ok(q)
}

/// The three relations `r1, r2, r3` among `ξ_1` and `D`.
pub fn comb_relations(m: u32, n: u32) -> Result<CombRelations> {
    if n < 2 || m == 0 {
        return Err(invalid(format!("relations need n >= 2 and m >= 1, got m={m}, n={n}")));
    }
    let two_n = BigInt::one() << n as usize;
    Ok(CombRelations {
        r1: RelationPair::new(r1_sum(m, n), -(&two_n << 1usize)),
        r2: RelationPair::new(r2_sum(m, n), -two_n.clone()),
        r3: RelationPair::new(&two_n * r3_sum(m, n), -r3_d_numerator(m, n)?),
    })
}

/// `sum_{t=0}^{j-2} (-1)^t C(2j-1, t) (2j-2t-1) C(j-t, 2)^i`.
pub fn inner_sum(j: i64, i: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for t in 0..=j - 2 {
        let term = binom(2 * j - 1, t) * (2 * j - 2 * t - 1) * num_traits::pow(binom(j - t, 2), i as usize);
        if t % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn shifted(x: BigInt, exp: i64) -> BigInt {
    debug_assert!(exp >= 0);
    x << exp as usize
}

/// `sum_{i >= j-1} 2^{base + 3i} C(a, i) inner(j, i)`.
fn tail(a: u32, j: i64, base: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for i in (j - 1).max(0)..=i64::from(a) {
        let c = binom(a.into(), i);
        if c.is_zero() {
            continue;
        }
        acc += shifted(c * inner_sum(j, i as u32), base + 3 * i);
    }
    acc
}

/// ξ_1-coefficient of `r2` for `m = 2a + 1`, by the expansion in powers of 8.
pub fn fast_r2_coef(a: u32, n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(invalid("fast_r2_coef needs n >= 2"));
    }
    let n = i64::from(n);
    let mut acc = shifted(BigInt::from(n - 1), 2 * n - 4);
    for j in 2..=n / 2 {
        acc += binom(n - j, j) * tail(a, j, 2 * n - 4 * j);
    }
    Ok(acc)
}

/// ξ_1-coefficient of `r1` for `m = 2a + 1`, by the expansion in powers of 8.
pub fn fast_r1_coef(a: u32, n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(invalid("fast_r1_coef needs n >= 2"));
    }
    let n = i64::from(n);
    let mut acc = shifted(BigInt::from(n + 1), 2 * n - 3);
    for j in 2..=(n + 2) / 2 {
        let c = binom_nat(n + 2 - j, j) - binom_nat(n - j, j - 2);
        acc += c * tail(a, j, 2 * n + 1 - 4 * j);
    }
    Ok(acc)
}
