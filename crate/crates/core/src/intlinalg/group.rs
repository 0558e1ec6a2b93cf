use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{smith_normal_form, IntMatrix};
use crate::error::{invalid, Error, Result};
use crate::exactmath::nu;

/// Finitely generated abelian group `Z/d_1 + ... + Z/d_k + Z^free_rank`.
///
/// For [`qz_kernel`] the same shape stores `(Q/Z)^free_rank` instead of
/// `Z^free_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl FinAbGroup {
    /// Builds a group from a divisibility chain, dropping unit factors.
    pub fn new(factors: Vec<BigInt>, free_rank: usize) -> Result<Self> {
        let factors: Vec<BigInt> = factors.into_iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect();
        if factors.iter().any(|d| d.sign() == num_bigint::Sign::NoSign) {
            return Err(invalid("invariant factors must be nonzero"));
        }
        if factors.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(invalid("invariant factors must form a divisibility chain"));
        }
        Ok(FinAbGroup { invariant_factors: factors, free_rank })
    }

    pub fn trivial() -> Self {
        FinAbGroup { invariant_factors: Vec::new(), free_rank: 0 }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `Z/2^{e_1} + Z/2^{e_2} + ...` with `e_1 >= e_2 >= ... >= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoGroup {
    exponents: Vec<u64>,
}

impl TwoGroup {
    /// Normalizes: zero exponents are dropped, the rest sorted descending.
    pub fn new(mut exponents: Vec<u64>) -> Self {
        exponents.retain(|&e| e > 0);
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        TwoGroup { exponents }
    }

    pub fn trivial() -> Self {
        TwoGroup::default()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn summands(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponents.len() <= 1
    }

    /// Invariant factors `2^{e}` in ascending (divisibility) order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.exponents.iter().rev().map(|&e| BigInt::one() << e as usize).collect()
    }

    /// log2 of the order.
    pub fn log_order(&self) -> u64 {
        self.exponents.iter().sum()
    }
}

impl fmt::Display for TwoGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.exponents.iter().map(|e| format!("Z/2^{e}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Abelian group presented by `m`: rows are relations, columns generators.
pub fn cokernel(m: &IntMatrix) -> FinAbGroup {
    let snf = smith_normal_form(m);
    FinAbGroup::new(snf.diagonal, m.cols() - snf.rank).expect("SNF diagonal is a divisibility chain")
}

/// Kernel of `m` acting on `(Q/Z)^cols`, as `Z/d_i` summands plus a count of
/// `Q/Z` summands stored in `free_rank`.
///
/// Read off the Smith form: a diagonal entry `d` contributes the `d`-torsion
/// of `Q/Z`, a zero column contributes all of `Q/Z`.
pub fn qz_kernel(m: &IntMatrix) -> FinAbGroup {
    let snf = smith_normal_form(m);
    let qz_summands = m.cols() - snf.rank;
    FinAbGroup::new(snf.diagonal, qz_summands).expect("SNF diagonal is a divisibility chain")
}

/// 2-primary part of a finite group.
pub fn two_primary(g: &FinAbGroup) -> Result<TwoGroup> {
    if !g.is_finite() {
        return Err(Error::NotFinite(g.free_rank));
    }
    Ok(two_primary_torsion(g))
}

/// 2-primary part of the torsion subgroup, ignoring any free summands.
pub fn two_primary_torsion(g: &FinAbGroup) -> TwoGroup {
    TwoGroup::new(g.invariant_factors.iter().filter_map(|d| nu(d).finite()).collect())
}

/// `#{v in (Z/N)^cols : m v = 0 mod N}` by enumeration; `None` if there are
/// more than `limit` vectors to try.
pub fn kernel_count_mod(m: &IntMatrix, modulus: u64, limit: u64) -> Option<u64> {
    let total = modulus.checked_pow(m.cols() as u32).filter(|&t| t <= limit)?;
    let big_mod = BigInt::from(modulus);
    let reduced: Vec<Vec<u64>> = m
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&big_mod).try_into().unwrap_or(0)).collect())
        .collect();
    let mut v = vec![0u64; m.cols()];
    let mut count = 0;
    for mut code in 0..total {
        for slot in v.iter_mut() {
            *slot = code % modulus;
            code /= modulus;
        }
        if reduced.iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b % modulus).sum::<u64>() % modulus == 0) {
            count += 1;
        }
    }
    Some(count)
}

/// Compares the `Q/Z` kernel of `m` with the cokernel (they are Pontryagin
/// dual) and counts `N`-torsion of the kernel directly for small `N`.
pub fn duality_mismatch(m: &IntMatrix) -> Option<String> {
    let (coker, dual) = (cokernel(m), qz_kernel(m));
    if coker.invariant_factors() != dual.invariant_factors() || coker.free_rank() != dual.free_rank() {
        return Some(format!("cokernel {coker} vs Q/Z kernel {dual}"));
    }
    for modulus in 2..=5u64 {
        let Some(count) = kernel_count_mod(m, modulus, 1 << 16) else { continue };
        let mut expect = BigInt::from(modulus).pow(dual.free_rank() as u32);
        for d in dual.invariant_factors() {
            expect *= d.gcd(&BigInt::from(modulus));
        }
        if BigInt::from(count) != expect {
            return Some(format!("{count} kernel vectors mod {modulus}, expected {expect}"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cokernel_examples() {
        let g = cokernel(&IntMatrix::from_i64_rows(&[&[2, 0]]).unwrap());
        assert_eq!(g.invariant_factors(), big(&[2]).as_slice());
        assert_eq!(g.free_rank(), 1);

        let g = cokernel(&IntMatrix::zeros(0, 3));
        assert_eq!((g.invariant_factors().len(), g.free_rank()), (0, 3));

        assert_eq!(cokernel(&IntMatrix::from_i64_rows(&[&[1]]).unwrap()), FinAbGroup::trivial());
    }

    #[test]
    fn zero_rows_do_not_matter() {
        let a = IntMatrix::from_i64_rows(&[&[4, 6], &[2, 8]]).unwrap();
        let stacked = IntMatrix::vstack(&[&a, &IntMatrix::zeros(3, 2)]).unwrap();
        assert_eq!(cokernel(&a), cokernel(&stacked));
    }

    #[test]
    fn qz_kernel_examples() {
        let g = qz_kernel(&IntMatrix::from_i64_rows(&[&[6]]).unwrap());
        assert_eq!(g.invariant_factors(), big(&[6]).as_slice());
        assert_eq!(g.free_rank(), 0);
        let g = qz_kernel(&IntMatrix::zeros(1, 1));
        assert_eq!((g.invariant_factors().len(), g.free_rank()), (0, 1));
    }

    #[test]
    fn two_primary_examples() {
        let tp = |f: &[i64]| two_primary(&FinAbGroup::new(big(f), 0).unwrap()).unwrap();
        assert_eq!(tp(&[2, 12]).exponents(), &[2, 1]);
        assert_eq!(tp(&[3, 9]).exponents(), &[] as &[u64]);
        assert_eq!(tp(&[8]).exponents(), &[3]);
        let free = FinAbGroup::new(big(&[2]), 1).unwrap();
        assert_eq!(two_primary(&free), Err(Error::NotFinite(1)));
        assert_eq!(two_primary_torsion(&free).exponents(), &[1]);
    }

    #[test]
    fn group_normalization() {
        let g = FinAbGroup::new(big(&[1, 1, -2, 4]), 0).unwrap();
        assert_eq!(g.invariant_factors(), big(&[2, 4]).as_slice());
        assert!(FinAbGroup::new(big(&[2, 3]), 0).is_err());
        assert_eq!(TwoGroup::new(vec![3, 0, 5]).exponents(), &[5, 3]);
        assert_eq!(TwoGroup::new(vec![3, 5]).invariant_factors(), big(&[8, 32]));
        assert_eq!(TwoGroup::new(vec![5, 4]).to_string(), "Z/2^5 + Z/2^4");
    }

    #[test]
    fn kernel_counts() {
        // 2x = 0 in Z/4 has two solutions; no Q/Z summand
        let m = IntMatrix::from_i64_rows(&[&[2]]).unwrap();
        assert_eq!(kernel_count_mod(&m, 4, 100), Some(2));
        assert_eq!(kernel_count_mod(&m, 4, 3), None);
        assert!(duality_mismatch(&m).is_none());
        let z = IntMatrix::from_i64_rows(&[&[0, 3]]).unwrap();
        assert_eq!(kernel_count_mod(&z, 3, 100), Some(9));
        assert!(duality_mismatch(&z).is_none());
    }
}
