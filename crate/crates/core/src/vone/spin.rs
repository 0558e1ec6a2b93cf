//! `v^{2m}(Spin(2n+1))` by closed form, relation matrix, elimination and the
//! full presentation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::esp::esp_oracle;
use super::relations::{comb_relations, r3_sum, RelationPair};
use crate::adamsmodules::{presentation, ModuleSpec, Variant};
use crate::error::{invalid, Error, Result};
use crate::exactmath::{binom, nu, pow_u, sigma, Valuation};
use crate::intlinalg::{cokernel, two_primary, IntMatrix, TwoGroup};

fn need_n3(m: u32, n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "the two-generator description needs n >= 3, got n={n}"
        )));
    }
    if m == 0 {
        return Err(invalid("m must be at least 1"));
    }
    Ok(())
}

fn esp_exponent(m: u32, n: u32) -> Result<u64> {
    esp_oracle(m, n)?
        .finite()
        .ok_or_else(|| Error::Consistency(format!("eSp({m},{n}) is infinite")))
}

/// `Z/8 + Z/2^{e(m)}` exponent for `Spin(9)`, `m` odd.
pub fn spin9_exponent(m: u32) -> u64 {
    let m = i64::from(m);
    if m % 4 == 1 {
        (nu(&BigInt::from(m - 5)) + 2).capped(6)
    } else {
        (nu(&BigInt::from(m - 7)) + 2).capped(8)
    }
}

/// Closed form. Requires `n >= 3` and `m > n^2`.
pub fn v_spin_closed(m: u32, n: u32) -> Result<TwoGroup> {
    if n == 2 {
        return Err(Error::Unsupported("no closed form for Spin(5)".into()));
    }
    need_n3(m, n)?;
    if u64::from(m) <= u64::from(n) * u64::from(n) {
        return Err(Error::Unsupported(format!("closed form needs m > n^2, got m={m}, n={n}")));
    }
    if m.is_multiple_of(2) {
        return Ok(TwoGroup::new(vec![1, 1]));
    }
    if n == 4 {
        return Ok(TwoGroup::new(vec![3, spin9_exponent(m)]));
    }
    let e2 = (nu(&BigInt::from(m + 1)) + 2).capped(n.into());
    let rel = comb_relations(m, n)?;
    let big_r1 = &rel.r1.xi1_coef - (&rel.r2.xi1_coef << 1usize);
    let two_2n = BigInt::one() << (2 * n as usize);
    let numer: BigInt = ((&two_2n << 1usize) - pow_u(3, m + 1) + 1) * &rel.r2.xi1_coef
        - two_2n * 3 * r3_sum(m, n);
    let divisor = BigInt::one() << e2 as usize;
    let (big_r2, rem) = numer.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(Error::IntegralityViolation {
            context: format!("closed form R_2 for m={m}, n={n}"),
            numerator: numer,
            divisor,
        });
    }
    let e1 = Valuation::min_of([Valuation::Finite(esp_exponent(m, n)?), nu(&big_r1), nu(&big_r2)]);
    let e1 = e1.finite().ok_or_else(|| Error::Consistency("closed form e1 is infinite".into()))?;
    Ok(TwoGroup::new(vec![e1, e2]))
}

/// Rows `[(−1 − (−1)^m), 0]` and `[0, (−1 − (−1)^m)]` from `ψ^{-1} − (−1)^m`.
fn minus_one_rows(m: u32) -> [Vec<BigInt>; 2] {
    let c = BigInt::from(if m.is_multiple_of(2) { -2 } else { 0 });
    [vec![c.clone(), BigInt::zero()], vec![BigInt::zero(), c]]
}

fn two_gen_group(mut rows: Vec<Vec<BigInt>>, m: u32) -> Result<TwoGroup> {
    rows.extend(minus_one_rows(m));
    two_primary(&cokernel(&IntMatrix::from_rows_with_cols(rows, 2)?))
}

/// Cokernel of `2^{eSp} ξ_1` and `r1, r2, r3` on `ξ_1, D`.
pub fn v_spin_relations(m: u32, n: u32) -> Result<TwoGroup> {
    need_n3(m, n)?;
    let rel = comb_relations(m, n)?;
    let esp_row = vec![BigInt::one() << esp_exponent(m, n)? as usize, BigInt::zero()];
    two_gen_group(vec![esp_row, rel.r1.row(), rel.r2.row(), rel.r3.row()], m)
}

/// Intermediate quantities of [`v_spin_algorithm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgorithmTrace {
    /// Coefficient of `ξ_n` after reducing `ψ^2(2^{n+1} D)` below `ξ_{n+1}`.
    pub psi2_lead: BigInt,
    pub dreln: RelationPair,
    pub rel2: RelationPair,
    pub rel3: RelationPair,
    pub esp: u64,
    pub group: TwoGroup,
}

/// Sparse vector over `ξ_0, ..., ξ_len` plus a trailing `D` slot.
struct Elim {
    n: usize,
    xi: Vec<BigInt>,
    d: BigInt,
}

impl Elim {
    fn new(n: usize, len: usize) -> Self {
        Elim { n, xi: vec![BigInt::zero(); len + 1], d: BigInt::zero() }
    }

    /// `v -= c * lead * rel` where `rel(k)` gives the coefficient of `ξ_k`
    /// and the relation's leading coefficient `lead` at `ξ_j` is `±1`.
    fn kill(&mut self, j: usize, lead: i64, rel: impl Fn(i64) -> BigInt) {
        let c = std::mem::take(&mut self.xi[j]);
        if c.is_zero() {
            return;
        }
        let c = c * lead;
        for k in 1..j {
            let r = rel(k as i64);
            if !r.is_zero() {
                self.xi[k] -= &c * r;
            }
        }
    }

    fn kill_r(&mut self, j: usize) {
        let top = 2 * self.n as i64 + 1;
        let ji = j as i64;
        let lead = if j % 2 == 1 { 1 } else { -1 };
        self.kill(j, lead, |k| {
            let c = binom(top, ji - k) - binom(top, top - ji - k);
            if k % 2 == 1 {
                c
            } else {
                -c
            }
        });
    }

    fn kill_s(&mut self, j: usize) {
        let ji = j as i64;
        let lead = if j.is_multiple_of(2) { 1 } else { -1 };
        self.kill(j, lead, |k| {
            let c = binom(ji, k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        });
    }

    /// `v += c * (2^{n+1} D + (−1)^n ξ_n + sum_{k<n} (−1)^k σ_{n-k} ξ_k)` with
    /// `c` chosen to clear `ξ_n`.
    fn kill_xi_n(&mut self) {
        let n = self.n;
        let a = std::mem::take(&mut self.xi[n]);
        let c = if n.is_multiple_of(2) { -a } else { a };
        self.d += &c << (n + 1);
        for k in 1..n {
            let term = &c * sigma((n - k) as i64, n as u32);
            if k % 2 == 0 {
                self.xi[k] += term;
            } else {
                self.xi[k] -= term;
            }
        }
    }

    /// Divides by `2^{n+1}` and applies `ξ_k -> k^m ξ_1` (odd `k`), `ξ_k -> 0` (even `k`).
    fn collapse(&self, m: u32, what: &str) -> Result<RelationPair> {
        let divisor = BigInt::one() << (self.n + 1);
        let exact = |x: &BigInt| -> Result<BigInt> {
            let (q, r) = x.div_rem(&divisor);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::IntegralityViolation {
                    context: what.to_string(),
                    numerator: x.clone(),
                    divisor: divisor.clone(),
                })
            }
        };
        let mut xi1 = BigInt::zero();
        for (k, c) in self.xi.iter().enumerate().skip(1) {
            let q = exact(c)?;
            if k % 2 == 1 {
                xi1 += q * pow_u(k as i64, m);
            }
        }
        Ok(RelationPair::new(xi1, exact(&self.d)?))
    }
}

/// Elimination algorithm, returning every intermediate relation.
pub fn v_spin_algorithm_trace(m: u32, n: u32) -> Result<AlgorithmTrace> {
    need_n3(m, n)?;
    let nu_ = n as usize;
    let sig = |k: usize| -> BigInt {
        let s = sigma((nu_ - k) as i64, n);
        if k % 2 == 1 {
            s
        } else {
            -s
        }
    };

    // ψ^2(2^{n+1} D)
    let mut e2 = Elim::new(nu_, 2 * nu_);
    for k in 1..=nu_ {
        e2.xi[2 * k] = sig(k);
    }
    for j in (nu_ + 1..=2 * nu_).rev() {
        e2.kill_r(j);
    }
    let psi2_lead = e2.xi[nu_].clone();
    let expect = BigInt::one() << nu_;
    let expect = if nu_ % 2 == 1 { expect } else { -expect };
    if psi2_lead != expect {
        return Err(Error::Consistency(format!(
            "ψ^2(2^{{n+1}}D) has ξ_n coefficient {psi2_lead}, expected {expect}"
        )));
    }
    e2.kill_xi_n();
    let rel2 = e2.collapse(m, "ψ^2(D)")?;

    // ψ^3(2^{n+1} D)
    let mut e3 = Elim::new(nu_, 3 * nu_);
    for k in 1..=nu_ {
        e3.xi[3 * k] = sig(k);
    }
    for j in (2 * nu_ + 1..=3 * nu_).rev() {
        e3.kill_s(j);
    }
    for j in (nu_ + 1..=2 * nu_).rev() {
        e3.kill_r(j);
    }
    e3.kill_xi_n();
    let psi3 = e3.collapse(m, "ψ^3(D)")?;
    let rel3 = RelationPair::new(-psi3.xi1_coef, pow_u(3, m) - psi3.d_coef);

    let dreln = RelationPair::new(
        -super::relations::r1_sum(m, n),
        BigInt::one() << (nu_ + 1),
    );
    let esp = esp_exponent(m, n)?;
    let esp_row = vec![BigInt::one() << esp as usize, BigInt::zero()];
    let group = two_gen_group(vec![dreln.row(), esp_row, rel2.row(), rel3.row()], m)?;
    Ok(AlgorithmTrace { psi2_lead, dreln, rel2, rel3, esp, group })
}

pub fn v_spin_algorithm(m: u32, n: u32) -> Result<TwoGroup> {
    Ok(v_spin_algorithm_trace(m, n)?.group)
}

/// 2-primary cokernel of the full presentation of `PK^1(Spin(2n+1))`.
pub fn v_spin_oracle(m: u32, n: u32, variant: Variant) -> Result<TwoGroup> {
    if m == 0 {
        return Err(invalid("m must be at least 1"));
    }
    two_primary(&cokernel(&presentation(m, ModuleSpec::spin(n)?, variant)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(e: &[u64]) -> TwoGroup {
        TwoGroup::new(e.to_vec())
    }

    #[test]
    fn examples() {
        for (m, n, expect) in [(27, 5, g(&[5, 4])), (39, 6, g(&[8, 5])), (17, 4, g(&[4, 3]))] {
            assert_eq!(v_spin_closed(m, n).unwrap(), expect);
            assert_eq!(v_spin_relations(m, n).unwrap(), expect);
            assert_eq!(v_spin_algorithm(m, n).unwrap(), expect);
            assert_eq!(v_spin_oracle(m, n, Variant::V).unwrap(), expect);
        }
    }

    #[test]
    fn even_m() {
        for n in 3..=5 {
            for m in [n * n + 1, n * n + 2].into_iter().filter(|m| m % 2 == 0) {
                assert_eq!(v_spin_closed(m, n).unwrap(), g(&[1, 1]));
                assert_eq!(v_spin_relations(m, n).unwrap(), g(&[1, 1]));
                assert_eq!(v_spin_algorithm(m, n).unwrap(), g(&[1, 1]));
                assert_eq!(v_spin_oracle(m, n, Variant::V).unwrap(), g(&[1, 1]));
            }
        }
    }

    #[test]
    fn algorithm_matches_comb_relations() {
        for n in 3..=8 {
            for m in (1..=n * n + 20).step_by(2) {
                let t = v_spin_algorithm_trace(m, n).unwrap();
                let c = comb_relations(m, n).unwrap();
                assert_eq!(t.rel2, -c.r2.clone(), "m={m} n={n}");
                assert_eq!(t.rel3, c.r3, "m={m} n={n}");
                assert_eq!(t.dreln, -c.r1, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn rejections() {
        assert!(matches!(v_spin_closed(27, 2), Err(Error::Unsupported(_))));
        assert!(matches!(v_spin_closed(25, 5), Err(Error::Unsupported(_))));
        assert!(v_spin_relations(27, 2).is_err());
        assert!(v_spin_oracle(27, 1, Variant::V).is_err());
    }

    #[test]
    fn spin9_formula() {
        assert_eq!(spin9_exponent(17), 4);
        assert_eq!(spin9_exponent(5 + 64), 6);
        assert_eq!(spin9_exponent(7 + 256), 8);
        assert_eq!(spin9_exponent(19), 4);
    }
}
