//! Exhaustive grid checks of the binomial identities behind the closed forms.
//!
//! Every check is a pure predicate over an explicit grid; a report carries the
//! first failing cell in grid order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::adamsmodules::{module, ModuleSpec};
use crate::exactmath::{binom, binom_nat, sigma, IntSeries};
use crate::vone::{comb_relations, fast_r1_coef, fast_r2_coef, inner_sum, r1_sum, r2_sum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub grid: String,
    pub cases: usize,
    pub counterexample: Option<String>,
    /// Observations that are reported but not asserted.
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} [{}] {} cases", self.name, self.grid, self.cases),
            Some(c) => write!(f, "FAIL {} [{}] first counterexample: {c}", self.name, self.grid),
        }
    }
}

fn run_grid<T, F>(name: &str, grid: String, cells: Vec<T>, check: F) -> IdentityReport
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    let failures: Vec<Option<String>> = cells.par_iter().map(&check).collect();
    IdentityReport {
        name: name.to_string(),
        grid,
        cases: cells.len(),
        counterexample: failures.into_iter().flatten().next(),
        notes: Vec::new(),
    }
}

fn signed(x: BigInt, negative: bool) -> BigInt {
    if negative {
        -x
    } else {
        x
    }
}

fn c(n: i64, i: i64) -> BigInt {
    binom_nat(2 * n + 1, i)
}

fn d(n: i64, i: i64) -> BigInt {
    if i < 0 {
        BigInt::zero()
    } else {
        binom(2 * n + i, i)
    }
}

fn odd(k: i64) -> bool {
    k.rem_euclid(2) == 1
}

/// `sum_{j=0}^{m} (-1)^j d_j c_{m-j} = 0` for `1 <= m <= max_m`, `1 <= n <= max_n`.
pub fn check_zero_identity(max_m: i64, max_n: i64) -> IdentityReport {
    let cells: Vec<(i64, i64)> = (1..=max_n).flat_map(|n| (1..=max_m).map(move |m| (n, m))).collect();
    run_grid("zero", format!("m<={max_m}, n<={max_n}"), cells, |&(n, m)| {
        let s: BigInt = (0..=m).map(|j| signed(d(n, j) * c(n, m - j), odd(j))).sum();
        (!s.is_zero()).then(|| format!("n={n} m={m}: sum={s}"))
    })
}

type Mat = Vec<Vec<BigInt>>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..r)
        .map(|i| (0..c).map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum()).collect())
        .collect()
}

/// The `n x 2n` matrix of `(-1)^i R_{2n+1-i}` in the columns `ξ_{2n}, ..., ξ_1`.
fn relation_matrix(n: i64) -> Mat {
    let top = 2 * n + 1;
    (1..=n)
        .map(|i| {
            let big_j = top - i;
            (1..=2 * n)
                .map(|j| {
                    let k = top - j;
                    if k > big_j {
                        return BigInt::zero();
                    }
                    let r = signed(binom(top, big_j - k) - binom(top, top - big_j - k), !odd(k));
                    signed(r, odd(i))
                })
                .collect()
        })
        .collect()
}

/// `M_{i,j} = (-1)^{j-i} c_{j-i} - (-1)^{i+j} c_{j+i-2n-1}`, 1-based.
fn m_entry(n: i64, i: i64, j: i64) -> BigInt {
    signed(c(n, j - i), odd(j - i)) - signed(c(n, j + i - 2 * n - 1), odd(i + j))
}

struct DcParts {
    ml: Mat,
    mr: Mat,
    ml_inv: Mat,
}

fn dc_parts(n: i64) -> DcParts {
    let m: Mat = (1..=n).map(|i| (1..=2 * n).map(|j| m_entry(n, i, j)).collect()).collect();
    let split = n as usize;
    DcParts {
        ml: m.iter().map(|r| r[..split].to_vec()).collect(),
        mr: m.iter().map(|r| r[split..].to_vec()).collect(),
        ml_inv: (0..n).map(|i| (0..n).map(|j| d(n, j - i)).collect()).collect(),
    }
}

/// `D_j` (column, entries `t = 1..n`) and `C_j` (row, entries `s = 1..n`).
fn d_col(n: i64, j: i64) -> Vec<BigInt> {
    (1..=n).map(|t| d(n, n + 1 - t - j) - d(n, n + j - t)).collect()
}

fn c_row(n: i64, j: i64) -> Vec<BigInt> {
    (1..=n).map(|s| signed(c(n, s - j), odd(s - j))).collect()
}

fn dcsum_case(n: i64) -> Option<String> {
    let full: Mat = (1..=n).map(|i| (1..=2 * n).map(|j| m_entry(n, i, j)).collect()).collect();
    if full != relation_matrix(n) {
        return Some(format!("n={n}: entry formula disagrees with the relations"));
    }
    let p = dc_parts(n);
    let nu = n as usize;
    for i in 0..nu {
        for j in 0..nu {
            let expect = if i == j { BigInt::one() } else { BigInt::zero() };
            if j < i && !p.ml[i][j].is_zero() || j == i && p.ml[i][j] != expect {
                return Some(format!("n={n}: M_L is not upper unitriangular at ({i},{j})"));
            }
        }
    }
    let prod = mat_mul(&p.ml, &p.ml_inv);
    if (0..nu).any(|i| (0..nu).any(|j| prod[i][j] != BigInt::from(u8::from(i == j)))) {
        return Some(format!("n={n}: M_L (d_(j-i)) != I"));
    }
    let lhs = mat_mul(&p.ml_inv, &p.mr);
    let mut rhs = vec![vec![BigInt::zero(); nu]; nu];
    for j in 1..=n {
        let (dc, cr) = (d_col(n, j), c_row(n, j));
        for t in 0..nu {
            for s in 0..nu {
                rhs[t][s] += &dc[t] * &cr[s];
            }
        }
    }
    (lhs != rhs).then(|| format!("n={n}: M_L^-1 M_R != sum D_j C_j"))
}

/// `M_L^{-1} M_R = sum_j D_j C_j` and `M_L (d_{j-i}) = I` for `1 <= n <= max_n`.
pub fn check_dcsum(max_n: i64) -> IdentityReport {
    run_grid("dcsum", format!("n<={max_n}"), (1..=max_n).collect(), |&n| dcsum_case(n))
}

/// `P`, length `2n`, with `(2j+1)`st entry `(-1)^{n+1+j} σ_j` and zeros elsewhere.
fn p_vec(n: i64) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); 2 * n as usize];
    for j in 0..n {
        p[2 * j as usize] = signed(sigma(j, n as u32), odd(n + 1 + j));
    }
    p
}

fn pd_lhs(n: i64, j: i64) -> BigInt {
    let p = p_vec(n);
    let dc = d_col(n, j);
    -(0..n as usize).map(|t| &p[t] * &dc[t]).sum::<BigInt>()
}

fn pd_rhs(n: i64, j: i64) -> BigInt {
    let e = (n - 1) / 2;
    let mut acc = signed(BigInt::one() << n as usize, odd((j - 1).div_euclid(2)));
    for u in 1..=j / 2 {
        acc += signed(sigma(e + u, n as u32) * d(n, j - 2 * u), odd(e + u + 1));
    }
    acc
}

/// `E = P_R - P_L M_L^{-1} M_R` against `(-1)^{n+1} 2^n sum_j (-1)^j c_j V_j`.
fn vec_case(n: i64) -> Option<String> {
    let p = p_vec(n);
    let parts = dc_parts(n);
    let x = mat_mul(&parts.ml_inv, &parts.mr);
    let nu = n as usize;
    for t in 0..nu {
        let e: BigInt = &p[nu + t] - (0..nu).map(|i| &p[i] * &x[i][t]).sum::<BigInt>();
        let mut expect = BigInt::zero();
        for j in 0..=t {
            let v = if (t - j) % 4 < 2 { 1 } else { -1 };
            expect += signed(c(n, j as i64) * v, odd(j as i64));
        }
        let expect = signed(expect << nu, odd(n + 1));
        if e != expect {
            return Some(format!("n={n} t={t}: E={e}, expected {expect}"));
        }
    }
    None
}

/// Odd-`n` product formula for `-P_L D_j`, the vector form of `E` for every
/// `n`, and the alternating sum `sum_i ± C(2n+1, n-i) = 2^n` for `n <= max_alt`.
pub fn check_pd(max_n: i64, max_alt: i64) -> IdentityReport {
    let cells: Vec<(i64, i64)> = (1..=max_n)
        .step_by(2)
        .flat_map(|n| (1..=n).map(move |j| (n, j)))
        .collect();
    let mut report = run_grid("pd", format!("odd n<={max_n}, 1<=j<=n"), cells, |&(n, j)| {
        let (l, r) = (pd_lhs(n, j), pd_rhs(n, j));
        (l != r).then(|| format!("n={n} j={j}: lhs={l} rhs={r}"))
    });
    let vec_report = run_grid("pd-vector", String::new(), (1..=max_n).collect(), |&n| vec_case(n));
    let alt = run_grid("pd-alternating", String::new(), (0..=max_alt).collect(), |&n| {
        let s: BigInt = (0..=n).map(|i| signed(binom(2 * n + 1, n - i), matches!(i % 4, 1 | 2))).sum();
        (s != BigInt::one() << n as usize).then(|| format!("alternating sum n={n}: {s}"))
    });
    report.grid = format!("odd n<={max_n}; vector form n<={max_n}; alternating sum n<={max_alt}");
    report.cases += vec_report.cases + alt.cases;
    report.counterexample = report.counterexample.or(vec_report.counterexample).or(alt.counterexample);
    for n in (2..=max_n).step_by(2) {
        let hits = (1..=n).filter(|&j| pd_lhs(n, j) == pd_rhs(n, j)).count();
        report.notes.push(format!("even n={n}: odd-n formula matches at {hits} of {n} indices"));
    }
    report
}

/// `sum_j (-1)^j C(n-j, j) 4^{n-2j} C(2j-1, j-A) = (-1)^A sum_t C(2n+2, n-2A-4t)`.
pub fn check_afor(max_n: i64, a_range: (i64, i64)) -> IdentityReport {
    let cells: Vec<(i64, i64)> = (0..=max_n).flat_map(|n| (a_range.0..=a_range.1).map(move |a| (n, a))).collect();
    run_grid("afor", format!("n<={max_n}, A in [{}, {}]", a_range.0, a_range.1), cells, |&(n, a)| {
        let lhs: BigInt = (0..=n / 2)
            .map(|j| signed(binom(n - j, j) * (BigInt::one() << (2 * (n - 2 * j)) as usize) * binom(2 * j - 1, j - a), odd(j)))
            .sum();
        let mut rhs = BigInt::zero();
        let mut k = n - 2 * a;
        while k >= 0 {
            rhs += binom_nat(2 * n + 2, k);
            k -= 4;
        }
        let rhs = signed(rhs, odd(a));
        (lhs != rhs).then(|| format!("n={n} A={a}: lhs={lhs} rhs={rhs}"))
    })
}

/// `sum_s (-1)^s C(n+s-1-w, s) C(3n-w, 2n-s) C(3n-s+v, 2n) = C(4n-w+v, 2n)`.
pub fn check_binomlem(max_n: i64, vw: (i64, i64)) -> IdentityReport {
    let cells: Vec<(i64, i64, i64)> = (0..=max_n)
        .flat_map(|n| (vw.0..=vw.1).flat_map(move |v| (vw.0..=vw.1).map(move |w| (n, v, w))))
        .collect();
    run_grid("binomlem", format!("n<={max_n}, v,w in [{}, {}]", vw.0, vw.1), cells, |&(n, v, w)| {
        let lhs: BigInt = (0..=2 * n)
            .map(|s| signed(binom(n + s - 1 - w, s) * binom(3 * n - w, 2 * n - s) * binom(3 * n - s + v, 2 * n), odd(s)))
            .sum();
        let rhs = binom(4 * n - w + v, 2 * n);
        (lhs != rhs).then(|| format!("n={n} v={v} w={w}: lhs={lhs} rhs={rhs}"))
    })
}

/// With `f_m = (1-x+x^2)^{m+1}/(1-x^3)`, the sum of the coefficients of
/// `x^{m-j-1}` and `x^{m+j}` is `(1+2(-2)^{m+1})/3` for `j = 1 mod 3` and
/// `(1+2(-2)^m)/3` otherwise.
pub fn check_sym(max_m: i64, max_j: i64) -> IdentityReport {
    let cells: Vec<i64> = (0..=max_m).collect();
    run_grid("sym", format!("m<={max_m}, j<={max_j}"), cells, |&m| {
        let prec = (m + max_j + 1) as usize;
        let num = IntSeries::from_i64(&[1, -1, 1], prec).pow((m + 1) as u32);
        let f = match num.div_exact(&IntSeries::from_i64(&[1, 0, 0, -1], prec)) {
            Ok(f) => f,
            Err(e) => return Some(format!("m={m}: {e}")),
        };
        let third = |e: i64| -> BigInt {
            let p = num_traits::pow(BigInt::from(-2), e as usize);
            (p * 2 + 1) / 3
        };
        for j in 0..=max_j {
            let got = f.coeff(m - j - 1) + f.coeff(m + j);
            let expect = if j % 3 == 1 { third(m + 1) } else { third(m) };
            if got != expect {
                return Some(format!("m={m} j={j}: got {got}, expected {expect}"));
            }
        }
        None
    })
}

/// `sum_{t=0}^{j-2} (-1)^t C(2j-1,t)(2j-2t-1) C(j-t,2)^i = 0` for `1 <= i <= j-2`.
pub fn check_vanishing(max_j: i64) -> IdentityReport {
    let cells: Vec<(i64, u32)> = (3..=max_j).flat_map(|j| (1..=(j - 2) as u32).map(move |i| (j, i))).collect();
    run_grid("vanishing", format!("3<=j<={max_j}"), cells, |&(j, i)| {
        let s = inner_sum(j, i);
        (!s.is_zero()).then(|| format!("j={j} i={i}: {s}"))
    })
}

/// Expansions of the ξ_1-coefficients of `r1`, `r2` against direct sums,
/// `m = 2a + 1`.
pub fn check_fast_coefs(max_a: u32, max_n: u32) -> IdentityReport {
    let cells: Vec<(u32, u32)> = (2..=max_n).flat_map(|n| (0..=max_a).map(move |a| (n, a))).collect();
    run_grid("fast-coefs", format!("a<={max_a}, 2<=n<={max_n}"), cells, |&(n, a)| {
        let m = 2 * a + 1;
        let (f1, f2) = (fast_r1_coef(a, n).ok()?, fast_r2_coef(a, n).ok()?);
        let (s1, s2) = (r1_sum(m, n), r2_sum(m, n));
        if f1 != s1 {
            return Some(format!("r1 n={n} a={a}: expansion {f1}, direct {s1}"));
        }
        (f2 != s2).then(|| format!("r2 n={n} a={a}: expansion {f2}, direct {s2}"))
    })
}

/// Solves `T X = B` for upper unitriangular integer `T`.
fn solve_unitri(t: &Mat, b: &Mat) -> Mat {
    let n = t.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut x = vec![vec![BigInt::zero(); cols]; n];
    for i in (0..n).rev() {
        for c in 0..cols {
            let mut v = b[i][c].clone();
            for k in i + 1..n {
                v -= &t[i][k] * &x[k][c];
            }
            x[i][c] = v;
        }
    }
    x
}

/// Row for relation `rel` (coefficient of `ξ_k` via `coef(k)`) with top index
/// `big_j`, in columns `ξ_{3n}, ..., ξ_1`.
fn n_row(n: i64, big_j: i64, coef: impl Fn(i64) -> BigInt) -> Vec<BigInt> {
    (1..=3 * n)
        .map(|col| {
            let k = 3 * n + 1 - col;
            if k > big_j {
                BigInt::zero()
            } else {
                coef(k)
            }
        })
        .collect()
}

fn q2_case(n: i64) -> Option<String> {
    let top = 2 * n + 1;
    let nu = n as usize;
    let mut rows: Mat = Vec::with_capacity(2 * nu);
    for i in 1..=2 * n {
        let big_j = 3 * n + 1 - i;
        let row = if i <= n {
            n_row(n, big_j, |k| signed(binom(big_j, k), odd(k)))
        } else {
            n_row(n, big_j, |k| signed(binom(top, big_j - k) - binom(top, top - big_j - k), !odd(k)))
        };
        rows.push(row);
    }
    for (i, r) in rows.iter_mut().enumerate() {
        if r[..i].iter().any(|x| !x.is_zero()) || !r[i].magnitude().is_one() {
            return Some(format!("n={n}: row {i} of N has no unit pivot"));
        }
        if r[i] < BigInt::zero() {
            r.iter_mut().for_each(|x| *x = -std::mem::take(x));
        }
    }
    let t: Mat = rows.iter().map(|r| r[..2 * nu].to_vec()).collect();
    let b: Mat = rows.iter().map(|r| r[2 * nu..].to_vec()).collect();
    let x = solve_unitri(&t, &b);
    let mut q = vec![BigInt::zero(); 3 * nu];
    for j in 0..n {
        q[3 * j as usize] = signed(sigma(j, n as u32), odd(n + 1 + j));
    }
    let q2: Vec<BigInt> = (0..nu)
        .map(|tt| &q[2 * nu + tt] - (0..2 * nu).map(|i| &q[i] * &x[i][tt]).sum::<BigInt>())
        .collect();
    let two = BigInt::one() << (2 * nu + 1);
    let third = (&two + 1) / 3;
    let closed: Vec<BigInt> = (0..n)
        .map(|tt| {
            let s: BigInt = (0..=tt).filter(|j| (tt - j) % 3 == 1).map(|j| c(n, j)).sum();
            let inner = signed(&third * sigma(tt, n as u32), !odd(tt)) + signed(&two * s, odd(tt));
            signed(inner, odd(n))
        })
        .collect();
    if q2 != closed {
        return Some(format!("n={n}: elimination {q2:?}, closed form {closed:?}"));
    }
    // Third route: ψ^3(2^{n+1} D) through the module's own ξ-reductions.
    let m = module(ModuleSpec::sp(n as u32).ok()?);
    let mut direct = vec![BigInt::zero(); nu];
    for (k, coef) in m.d_expansion().into_iter().enumerate() {
        for (s, v) in direct.iter_mut().zip(m.sp_coords(3 * (k + 1))) {
            *s += &coef * v;
        }
    }
    let reversed: Vec<BigInt> = direct.into_iter().rev().collect();
    (reversed != q2).then(|| format!("n={n}: module reduction {reversed:?}, elimination {q2:?}"))
}

/// Elimination of `ψ^3(2^{n+1} D)` down to `ξ_1..ξ_n` against its closed form.
pub fn check_q2_reduction(n_range: (i64, i64)) -> IdentityReport {
    run_grid(
        "q2-reduction",
        format!("{}<=n<={}", n_range.0, n_range.1),
        (n_range.0..=n_range.1).collect(),
        |&n| q2_case(n),
    )
}

/// For even `m` and `n >= 3` the ξ_1-coefficients of `r1` and `r2` are even.
pub fn check_even_m_parity(max_n: u32, max_m: u32) -> IdentityReport {
    let cells: Vec<(u32, u32)> = (3..=max_n).flat_map(|n| (2..=max_m).step_by(2).map(move |m| (n, m))).collect();
    run_grid("even-m-parity", format!("3<=n<={max_n}, even m<={max_m}"), cells, |&(n, m)| {
        let r = comb_relations(m, n).ok()?;
        let odd_coef = |x: &BigInt| x.bit(0);
        (odd_coef(&r.r1.xi1_coef) || odd_coef(&r.r2.xi1_coef)).then(|| format!("n={n} m={m}: {} / {}", r.r1, r.r2))
    })
}

/// `sum_j x^j B_j = (1+x)^N sum_k (-1)^{k+1} ξ_k x^k` is inverted by dividing
/// by `(1+x)^N`; checked on each basis vector up to `degree`.
pub fn check_b_basis(max_big_n: i64, degree: usize) -> IdentityReport {
    let cells: Vec<(i64, usize)> = (1..=max_big_n).flat_map(|n| (1..=degree).map(move |k| (n, k))).collect();
    run_grid("b-basis", format!("N<={max_big_n}, degree<={degree}"), cells, |&(big_n, k)| {
        let prec = degree + 1;
        let xi = IntSeries::monomial(signed(BigInt::one(), k % 2 == 0), k, prec);
        let scale = IntSeries::one_plus_x_pow(big_n, prec);
        let b = &scale * &xi;
        for j in 0..prec {
            let expect = signed(binom(big_n, j as i64 - k as i64), k % 2 == 0);
            if b.coeff(j as i64) != expect {
                return Some(format!("N={big_n} k={k}: B_{j} coefficient {} vs {expect}", b.coeff(j as i64)));
            }
        }
        match b.div_exact(&scale) {
            Ok(back) if back == xi => None,
            Ok(_) => Some(format!("N={big_n} k={k}: inverse did not return ξ_{k}")),
            Err(e) => Some(format!("N={big_n} k={k}: {e}")),
        }
    })
}

/// Grid sizes for [`run_all`].
#[derive(Clone, Debug)]
pub struct IdentityGrid {
    pub zero: (i64, i64),
    pub dcsum_n: i64,
    pub pd_n: i64,
    pub pd_alt_n: i64,
    pub afor_n: i64,
    pub afor_a: (i64, i64),
    pub binomlem_n: i64,
    pub binomlem_vw: (i64, i64),
    pub sym: (i64, i64),
    pub vanishing_j: i64,
    pub fast: (u32, u32),
    pub q2: (i64, i64),
    pub parity: (u32, u32),
    pub b_basis: (i64, usize),
}

impl Default for IdentityGrid {
    fn default() -> Self {
        IdentityGrid {
            zero: (60, 10),
            dcsum_n: 12,
            pd_n: 13,
            pd_alt_n: 60,
            afor_n: 40,
            afor_a: (-10, 10),
            binomlem_n: 12,
            binomlem_vw: (-6, 6),
            sym: (60, 60),
            vanishing_j: 16,
            fast: (40, 24),
            q2: (3, 8),
            parity: (12, 80),
            b_basis: (13, 30),
        }
    }
}

pub fn run_all(grid: &IdentityGrid) -> Vec<IdentityReport> {
    vec![
        check_zero_identity(grid.zero.0, grid.zero.1),
        check_dcsum(grid.dcsum_n),
        check_pd(grid.pd_n, grid.pd_alt_n),
        check_afor(grid.afor_n, grid.afor_a),
        check_binomlem(grid.binomlem_n, grid.binomlem_vw),
        check_sym(grid.sym.0, grid.sym.1),
        check_vanishing(grid.vanishing_j),
        check_fast_coefs(grid.fast.0, grid.fast.1),
        check_q2_reduction(grid.q2),
        check_even_m_parity(grid.parity.0, grid.parity.1),
        check_b_basis(grid.b_basis.0, grid.b_basis.1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_values() {
        // n=1, m=1: d_0 c_1 - d_1 c_0 = 3 - 3
        assert_eq!(d(1, 0) * c(1, 1) - d(1, 1) * c(1, 0), BigInt::zero());
        // n=2, m=2: 10 - 5*5 + 15
        assert_eq!(d(2, 0) * c(2, 2) - d(2, 1) * c(2, 1) + d(2, 2) * c(2, 0), BigInt::zero());
        assert_eq!(pd_lhs(1, 1), BigInt::from(2));
        assert_eq!(pd_rhs(1, 1), BigInt::from(2));
        assert_eq!(inner_sum(3, 1), BigInt::zero());
    }

    #[test]
    fn dcsum_n1_by_hand() {
        // n=1: M = [1, -3 + 1]; D_1 = d_0 - d_1 = -2, C_1 = c_0 = 1
        let p = dc_parts(1);
        assert_eq!(p.ml, vec![vec![BigInt::one()]]);
        assert_eq!(p.mr, vec![vec![BigInt::from(-2)]]);
        assert_eq!(d_col(1, 1), vec![BigInt::from(-2)]);
        assert!(dcsum_case(1).is_none());
    }

    #[test]
    fn small_grids_pass() {
        let grid = IdentityGrid {
            zero: (20, 4),
            dcsum_n: 5,
            pd_n: 7,
            pd_alt_n: 20,
            afor_n: 10,
            afor_a: (-4, 4),
            binomlem_n: 4,
            binomlem_vw: (-3, 3),
            sym: (12, 12),
            vanishing_j: 9,
            fast: (8, 8),
            q2: (3, 6),
            parity: (6, 20),
            b_basis: (5, 10),
        };
        for r in run_all(&grid) {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0, "{r}");
        }
    }

    #[test]
    fn detects_a_broken_identity() {
        let r = run_grid("broken", "x".into(), vec![1, 2, 3], |&x| (x == 2).then(|| "x=2".to_string()));
        assert_eq!(r.counterexample.as_deref(), Some("x=2"));
        assert!(r.to_string().starts_with("FAIL"));
    }

    #[test]
    fn printed_plus_sign_fails_dcsum() {
        let n = 3;
        let plus = |i: i64, j: i64| signed(c(n, j - i), odd(j - i)) + signed(c(n, j + i - 2 * n - 1), odd(i + j));
        let mr: Mat = (1..=n).map(|i| (n + 1..=2 * n).map(|j| plus(i, j)).collect()).collect();
        let inv: Mat = (0..n).map(|i| (0..n).map(|j| d(n, j - i)).collect()).collect();
        assert_ne!(mat_mul(&inv, &mr), mat_mul(&dc_parts(n).ml_inv, &dc_parts(n).mr));
    }
}
