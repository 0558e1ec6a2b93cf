//! Integral models of the Adams modules `PK^1(Sp(n))` and `PK^1(Spin(2n+1))`.
//!
//! Both are quotients of the free group on `ξ_1, ξ_2, ...` with
//! `ψ^t ξ_k = ξ_{kt}`. For `Sp(n)` the relations
//!
//! * `R_j = sum_k (-1)^{k+1} [C(2n+1, j-k) - C(2n+1, 2n+1-j-k)] ξ_k`, `n < j <= 2n`
//! * `S_j = sum_k (-1)^k C(j, k) ξ_k`, `j > 2n`
//!
//! each equal `±ξ_j` plus lower terms, so `ξ_1..ξ_n` is a basis. `Spin(2n+1)`
//! adds a class `D` with `2^{n+1} D = sum_k (-1)^{k+1} σ_{n-k} ξ_k`; the
//! coefficient of `ξ_n` there is `±1`, so `ξ_1..ξ_{n-1}, D` is a basis.
//!
//! Matrices use the row convention: row `i` is the image of basis element `i`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exactmath::{binom, pow_u, sigma};
use crate::intlinalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sp,
    Spin,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sp => "sp",
            Family::Spin => "spin",
        })
    }
}

/// Which quotient of `PK^1` to form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `PK^1 / im(ψ^2, ψ^3 - 3^m, ψ^{-1} - (-1)^m)`
    #[default]
    V,
    /// `PK^1 / im(ψ^r - r^m : r = 2, 3, -1)`
    VTilde,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::V => "v",
            Variant::VTilde => "vtilde",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleSpec {
    family: Family,
    n: u32,
}

impl ModuleSpec {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        match family {
            Family::Sp if n >= 1 => Ok(ModuleSpec { family, n }),
            Family::Spin if n >= 2 => Ok(ModuleSpec { family, n }),
            _ => Err(invalid(format!("{family}({n}) is not a supported module"))),
        }
    }

    pub fn sp(n: u32) -> Result<Self> {
        Self::new(Family::Sp, n)
    }

    pub fn spin(n: u32) -> Result<Self> {
        Self::new(Family::Spin, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    /// Sum of the `d_i` in the rational type `prod S^{2 d_i + 1}`, i.e. `n^2`.
    pub fn degree_sum(&self) -> u64 {
        u64::from(self.n) * u64::from(self.n)
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sp => write!(f, "Sp({})", self.n),
            Family::Spin => write!(f, "Spin({})", 2 * self.n + 1),
        }
    }
}

/// An element of `PK^1` in the module's basis: `ξ_1, ..., ξ_{n-1}` followed by
/// `ξ_n` (Sp) or `D` (Spin).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiVector {
    coords: Vec<BigInt>,
}

impl XiVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        XiVector { coords }
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); rank];
        coords[i] = BigInt::one();
        XiVector { coords }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }
}

/// One Adams module with memoized ξ-reductions and ψ-matrices.
///
/// The caches only ever grow with values that are pure functions of their
/// keys, so concurrent fills are harmless.
pub struct AdamsModule {
    spec: ModuleSpec,
    /// Entry `j - 1` holds `ξ_j` in the symplectic basis `ξ_1..ξ_n`.
    sp_table: RwLock<Vec<Vec<BigInt>>>,
    psi: RwLock<HashMap<i64, IntMatrix>>,
}

impl fmt::Debug for AdamsModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AdamsModule").field("spec", &self.spec).finish_non_exhaustive()
    }
}

impl AdamsModule {
    pub fn new(spec: ModuleSpec) -> Self {
        AdamsModule { spec, sp_table: RwLock::new(Vec::new()), psi: RwLock::new(HashMap::new()) }
    }

    pub fn spec(&self) -> ModuleSpec {
        self.spec
    }

    fn n(&self) -> usize {
        self.spec.rank()
    }

    /// `ξ_j` in the symplectic basis `ξ_1..ξ_n`, for any `j >= 1`.
    pub fn sp_coords(&self, j: usize) -> Vec<BigInt> {
        assert!(j >= 1, "ξ indices start at 1");
        {
            let table = self.sp_table.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = table.get(j - 1) {
                return v.clone();
            }
        }
        let mut table = self.sp_table.write().unwrap_or_else(|e| e.into_inner());
        while table.len() < j {
            let next = table.len() + 1;
            let v = reduce_top(self.n(), &table, next);
            table.push(v);
        }
        table[j - 1].clone()
    }

    /// Rewrites symplectic coordinates in the Spin basis by eliminating `ξ_n`:
    /// `ξ_n = (-1)^{n+1} (2^{n+1} D + sum_{k<n} (-1)^k σ_{n-k} ξ_k)`.
    fn sp_to_spin(&self, mut sp: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.n();
        let a = std::mem::take(&mut sp[n - 1]);
        if a.is_zero() {
            return sp;
        }
        let a = if n.is_multiple_of(2) { -a } else { a };
        sp[n - 1] = &a << (n + 1);
        for (k, slot) in sp.iter_mut().enumerate().take(n - 1).map(|(i, s)| (i + 1, s)) {
            let term = &a * sigma((n - k) as i64, self.spec.n);
            if k % 2 == 0 {
                *slot += term;
            } else {
                *slot -= term;
            }
        }
        sp
    }

    /// `ξ_j` expressed in this module's basis.
    pub fn xi_reduce(&self, j: usize) -> Result<XiVector> {
        if j == 0 {
            return Err(invalid("ξ index must be at least 1"));
        }
        let sp = self.sp_coords(j);
        Ok(XiVector::new(match self.spec.family {
            Family::Sp => sp,
            Family::Spin => self.sp_to_spin(sp),
        }))
    }

    /// Coefficients of `2^{n+1} D` on `ξ_1..ξ_n`: `(-1)^{k+1} σ_{n-k}`.
    pub fn d_expansion(&self) -> Vec<BigInt> {
        let n = self.n();
        (1..=n)
            .map(|k| {
                let s = sigma((n - k) as i64, self.spec.n);
                if k % 2 == 1 {
                    s
                } else {
                    -s
                }
            })
            .collect()
    }

    /// Matrix of `ψ^t`; row `i` is `ψ^t` of basis element `i`.
    ///
    /// `ψ^{-1} = -1`, and `ψ^{-t} = ψ^{-1} ψ^t` for the other negative `t`.
    pub fn psi_matrix(&self, t: i64) -> Result<IntMatrix> {
        if t == 0 {
            return Err(invalid("ψ^0 is not an Adams operation on PK^1"));
        }
        if let Some(m) = self.psi.read().unwrap_or_else(|e| e.into_inner()).get(&t) {
            return Ok(m.clone());
        }
        let m = if t < 0 {
            self.psi_matrix(-t)?.neg()
        } else {
            self.compute_psi(t.unsigned_abs() as usize)?
        };
        self.psi.write().unwrap_or_else(|e| e.into_inner()).insert(t, m.clone());
        Ok(m)
    }

    fn compute_psi(&self, t: usize) -> Result<IntMatrix> {
        let n = self.n();
        if t == 1 {
            return Ok(IntMatrix::identity(n));
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        match self.spec.family {
            Family::Sp => {
                for k in 1..=n {
                    rows.push(self.sp_coords(k * t));
                }
            }
            Family::Spin => {
                for k in 1..n {
                    rows.push(self.sp_to_spin(self.sp_coords(k * t)));
                }
                rows.push(self.psi_d_row(t)?);
            }
        }
        IntMatrix::from_rows(rows)
    }

    /// `ψ^t D = ψ^t(2^{n+1} D) / 2^{n+1}`; the division must be exact.
    fn psi_d_row(&self, t: usize) -> Result<Vec<BigInt>> {
        let n = self.n();
        let mut acc = vec![BigInt::zero(); n];
        for (k, c) in self.d_expansion().iter().enumerate().map(|(i, c)| (i + 1, c)) {
            for (slot, x) in acc.iter_mut().zip(self.sp_coords(k * t)) {
                *slot += c * x;
            }
        }
        let divisor = BigInt::one() << (n + 1);
        self.sp_to_spin(acc)
            .into_iter()
            .map(|x| {
                let (q, r) = x.div_rem(&divisor);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::IntegralityViolation {
                        context: format!("ψ^{t}(D) in {}", self.spec),
                        numerator: x,
                        divisor: divisor.clone(),
                    })
                }
            })
            .collect()
    }

    /// `ψ^t - t^m I`.
    pub fn relation_block(&self, t: i64, m: u32) -> Result<IntMatrix> {
        let scalar = if t < 0 && m % 2 == 1 { -pow_u(-t, m) } else { pow_u(t.abs(), m) };
        Ok(self.psi_matrix(t)?.sub_scalar(&scalar))
    }

    /// Stack of `ψ^2` (or `ψ^2 - 2^m` for [`Variant::VTilde`]), `ψ^3 - 3^m` and
    /// `ψ^{-1} - (-1)^m`, a `3 rank × rank` presentation matrix.
    pub fn presentation(&self, m: u32, variant: Variant) -> Result<IntMatrix> {
        let first = match variant {
            Variant::V => self.psi_matrix(2)?,
            Variant::VTilde => self.relation_block(2, m)?,
        };
        let three = self.relation_block(3, m)?;
        let minus_one = self.relation_block(-1, m)?;
        IntMatrix::vstack(&[&first, &three, &minus_one])
    }
}

/// Computes `ξ_j` from the reductions of `ξ_1..ξ_{j-1}` using the relation
/// whose top index is `j`.
fn reduce_top(n: usize, lower: &[Vec<BigInt>], j: usize) -> Vec<BigInt> {
    if j <= n {
        let mut v = vec![BigInt::zero(); n];
        v[j - 1] = BigInt::one();
        return v;
    }
    let top = 2 * n as i64 + 1;
    let (ji, lead_negative) = (j as i64, j % 2 == 1);
    // relation = lead * ξ_j + sum_{k<j} c_k ξ_k = 0
    let coef = |k: i64| -> BigInt {
        if j <= 2 * n {
            let c = binom(top, ji - k) - binom(top, top - ji - k);
            if k % 2 == 1 {
                c
            } else {
                -c
            }
        } else {
            let c = binom(ji, k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        }
    };
    // R_j leads with (-1)^{j+1}, S_j with (-1)^j.
    let lead_is_one = if j <= 2 * n { lead_negative } else { !lead_negative };
    let mut v = vec![BigInt::zero(); n];
    for k in 1..j {
        let c = coef(k as i64);
        if c.is_zero() {
            continue;
        }
        for (slot, x) in v.iter_mut().zip(&lower[k - 1]) {
            *slot += &c * x;
        }
    }
    // ξ_j = -(1/lead) * sum
    if lead_is_one {
        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
    }
    v
}

fn registry() -> &'static Mutex<HashMap<ModuleSpec, Arc<AdamsModule>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<ModuleSpec, Arc<AdamsModule>>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared, memoized module for `spec`.
pub fn module(spec: ModuleSpec) -> Arc<AdamsModule> {
    let mut reg = registry().lock().unwrap_or_else(|e| e.into_inner());
    reg.entry(spec).or_insert_with(|| Arc::new(AdamsModule::new(spec))).clone()
}

pub fn xi_reduce(j: usize, spec: ModuleSpec) -> Result<XiVector> {
    module(spec).xi_reduce(j)
}

pub fn psi_matrix(t: i64, spec: ModuleSpec) -> Result<IntMatrix> {
    module(spec).psi_matrix(t)
}

pub fn presentation(m: u32, spec: ModuleSpec, variant: Variant) -> Result<IntMatrix> {
    module(spec).presentation(m, variant)
}
