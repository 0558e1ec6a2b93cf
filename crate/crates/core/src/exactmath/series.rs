//! Truncated power series with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::sums::binom;
use crate::error::{Error, Result};

/// `sum c_d x^d + O(x^precision)`.
///
/// Only the coefficients of degree below `precision` are stored; binary
/// operations truncate to the smaller precision of the two operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn new(mut coeffs: Vec<BigInt>, precision: usize) -> Self {
        coeffs.resize(precision, BigInt::zero());
        IntSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], precision: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), precision)
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::monomial(BigInt::one(), 0, precision)
    }

    pub fn monomial(c: BigInt, degree: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if degree < precision {
            s.coeffs[degree] = c;
        }
        s
    }

    /// `(1 + x)^a` for any integer `a`.
    pub fn one_plus_x_pow(a: i64, precision: usize) -> Self {
        Self::new((0..precision as i64).map(|k| binom(a, k)).collect(), precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^degree`; zero for negative degrees.
    ///
    /// Panics if `degree` is at or beyond the truncation point.
    pub fn coeff(&self, degree: i64) -> BigInt {
        if degree < 0 {
            return BigInt::zero();
        }
        let d = degree as usize;
        assert!(d < self.precision(), "coefficient x^{d} lies beyond precision {}", self.precision());
        self.coeffs[d].clone()
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let p = precision.min(self.precision());
        IntSeries { coeffs: self.coeffs[..p].to_vec() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitute `x -> x^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = Self::zero(self.precision());
        for (d, c) in self.coeffs.iter().enumerate() {
            if d * k < out.precision() {
                out.coeffs[d * k] = c.clone();
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.precision());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division by a scalar; every coefficient must be divisible.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.precision());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::IntegralityViolation {
                    context: "series scalar division".into(),
                    numerator: c.clone(),
                    divisor: d.clone(),
                });
            }
            coeffs.push(q);
        }
        Ok(IntSeries { coeffs })
    }

    /// Power-series quotient `self / divisor`.
    ///
    /// The divisor needs a nonzero constant term; each quotient coefficient
    /// must come out integral, which always holds when that term is ±1.
    pub fn div_exact(&self, divisor: &IntSeries) -> Result<Self> {
        let p = self.precision().min(divisor.precision());
        let lead = divisor.coeffs.first().cloned().unwrap_or_default();
        if lead.is_zero() {
            return Err(Error::InexactSeriesDivision { degree: 0 });
        }
        let mut q: Vec<BigInt> = Vec::with_capacity(p);
        for d in 0..p {
            let mut acc = self.coeffs[d].clone();
            for (i, qi) in q.iter().enumerate() {
                acc -= qi * &divisor.coeffs[d - i];
            }
            let (qq, r) = acc.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactSeriesDivision { degree: d });
            }
            q.push(qq);
        }
        Ok(IntSeries { coeffs: q })
    }
}

impl Add for &IntSeries {
    type Output = IntSeries;

    fn add(self, rhs: &IntSeries) -> IntSeries {
        let p = self.precision().min(rhs.precision());
        IntSeries { coeffs: (0..p).map(|d| &self.coeffs[d] + &rhs.coeffs[d]).collect() }
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;

    fn sub(self, rhs: &IntSeries) -> IntSeries {
        let p = self.precision().min(rhs.precision());
        IntSeries { coeffs: (0..p).map(|d| &self.coeffs[d] - &rhs.coeffs[d]).collect() }
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;

    fn mul(self, rhs: &IntSeries) -> IntSeries {
        let p = self.precision().min(rhs.precision());
        let mut out = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().take(p).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(p - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        IntSeries { coeffs: out }
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;

    fn neg(self) -> IntSeries {
        IntSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.precision())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cubic_factorization() {
        let a = IntSeries::from_i64(&[1, -1, 1], 10);
        let b = IntSeries::from_i64(&[1, 1], 10);
        assert_eq!(&a * &b, IntSeries::from_i64(&[1, 0, 0, 1], 10));
    }

    #[test]
    fn generating_function_product() {
        // p(x) q(x) = (1+x)^{2n+1} / (1+x^2)
        for n in 1..8i64 {
            let prec = 40;
            let one_minus_x2 = IntSeries::from_i64(&[1, 0, -1], prec);
            let one_plus_x2 = IntSeries::from_i64(&[1, 0, 1], prec);
            let p = one_minus_x2.pow((2 * n + 1) as u32).div_exact(&one_plus_x2).unwrap();
            let q = IntSeries::one_plus_x_pow(-(2 * n + 1), prec).compose_sign();
            let lhs = &p * &q;
            let rhs = IntSeries::one_plus_x_pow(2 * n + 1, prec).div_exact(&one_plus_x2).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn division_rejects_inexact() {
        let a = IntSeries::from_i64(&[1, 1], 5);
        let two = IntSeries::from_i64(&[2], 5);
        assert!(a.div_exact(&two).is_err());
        assert!(a.div_exact(&IntSeries::zero(5)).is_err());
        let even = IntSeries::from_i64(&[4, 6, 8], 5);
        assert_eq!(even.div_exact(&two).unwrap(), IntSeries::from_i64(&[2, 3, 4], 5));
        assert!(a.div_scalar_exact(&BigInt::from(2)).is_err());
    }

    #[test]
    fn negative_degree_is_zero() {
        let s = IntSeries::from_i64(&[5, 6], 3);
        assert_eq!(s.coeff(-1), BigInt::zero());
        assert_eq!(s.coeff(1), BigInt::from(6));
    }

    impl IntSeries {
        /// `x -> -x`
        fn compose_sign(&self) -> Self {
            IntSeries {
                coeffs: self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(d, c)| if d % 2 == 0 { c.clone() } else { -c })
                    .collect(),
            }
        }
    }

    fn series() -> impl Strategy<Value = IntSeries> {
        prop::collection::vec(-50i64..50, 0..12).prop_map(|v| IntSeries::from_i64(&v, 12))
    }

    proptest! {
        #[test]
        fn unit_division_inverts_multiplication(a in series(), mut b in series()) {
            b.coeffs[0] = BigInt::from(1);
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn ring_laws(a in series(), b in series(), c in series()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a);
        }
    }
}
