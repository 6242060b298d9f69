//! Truncated formal power series with exact rational coefficients.
//!
//! Only what the generating functions of this crate need: ring operations,
//! shifts, the formal derivative, and real powers `P(x)^α` of a polynomial
//! with `P(0) = 1`. The latter uses the first-order recurrence obtained from
//! `P·Q' = α·P'·Q`, so algebraic functions such as `sqrt(1 - 2x - 3x²)` are
//! expanded without floating point.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{BigCount, Error, Result};

/// Coefficients `c_0, c_1, ...` of a series known modulo `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigRational::zero(); order] }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (c, &v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = BigRational::from_integer(BigInt::from(v));
        }
        s
    }

    pub fn from_counts(coeffs: &[BigCount]) -> Self {
        let coeffs = coeffs.iter().map(|c| BigRational::from_integer(BigInt::from(c.clone()))).collect();
        Self { coeffs }
    }

    /// Number of known coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order);
        self
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for n in k..self.order() {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Divides by `x^k`; the order drops by `k`. Fails unless the first `k`
    /// coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Inconsistent(format!("series is not divisible by x^{k}")));
        }
        Ok(Self { coeffs: self.coeffs.iter().skip(k).cloned().collect() })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = (1..self.order()).map(|n| &self.coeffs[n] * BigRational::from_integer(BigInt::from(n))).collect();
        Self { coeffs }
    }

    /// `P(x)^alpha` to the given order, for a polynomial `P` with `P(0) = 1`.
    ///
    /// With `Q = P^alpha`, comparing coefficients of `x^(n-1)` in
    /// `P·Q' = alpha·P'·Q` gives
    /// `n q_n = Σ_{k≥1} p_k (alpha·k - (n - k)) q_{n-k}`.
    pub fn poly_power(poly: &[i64], alpha: &BigRational, order: usize) -> Result<Self> {
        if poly.first() != Some(&1) {
            return Err(Error::OutOfRange("polynomial must have constant term 1".into()));
        }
        let p: Vec<BigRational> = poly.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        let mut q = Vec::with_capacity(order);
        if order > 0 {
            q.push(BigRational::one());
        }
        for n in 1..order {
            let mut acc = BigRational::zero();
            for k in 1..p.len().min(n + 1) {
                if p[k].is_zero() {
                    continue;
                }
                let weight =
                    alpha * BigRational::from_integer(BigInt::from(k)) - BigRational::from_integer(BigInt::from(n - k));
                acc += &p[k] * weight * &q[n - k];
            }
            q.push(acc / BigRational::from_integer(BigInt::from(n)));
        }
        Ok(Self { coeffs: q })
    }

    /// Converts to nonnegative integers, failing on fractions or negatives.
    pub fn to_counts(&self) -> Result<Vec<BigCount>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if !c.is_integer() || c.is_negative() {
                    return Err(Error::Inconsistent(format!("coefficient {n} is {c}, not a count")));
                }
                Ok(c.to_integer().to_biguint().expect("checked nonnegative"))
            })
            .collect()
    }

    /// Small coefficients as `i64`, for tests and display.
    pub fn to_i64(&self) -> Vec<Option<i64>> {
        self.coeffs.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }
}

fn binary(a: &Series, b: &Series, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Series {
    let order = a.order().min(b.order());
    Series { coeffs: (0..order).map(|n| f(&a.coeffs[n], &b.coeffs[n])).collect() }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        binary(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        binary(self, rhs, |x, y| x - y)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}
