//! Truncated formal power series in the deformation parameter.
//!
//! A `NuSeries<T>` holds exactly `N+1` coefficients `c_0..c_N`; every
//! operation truncates at `N` and never reads beyond it.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct NuSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Clone> NuSeries<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        NuSeries { coeffs }
    }

    pub fn constant(order: usize, zero: T, c0: T) -> Self {
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c0;
        NuSeries { coeffs }
    }

    /// Inclusive truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, r: usize) -> &T {
        &self.coeffs[r]
    }

    pub fn coeff_mut(&mut self, r: usize) -> &mut T {
        &mut self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().enumerate()
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> NuSeries<U> {
        NuSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn check_order(&self, other: &NuSeries<T>) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    /// Re-truncate to a (possibly lower) order, or pad with `zero`.
    pub fn truncate(&self, order: usize, zero: T) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, zero);
        coeffs.truncate(order + 1);
        NuSeries { coeffs }
    }

    /// Multiply by `nu^k` (shift), dropping overflow past the order.
    pub fn shift(&self, k: usize, zero: T) -> Self {
        let n = self.order();
        let mut coeffs = vec![zero; n + 1];
        for r in k..=n {
            coeffs[r] = self.coeffs[r - k].clone();
        }
        NuSeries { coeffs }
    }

    pub fn zip_with(&self, other: &NuSeries<T>, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        self.check_order(other)?;
        Ok(NuSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Cauchy product cut at the common truncation order.
    pub fn convolve<U: Clone, V: Clone>(
        &self,
        other: &NuSeries<U>,
        mul: impl Fn(&T, &U) -> V,
        add: impl Fn(V, V) -> V,
        zero: impl Fn() -> V,
    ) -> NuSeries<V> {
        let n = self.order().min(other.order());
        let mut coeffs: Vec<V> = (0..=n).map(|_| zero()).collect();
        for r in 0..=n {
            let mut acc = zero();
            for a in 0..=r {
                acc = add(acc, mul(&self.coeffs[a], &other.coeffs[r - a]));
            }
            coeffs[r] = acc;
        }
        NuSeries { coeffs }
    }
}

impl<T: fmt::Debug> fmt::Debug for NuSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NuSeries{:?}", self.coeffs)
    }
}

pub type ScalarSeries = NuSeries<crate::algebra::Scalar>;

impl ScalarSeries {
    pub fn scalar_zero(order: usize) -> Self {
        NuSeries::constant(order, crate::algebra::Scalar::zero(), crate::algebra::Scalar::zero())
    }

    pub fn scalar_constant(order: usize, c: crate::algebra::Scalar) -> Self {
        NuSeries::constant(order, crate::algebra::Scalar::zero(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn scale(&self, k: &crate::algebra::Scalar) -> Self {
        self.map(|c| c * k)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.convolve(
            other,
            |a, b| a * b,
            |a, b| &a + &b,
            crate::algebra::Scalar::zero,
        ))
    }

    /// Multiplicative inverse; requires an invertible order-0 part.
    pub fn inv(&self) -> Result<Self> {
        let n = self.order();
        let c0 = self.coeff(0).inv()?;
        let mut out = vec![crate::algebra::Scalar::zero(); n + 1];
        out[0] = c0.clone();
        for r in 1..=n {
            let mut acc = crate::algebra::Scalar::zero();
            for a in 1..=r {
                acc += &(self.coeff(a) * &out[r - a]);
            }
            out[r] = -&(&acc * &c0);
        }
        Ok(NuSeries { coeffs: out })
    }

    /// `log(series)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvalidInput("log needs constant term 1".into()));
        }
        let n = self.order();
        // log(1+u) = sum (-1)^{k+1} u^k / k, u nilpotent to order n
        let mut u = self.clone();
        *u.coeff_mut(0) = crate::algebra::Scalar::zero();
        let mut acc = ScalarSeries::scalar_zero(n);
        let mut upow = ScalarSeries::scalar_constant(n, crate::algebra::Scalar::one());
        for k in 1..=n {
            upow = upow.mul(&u)?;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&upow.scale(&crate::algebra::Scalar::ratio(sign, k as i64)))?;
        }
        Ok(acc)
    }

    /// `exp(series)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InvalidInput("exp needs zero constant term".into()));
        }
        let n = self.order();
        let mut acc = ScalarSeries::scalar_constant(n, crate::algebra::Scalar::one());
        let mut upow = ScalarSeries::scalar_constant(n, crate::algebra::Scalar::one());
        for k in 1..=n {
            upow = upow.mul(self)?;
            let inv_fact = crate::algebra::Scalar::factorial(k).inv().expect("nonzero");
            acc = acc.add(&upow.scale(&inv_fact))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    fn s(v: &[i64]) -> ScalarSeries {
        NuSeries::from_coeffs(v.iter().map(|&n| Scalar::from_int(n)).collect())
    }

    #[test]
    fn cauchy_product_truncates() {
        // (1+nu)(1-nu) at N=2 -> 1 - nu^2
        let a = s(&[1, 1, 0]);
        let b = s(&[1, -1, 0]);
        assert_eq!(a.mul(&b).unwrap(), s(&[1, 0, -1]));
        // nu * nu at N=1 -> 0
        let c = s(&[0, 1]);
        assert_eq!(c.mul(&c).unwrap(), s(&[0, 0]));
        // (1+nu+nu^2) * 1 at N=2 -> unchanged
        let d = s(&[1, 1, 1]);
        let e = s(&[1, 0, 0]);
        assert_eq!(d.mul(&e).unwrap(), d);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = s(&[1, 1]);
        let b = s(&[1, 1, 0]);
        assert!(a.mul(&b.truncate(1, Scalar::zero())).is_ok());
        assert!(matches!(
            a.add(&b),
            Err(crate::error::Error::OrderMismatch(1, 2))
        ));
    }

    #[test]
    fn geometric_inverse() {
        let a = s(&[1, 1, 0, 0]); // 1 + nu
        let inv = a.inv().unwrap();
        assert_eq!(inv, s(&[1, -1, 1, -1]));
        assert_eq!(a.mul(&inv).unwrap(), s(&[1, 0, 0, 0]));
    }

    #[test]
    fn log_exp_round_trip() {
        let a = s(&[1, 2, 3, -1, 5]);
        let l = a.log().unwrap();
        assert_eq!(l.exp().unwrap(), a);
    }
}
