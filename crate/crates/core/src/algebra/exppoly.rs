//! Exponential-polynomial coefficient functions `p(x, l) * e^{a x}`.
//!
//! `x` is the single radial variable, `l` the formal parameter of the
//! radial calculus, and the exponent coefficient `a` is itself a truncated
//! `l`-series of scalars. Products and derivatives stay in class.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::scalar::Scalar;
use crate::algebra::series::ScalarSeries;
use crate::error::{Error, Result};

/// Name of the radial variable in the textual form.
pub const RADIAL_VAR: &str = "x";
/// Name of the formal parameter in the textual form.
pub const RADIAL_PARAM: &str = "l";

#[derive(Clone, PartialEq, Eq)]
pub struct ExpPolyFn {
    trunc: usize,
    /// (x power, l power) -> coefficient, no zeros stored.
    poly: BTreeMap<(u32, u32), Scalar>,
    /// Exponent series a(l); `e^{a x}`.
    exponent: ScalarSeries,
}

impl ExpPolyFn {
    pub fn zero(trunc: usize) -> Self {
        ExpPolyFn {
            trunc,
            poly: BTreeMap::new(),
            exponent: ScalarSeries::scalar_zero(trunc),
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut poly = BTreeMap::new();
        poly.insert((0, 0), Scalar::one());
        ExpPolyFn {
            trunc,
            poly,
            exponent: ScalarSeries::scalar_zero(trunc),
        }
    }

    /// `e^{a x}` for a constant scalar exponent.
    pub fn exponential(trunc: usize, a: Scalar) -> Self {
        ExpPolyFn::exponential_series(trunc, ScalarSeries::scalar_constant(trunc, a))
    }

    /// `e^{a(l) x}` for a series exponent.
    pub fn exponential_series(trunc: usize, a: ScalarSeries) -> Self {
        assert_eq!(a.order(), trunc);
        let mut poly = BTreeMap::new();
        poly.insert((0, 0), Scalar::one());
        ExpPolyFn {
            trunc,
            poly,
            exponent: a,
        }
    }

    /// Plain monomial `c * x^k l^j` (zero exponent).
    pub fn monomial(trunc: usize, xpow: u32, lpow: u32, c: Scalar) -> Self {
        let mut poly = BTreeMap::new();
        if !c.is_zero() && (lpow as usize) <= trunc {
            poly.insert((xpow, lpow), c);
        }
        ExpPolyFn {
            trunc,
            poly,
            exponent: ScalarSeries::scalar_zero(trunc),
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn exponent(&self) -> &ScalarSeries {
        &self.exponent
    }

    pub fn poly_terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.poly.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }

    fn add_term(&mut self, key: (u32, u32), c: Scalar) {
        if c.is_zero() || key.1 as usize > self.trunc {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.poly.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &ExpPolyFn) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::OrderMismatch(self.trunc, other.trunc));
        }
        Ok(())
    }

    /// Addition requires equal exponents (sums of distinct exponentials are
    /// kept as explicit lists at the casebook layer).
    pub fn add(&self, other: &ExpPolyFn) -> Result<ExpPolyFn> {
        self.check(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.exponent != other.exponent {
            return Err(Error::InvalidInput(
                "cannot add exponential terms with distinct exponents".into(),
            ));
        }
        let mut out = self.clone();
        for (&k, c) in other.poly.iter() {
            out.add_term(k, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> ExpPolyFn {
        let mut out = ExpPolyFn {
            trunc: self.trunc,
            poly: BTreeMap::new(),
            exponent: self.exponent.clone(),
        };
        for (&k, v) in self.poly.iter() {
            out.add_term(k, v * c);
        }
        out
    }

    /// Exact product; exponents add.
    pub fn mul(&self, other: &ExpPolyFn) -> Result<ExpPolyFn> {
        self.check(other)?;
        let mut out = ExpPolyFn {
            trunc: self.trunc,
            poly: BTreeMap::new(),
            exponent: self.exponent.add(&other.exponent)?,
        };
        if self.is_zero() || other.is_zero() {
            out.exponent = ScalarSeries::scalar_zero(self.trunc);
            return Ok(out);
        }
        for (&(x1, l1), c1) in self.poly.iter() {
            for (&(x2, l2), c2) in other.poly.iter() {
                if (l1 + l2) as usize <= self.trunc {
                    out.add_term((x1 + x2, l1 + l2), c1 * c2);
                }
            }
        }
        Ok(out)
    }

    /// d/dx: `(p e^{ax})' = (p' + a p) e^{ax}` with the series exponent
    /// folded into the polynomial part, truncated in `l`.
    pub fn derive_x(&self) -> ExpPolyFn {
        let mut out = ExpPolyFn {
            trunc: self.trunc,
            poly: BTreeMap::new(),
            exponent: self.exponent.clone(),
        };
        for (&(xp, lp), c) in self.poly.iter() {
            if xp > 0 {
                out.add_term((xp - 1, lp), c * &Scalar::from_int(xp as i64));
            }
            for (j, a) in self.exponent.iter() {
                if !a.is_zero() {
                    out.add_term((xp, lp + j as u32), c * a);
                }
            }
        }
        out
    }

    pub fn derive_x_times(&self, n: usize) -> ExpPolyFn {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.derive_x();
        }
        out
    }

    /// Normalize so the exponent is the order-0 scalar: the positive-order
    /// part `r(l) x` is expanded as `exp(r x)` into the polynomial part.
    pub fn normalize_exponent(&self) -> ExpPolyFn {
        let n = self.trunc;
        let order0 = self.exponent.coeff(0).clone();
        let mut rest = self.exponent.clone();
        *rest.coeff_mut(0) = Scalar::zero();
        if rest.is_zero() {
            return self.clone();
        }
        // exp(rest * x) = sum_k rest^k x^k / k!, rest has l-order >= 1 so
        // the sum is finite under truncation.
        let mut out = ExpPolyFn {
            trunc: n,
            poly: BTreeMap::new(),
            exponent: ScalarSeries::scalar_constant(n, order0),
        };
        let mut powers: Vec<ScalarSeries> = vec![ScalarSeries::scalar_constant(n, Scalar::one())];
        for k in 1..=n {
            let prev = powers[k - 1].clone();
            powers.push(prev.mul(&rest).expect("same order"));
        }
        for (&(xp, lp), c) in self.poly.iter() {
            for (k, pw) in powers.iter().enumerate() {
                let inv_fact = Scalar::factorial(k).inv().expect("nonzero");
                for (j, a) in pw.iter() {
                    if a.is_zero() {
                        continue;
                    }
                    out.add_term(
                        (xp + k as u32, lp + j as u32),
                        &(c * a) * &inv_fact,
                    );
                }
            }
        }
        out
    }

    pub fn flavor(&self) -> &'static str {
        "EXPPOLY"
    }
}

impl fmt::Display for ExpPolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(xp, lp), c) in self.poly.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if xp > 0 {
                write!(f, " * {RADIAL_VAR}")?;
                if xp > 1 {
                    write!(f, "^{xp}")?;
                }
            }
            if lp > 0 {
                write!(f, " * {RADIAL_PARAM}")?;
                if lp > 1 {
                    write!(f, "^{lp}")?;
                }
            }
        }
        let e = &self.exponent;
        if !e.is_zero() {
            write!(f, " ** exp[")?;
            let mut first = true;
            for (j, a) in e.iter() {
                if a.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({a})")?;
                if j > 0 {
                    write!(f, " {RADIAL_PARAM}^{j}")?;
                }
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExpPolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_additivity() {
        // (x e^{a x}) * (e^{b x}) = x e^{(a+b) x}
        let a = ExpPolyFn::monomial(4, 1, 0, Scalar::one())
            .mul(&ExpPolyFn::exponential(4, Scalar::from_int(2)))
            .unwrap();
        let b = ExpPolyFn::exponential(4, Scalar::from_int(3));
        let got = a.mul(&b).unwrap();
        let want = ExpPolyFn::monomial(4, 1, 0, Scalar::one())
            .mul(&ExpPolyFn::exponential(4, Scalar::from_int(5)))
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn derivative_of_exponential() {
        // d/dx e^{a x} = a e^{a x}
        let f = ExpPolyFn::exponential(3, Scalar::from_int(7));
        assert_eq!(f.derive_x(), f.scale(&Scalar::from_int(7)));
    }

    #[test]
    fn derivative_leibniz() {
        let f = ExpPolyFn::monomial(3, 2, 0, Scalar::one())
            .mul(&ExpPolyFn::exponential(3, Scalar::from_int(2)))
            .unwrap();
        let g = ExpPolyFn::exponential(3, Scalar::from_int(-1));
        let lhs = f.mul(&g).unwrap().derive_x();
        let rhs = f
            .derive_x()
            .mul(&g)
            .unwrap()
            .add(&f.mul(&g.derive_x()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_exponent_normalization() {
        // e^{(1 + l) x} = e^{x} * (1 + l x + l^2 x^2/2 + ...)
        let mut a = ScalarSeries::scalar_constant(2, Scalar::one());
        *a.coeff_mut(1) = Scalar::one();
        let f = ExpPolyFn::exponential_series(2, a).normalize_exponent();
        assert_eq!(f.exponent(), &ScalarSeries::scalar_constant(2, Scalar::one()));
        let mut want = ExpPolyFn::monomial(2, 0, 0, Scalar::one());
        want = want
            .add(&ExpPolyFn::monomial(2, 1, 1, Scalar::one()))
            .unwrap();
        want = want
            .add(&ExpPolyFn::monomial(2, 2, 2, Scalar::ratio(1, 2)))
            .unwrap();
        let mut want_exp = want;
        want_exp.exponent = ScalarSeries::scalar_constant(2, Scalar::one());
        assert_eq!(f, want_exp);
    }
}
