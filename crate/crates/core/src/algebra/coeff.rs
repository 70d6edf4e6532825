//! Tagged coefficient functions: polynomial / Laurent / exponential-polynomial.

use std::fmt;

use crate::algebra::exppoly::{ExpPolyFn, RADIAL_VAR};
use crate::algebra::poly::PolyFn;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub enum CoeffFn {
    Poly(PolyFn),
    Exp(ExpPolyFn),
}

impl CoeffFn {
    pub fn flavor(&self) -> &'static str {
        match self {
            CoeffFn::Poly(p) => p.flavor(),
            CoeffFn::Exp(e) => e.flavor(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            CoeffFn::Poly(p) => p.is_zero(),
            CoeffFn::Exp(e) => e.is_zero(),
        }
    }

    pub fn as_poly(&self) -> Result<&PolyFn> {
        match self {
            CoeffFn::Poly(p) => Ok(p),
            CoeffFn::Exp(_) => Err(Error::FlavorMismatch("EXPPOLY", "POLY")),
        }
    }
}

/// Exact product of coefficient functions of the same flavor.
pub fn coeff_mul(a: &CoeffFn, b: &CoeffFn) -> Result<CoeffFn> {
    match (a, b) {
        (CoeffFn::Poly(p), CoeffFn::Poly(q)) => Ok(CoeffFn::Poly(p.mul(q)?)),
        (CoeffFn::Exp(p), CoeffFn::Exp(q)) => Ok(CoeffFn::Exp(p.mul(q)?)),
        (x, y) => Err(Error::FlavorMismatch(x.flavor(), y.flavor())),
    }
}

/// Exact sum; same flavor required.
pub fn coeff_add(a: &CoeffFn, b: &CoeffFn) -> Result<CoeffFn> {
    match (a, b) {
        (CoeffFn::Poly(p), CoeffFn::Poly(q)) => Ok(CoeffFn::Poly(p.add(q)?)),
        (CoeffFn::Exp(p), CoeffFn::Exp(q)) => Ok(CoeffFn::Exp(p.add(q)?)),
        (x, y) => Err(Error::FlavorMismatch(x.flavor(), y.flavor())),
    }
}

/// Exact partial derivative by variable name.
pub fn coeff_derive(a: &CoeffFn, var: &str) -> Result<CoeffFn> {
    match a {
        CoeffFn::Poly(p) => {
            let v = p.universe().lookup(var)?;
            Ok(CoeffFn::Poly(p.derive(v)))
        }
        CoeffFn::Exp(e) => {
            if var != RADIAL_VAR {
                return Err(Error::UnknownVariable(var.to_string()));
            }
            Ok(CoeffFn::Exp(e.derive_x()))
        }
    }
}

impl fmt::Display for CoeffFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffFn::Poly(p) => write!(f, "{p}"),
            CoeffFn::Exp(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Debug for CoeffFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::Scalar;
    use crate::algebra::vars::{Monomial, Universe};

    #[test]
    fn flavor_mismatch_is_an_error() {
        let u = Universe::ordinary(&["q"]);
        let p = CoeffFn::Poly(PolyFn::one(u));
        let e = CoeffFn::Exp(ExpPolyFn::one(2));
        assert!(matches!(
            coeff_mul(&p, &e),
            Err(Error::FlavorMismatch(_, _))
        ));
    }

    #[test]
    fn poly_mul_and_derive() {
        let u = Universe::ordinary(&["q", "p"]);
        let q = u.lookup("q").unwrap();
        let pv = u.lookup("p").unwrap();
        let qp = CoeffFn::Poly(PolyFn::monomial(
            u.clone(),
            Monomial::from_pairs(vec![(q, 1), (pv, 1)]),
            Scalar::one(),
        ));
        let qq = CoeffFn::Poly(PolyFn::var(u.clone(), q));
        let prod = coeff_mul(&qp, &qq).unwrap();
        let want = CoeffFn::Poly(PolyFn::monomial(
            u.clone(),
            Monomial::from_pairs(vec![(q, 2), (pv, 1)]),
            Scalar::one(),
        ));
        assert_eq!(prod, want);
        let dq = coeff_derive(&prod, "q").unwrap();
        let want_d = CoeffFn::Poly(PolyFn::monomial(
            u.clone(),
            Monomial::from_pairs(vec![(q, 1), (pv, 1)]),
            Scalar::from_int(2),
        ));
        assert_eq!(dq, want_d);
        assert!(coeff_derive(&prod, "zz").is_err());
    }
}
