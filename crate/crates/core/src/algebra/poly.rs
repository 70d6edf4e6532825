//! Polynomial and Laurent-polynomial coefficient functions.
//!
//! Exponents on periodic variables may be negative (Fourier modes of the
//! unit-circle parametrization); all other exponents are non-negative.
//! Terms are kept in graded-lex normal form with no zero coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::scalar::Scalar;
use crate::algebra::vars::{same_universe, Monomial, Universe, Var, VarKind};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyFn {
    universe: Arc<Universe>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PolyFn {
    pub fn zero(universe: Arc<Universe>) -> Self {
        PolyFn {
            universe,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(universe: Arc<Universe>, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        PolyFn { universe, terms }
    }

    pub fn one(universe: Arc<Universe>) -> Self {
        PolyFn::constant(universe, Scalar::one())
    }

    pub fn var(universe: Arc<Universe>, v: Var) -> Self {
        PolyFn::monomial(universe, Monomial::var(v), Scalar::one())
    }

    pub fn monomial(universe: Arc<Universe>, m: Monomial, c: Scalar) -> Self {
        for (v, e) in m.iter() {
            if e < 0 {
                assert!(
                    matches!(universe.kind(v), VarKind::Periodic),
                    "negative exponent on non-periodic variable"
                );
            }
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyFn { universe, terms }
    }

    pub fn from_terms(universe: Arc<Universe>, items: Vec<(Monomial, Scalar)>) -> Self {
        let mut p = PolyFn::zero(universe);
        for (m, c) in items {
            p.add_term(m, c);
        }
        p
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Constant term.
    pub fn constant_part(&self) -> Scalar {
        self.coeff(&Monomial::unit())
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn max_abs_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.abs_degree()).max().unwrap_or(0)
    }

    fn check_same(&self, other: &PolyFn) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn add(&self, other: &PolyFn) -> Result<PolyFn> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyFn) -> Result<PolyFn> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> PolyFn {
        PolyFn {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> PolyFn {
        if c.is_zero() {
            return PolyFn::zero(self.universe.clone());
        }
        PolyFn {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &PolyFn) -> Result<PolyFn> {
        self.check_same(other)?;
        let mut out = PolyFn::zero(self.universe.clone());
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Exact partial derivative. Ordinary variables follow the power rule;
    /// a periodic variable multiplies each term by `i * mode`.
    pub fn derive(&self, v: Var) -> PolyFn {
        let mut out = PolyFn::zero(self.universe.clone());
        match self.universe.kind(v) {
            VarKind::Ordinary => {
                for (m, c) in self.terms.iter() {
                    let e = m.exp(v);
                    if e != 0 {
                        out.add_term(m.bump(v, -1), c * &Scalar::from_int(e));
                    }
                }
            }
            VarKind::Periodic => {
                for (m, c) in self.terms.iter() {
                    let e = m.exp(v);
                    if e != 0 {
                        out.add_term(m.clone(), &(c * &Scalar::i()) * &Scalar::from_int(e));
                    }
                }
            }
        }
        out
    }

    pub fn derive_multi(&self, idx: &Monomial) -> PolyFn {
        let mut out = self.clone();
        for (v, e) in idx.iter() {
            debug_assert!(e >= 0);
            for _ in 0..e {
                out = out.derive(v);
            }
        }
        out
    }

    /// Set a list of ordinary variables to zero (terms with a positive
    /// exponent on any of them are dropped; the variables stay in the
    /// universe).
    pub fn set_zero(&self, vars: &[Var]) -> PolyFn {
        for &v in vars {
            assert!(matches!(self.universe.kind(v), VarKind::Ordinary));
        }
        PolyFn {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.touches(vars))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether the function depends on any of `vars`.
    pub fn depends_on(&self, vars: &[Var]) -> bool {
        self.terms.keys().any(|m| m.touches(vars))
    }

    /// Substitute each variable by the polynomial `images[v]` on a target
    /// universe. All exponents must be non-negative (no Laurent inversion
    /// of a general image).
    pub fn substitute(&self, target: &Arc<Universe>, images: &[PolyFn]) -> Result<PolyFn> {
        if images.len() != self.universe.len() {
            return Err(Error::InvalidInput(
                "substitution image count does not match universe".into(),
            ));
        }
        let mut out = PolyFn::zero(target.clone());
        for (m, c) in self.terms.iter() {
            let mut acc = PolyFn::constant(target.clone(), c.clone());
            for (v, e) in m.iter() {
                if e < 0 {
                    return Err(Error::InvalidInput(
                        "cannot substitute into a negative exponent".into(),
                    ));
                }
                for _ in 0..e {
                    acc = acc.mul(&images[v.0 as usize])?;
                }
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Transport to another universe by renaming variables; `map[v]` is the
    /// image of `Var(v)`. Kinds must match.
    pub fn map_universe(&self, target: &Arc<Universe>, map: &[Var]) -> PolyFn {
        let mut terms = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            terms.insert(m.map_vars(map), c.clone());
        }
        PolyFn {
            universe: target.clone(),
            terms,
        }
    }

    /// Laurent/polynomial flavor tag of this coefficient function.
    pub fn flavor(&self) -> &'static str {
        if self.universe.iter().any(|v| matches!(self.universe.kind(v), VarKind::Periodic)) {
            "LAURENT"
        } else {
            "POLY"
        }
    }
}

impl fmt::Display for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) * {}", c, m.display(&self.universe))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vars::Universe;

    fn qp() -> Arc<Universe> {
        Universe::ordinary(&["q", "p"])
    }

    #[test]
    fn product_of_monomials() {
        let u = qp();
        let q = u.lookup("q").unwrap();
        let p = u.lookup("p").unwrap();
        let qp = PolyFn::from_terms(
            u.clone(),
            vec![(
                Monomial::from_pairs(vec![(q, 1), (p, 1)]),
                Scalar::one(),
            )],
        );
        let qq = PolyFn::var(u.clone(), q);
        let got = qp.mul(&qq).unwrap();
        let want = PolyFn::monomial(
            u.clone(),
            Monomial::from_pairs(vec![(q, 2), (p, 1)]),
            Scalar::one(),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn laurent_unit_relation() {
        let u = Universe::new(vec![("u".into(), VarKind::Periodic)]).unwrap();
        let v = u.lookup("u").unwrap();
        let a = PolyFn::monomial(u.clone(), Monomial::from_pairs(vec![(v, 1)]), Scalar::one());
        let b = PolyFn::monomial(u.clone(), Monomial::from_pairs(vec![(v, -1)]), Scalar::one());
        assert!(a.mul(&b).unwrap().is_one());
    }

    #[test]
    fn derivative_power_rule() {
        let u = qp();
        let q = u.lookup("q").unwrap();
        let p = u.lookup("p").unwrap();
        // d(q^2 p)/dq = 2 q p
        let f = PolyFn::monomial(
            u.clone(),
            Monomial::from_pairs(vec![(q, 2), (p, 1)]),
            Scalar::one(),
        );
        let want = PolyFn::monomial(
            u.clone(),
            Monomial::from_pairs(vec![(q, 1), (p, 1)]),
            Scalar::from_int(2),
        );
        assert_eq!(f.derive(q), want);
    }

    #[test]
    fn periodic_derivative_is_mode_multiplication() {
        // d(u v)/dphi = i u v  when u = e^{i phi}
        let uni = Universe::new(vec![
            ("u".into(), VarKind::Periodic),
            ("v".into(), VarKind::Periodic),
        ])
        .unwrap();
        let u = uni.lookup("u").unwrap();
        let v = uni.lookup("v").unwrap();
        let f = PolyFn::monomial(
            uni.clone(),
            Monomial::from_pairs(vec![(u, 1), (v, 1)]),
            Scalar::one(),
        );
        let want = f.scale(&Scalar::i());
        assert_eq!(f.derive(u), want);
    }

    #[test]
    fn restriction_to_zero_set() {
        let u = Universe::ordinary(&["x", "y"]);
        let x = u.lookup("x").unwrap();
        let y = u.lookup("y").unwrap();
        let f = PolyFn::from_terms(
            u.clone(),
            vec![
                (Monomial::from_pairs(vec![(x, 1)]), Scalar::one()),
                (Monomial::from_pairs(vec![(x, 1), (y, 2)]), Scalar::one()),
            ],
        );
        assert_eq!(f.set_zero(&[y]), PolyFn::var(u.clone(), x));
    }
}
