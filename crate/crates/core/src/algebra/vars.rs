//! Variable universes, monomials and derivative multi-indices.
//!
//! A `Universe` is an ordered list of named variables. `Ordinary` variables
//! carry non-negative exponents; `Periodic` variables are unit-circle
//! parameters whose monomial exponent is the Fourier mode (any integer) and
//! whose derivative acts mode-by-mode as multiplication by `i * mode`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Ordinary,
    Periodic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    vars: Vec<(String, VarKind)>,
}

/// Index of a variable inside its universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl Universe {
    pub fn new(vars: Vec<(String, VarKind)>) -> Result<Arc<Self>> {
        for (i, (name, _)) in vars.iter().enumerate() {
            if vars[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::InvalidChart(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Universe { vars }))
    }

    /// All-ordinary universe from names.
    pub fn ordinary(names: &[&str]) -> Arc<Self> {
        Universe::new(
            names
                .iter()
                .map(|n| (n.to_string(), VarKind::Ordinary))
                .collect(),
        )
        .expect("distinct names")
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.vars[v.0 as usize].0
    }

    pub fn kind(&self, v: Var) -> VarKind {
        self.vars[v.0 as usize].1
    }

    pub fn lookup(&self, name: &str) -> Result<Var> {
        self.vars
            .iter()
            .position(|(n, _)| n == name)
            .map(|i| Var(i as u32))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.vars.len()).map(|i| Var(i as u32))
    }

    /// Disjoint union; errors on a name collision.
    pub fn merge(&self, other: &Universe) -> Result<Arc<Universe>> {
        let mut vars = self.vars.clone();
        for (n, k) in &other.vars {
            if vars.iter().any(|(m, _)| m == n) {
                return Err(Error::InvalidChart(format!(
                    "variable collision on `{n}` in tensor universe"
                )));
            }
            vars.push((n.clone(), *k));
        }
        Universe::new(vars)
    }
}

pub fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Sparse exponent vector, sorted by variable index, zero entries dropped.
///
/// Used both as a monomial (exponents may be negative on periodic
/// variables) and as a derivative multi-index (non-negative).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, i64)>,
}

pub type MultiIndex = Monomial;

impl Monomial {
    pub fn unit() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, i64)>) -> Self {
        pairs.retain(|&(_, e)| e != 0);
        pairs.sort_by_key(|&(v, _)| v);
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate variable in monomial");
        }
        Monomial { exps: pairs }
    }

    pub fn exp(&self, v: Var) -> i64 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, i64)> + '_ {
        self.exps.iter().copied()
    }

    /// Signed total degree.
    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// Sum of absolute exponents; the grading used for degree bounds on
    /// Laurent monomials.
    pub fn abs_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e.abs()).sum()
    }

    /// Order of a derivative multi-index (all exponents non-negative).
    pub fn order(&self) -> i64 {
        debug_assert!(self.exps.iter().all(|&(_, e)| e >= 0));
        self.degree()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.exps[i].1 + other.exps[j].1;
                    if e != 0 {
                        out.push((self.exps[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// Bump the exponent of a single variable by `delta`.
    pub fn bump(&self, v: Var, delta: i64) -> Monomial {
        self.mul(&Monomial::from_pairs(vec![(v, delta)]))
    }

    /// Componentwise `self - other` when `other <= self`; `None` otherwise.
    /// Only meaningful for derivative multi-indices.
    pub fn checked_sub(&self, other: &Monomial) -> Option<Monomial> {
        let mut pairs = Vec::new();
        for (v, e) in other.iter() {
            if self.exp(v) < e {
                return None;
            }
        }
        for (v, e) in self.iter() {
            let d = e - other.exp(v);
            if d < 0 {
                return None;
            }
            if d != 0 {
                pairs.push((v, d));
            }
        }
        Some(Monomial { exps: pairs })
    }

    /// `other <= self` componentwise.
    pub fn divides_into(&self, other: &Monomial) -> bool {
        other.checked_sub(self).is_some()
    }

    /// Enumerate all multi-indices `K` with `0 <= K <= self` componentwise.
    pub fn sub_indices(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::unit()];
        for &(v, e) in &self.exps {
            debug_assert!(e >= 0);
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for m in &out {
                for k in 0..=e {
                    next.push(m.bump(v, k));
                }
            }
            out = next;
        }
        out
    }

    /// Variables with positive exponent among `set`.
    pub fn touches(&self, set: &[Var]) -> bool {
        self.exps.iter().any(|&(v, e)| e != 0 && set.contains(&v))
    }

    /// Restrict to the variables in `keep` (drop all others).
    pub fn project(&self, keep: &[Var]) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .copied()
                .filter(|&(v, _)| keep.contains(&v))
                .collect(),
        }
    }

    /// Rename variables through `map` (old index -> new Var).
    pub fn map_vars(&self, map: &[Var]) -> Monomial {
        Monomial::from_pairs(
            self.exps
                .iter()
                .map(|&(v, e)| (map[v.0 as usize], e))
                .collect(),
        )
    }

    /// `prod_v exp_v!` for a derivative multi-index.
    pub fn factorial(&self) -> crate::algebra::Scalar {
        let mut acc = crate::algebra::Scalar::one();
        for &(_, e) in &self.exps {
            acc = &acc * &crate::algebra::Scalar::factorial(e as usize);
        }
        acc
    }

    /// `prod_v binom(self_v, k_v)`.
    pub fn binomial(&self, k: &Monomial) -> crate::algebra::Scalar {
        let mut acc = crate::algebra::Scalar::one();
        for (v, e) in k.iter() {
            acc = &acc * &crate::algebra::Scalar::binomial(self.exp(v) as usize, e as usize);
        }
        acc
    }
}

/// Graded lexicographic order: total degree first, then exponent vectors
/// compared variable-by-variable in universe order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => {
                    // remaining self entry on some variable; other has 0 there
                    let &(_, e) = &self.exps[i];
                    return e.cmp(&0);
                }
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn display<'a>(&'a self, uni: &'a Universe) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, uni }
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    uni: &'a Universe,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.m.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.uni.name(v))?;
            } else {
                write!(f, "{}^{}", self.uni.name(v), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// Monomials of the universe with `abs_degree <= bound`; periodic variables
/// range over negative modes as well. Deterministic (graded-lex) order.
pub fn monomials_up_to(uni: &Arc<Universe>, bound: i64) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = vec![Monomial::unit()];
    for v in uni.iter() {
        let mut next = Vec::new();
        for m in &out {
            let used = m.abs_degree();
            let budget = bound - used;
            let lo = match uni.kind(v) {
                VarKind::Ordinary => 0,
                VarKind::Periodic => -budget,
            };
            for e in lo..=budget {
                next.push(m.bump(v, e));
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_mul_cancels() {
        let u = Universe::new(vec![("u".into(), VarKind::Periodic)]).unwrap();
        let v = u.lookup("u").unwrap();
        let a = Monomial::from_pairs(vec![(v, 2)]);
        let b = Monomial::from_pairs(vec![(v, -2)]);
        assert!(a.mul(&b).is_unit());
    }

    #[test]
    fn graded_lex_is_total_and_graded() {
        let u = Universe::ordinary(&["q", "p"]);
        let q = u.lookup("q").unwrap();
        let p = u.lookup("p").unwrap();
        let m1 = Monomial::var(q); // q
        let m2 = Monomial::var(p); // p
        let m3 = Monomial::from_pairs(vec![(q, 2)]); // q^2
        assert!(m1 > m2); // same degree, q-exponent decides
        assert!(m3 > m1); // higher degree
    }

    #[test]
    fn sub_indices_count() {
        let u = Universe::ordinary(&["q", "p"]);
        let q = u.lookup("q").unwrap();
        let p = u.lookup("p").unwrap();
        let m = Monomial::from_pairs(vec![(q, 2), (p, 1)]);
        assert_eq!(m.sub_indices().len(), 6);
    }

    #[test]
    fn monomial_enumeration_with_periodic() {
        let u = Universe::new(vec![
            ("u".into(), VarKind::Periodic),
            ("p".into(), VarKind::Ordinary),
        ])
        .unwrap();
        let ms = monomials_up_to(&u, 1);
        // 1, u, u^-1, p
        assert_eq!(ms.len(), 4);
    }
}
