//! Exact scalar and coefficient-function arithmetic plus truncated
//! deformation-parameter series: the substrate for the operator layers.

pub mod coeff;
pub mod exppoly;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod vars;

pub use coeff::{coeff_add, coeff_derive, coeff_mul, CoeffFn};
pub use exppoly::ExpPolyFn;
pub use poly::PolyFn;
pub use scalar::Scalar;
pub use series::{NuSeries, ScalarSeries};
pub use vars::{monomials_up_to, same_universe, Monomial, MultiIndex, Universe, Var, VarKind};

/// Series of coefficient functions of a chart.
pub type FnSeries = NuSeries<PolyFn>;

impl FnSeries {
    pub fn fn_zero(order: usize, universe: std::sync::Arc<Universe>) -> Self {
        NuSeries::constant(order, PolyFn::zero(universe.clone()), PolyFn::zero(universe))
    }

    pub fn fn_constant(order: usize, f: PolyFn) -> Self {
        let z = PolyFn::zero(f.universe().clone());
        NuSeries::constant(order, z, f)
    }

    pub fn fn_is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    pub fn fn_add(&self, other: &Self) -> crate::error::Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for r in 0..=self.order() {
            *out.coeff_mut(r) = out.coeff(r).add(other.coeff(r))?;
        }
        Ok(out)
    }

    pub fn fn_sub(&self, other: &Self) -> crate::error::Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for r in 0..=self.order() {
            *out.coeff_mut(r) = out.coeff(r).sub(other.coeff(r))?;
        }
        Ok(out)
    }

    /// Cauchy product of function series (pointwise multiplication payload).
    pub fn fn_mul(&self, other: &Self) -> crate::error::Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let uni = self.coeff(0).universe().clone();
        let mut out = FnSeries::fn_zero(n, uni);
        for r in 0..=n {
            for a in 0..=r {
                let prod = self.coeff(a).mul(other.coeff(r - a))?;
                *out.coeff_mut(r) = out.coeff(r).add(&prod)?;
            }
        }
        Ok(out)
    }
}

/// Series multiplication with truncation for scalar payloads
/// (`trunc_N(ab) = trunc_N(trunc_N a * trunc_N b)`).
pub fn series_mul_truncate(a: &ScalarSeries, b: &ScalarSeries) -> crate::error::Result<ScalarSeries> {
    a.mul(b)
}
