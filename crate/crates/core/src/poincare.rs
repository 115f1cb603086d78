//! Poincaré's equation `f(q x) = p(f(x))` and Schröder's equation `q σ = σ ∘ p`.
//!
//! An invertible solution exists iff `p_0 = 0` and `p_1 = q`; it is unique once
//! `f_1 = 1` is fixed. Two independent solvers are provided:
//!
//! * [`solve_poincare_recursive`] matches coefficients of `x^j` on both sides:
//!   `q^j f_j = sum_{l=1}^{j} p_l (f^l)_j`, and since `(f^1)_j = f_j` this gives
//!   `f_j = sum_{l=2}^{j} p_l (f^l)_j / (q^j - q)`.
//! * [`solve_poincare_nonrecursive`] reads every coefficient off the integer
//!   iterates of `p`: `f_j = sum_i g_{j,i} (p^{∘i})_j / g_j(q^j)` for any
//!   polynomial `g_j` of q-difference order `j`.

use crate::error::{Error, Result};
use crate::field::{pow_u, Field};
use crate::qdiff::{canonical_order_poly, check_base, qdiff_order};
use crate::series::{Polynomial, PowerSeries, PowerTable};

/// A polynomial map `p` with multiplier `q = p_1`, solved to precision `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareInstance<F> {
    p: Polynomial<F>,
    q: F,
    precision: usize,
}

impl<F: Field> PoincareInstance<F> {
    /// Takes `q = p_1`.
    pub fn new(p: Polynomial<F>, precision: usize) -> Result<Self> {
        let q = p.coeff(1);
        Self::with_q(p, q, precision)
    }

    /// Checks `p_0 = 0`, `p_1 = q`, and that `q` is nonzero and not a root of
    /// unity of order at most `precision`.
    pub fn with_q(p: Polynomial<F>, q: F, precision: usize) -> Result<Self> {
        if !p.coeff(0).is_zero() {
            return Err(Error::InvalidInstance(format!(
                "p_0 = {} must be 0",
                p.coeff(0)
            )));
        }
        if p.coeff(1) != q {
            return Err(Error::InvalidInstance(format!(
                "p_1 = {} must equal q = {q}",
                p.coeff(1)
            )));
        }
        if q.is_zero() {
            return Err(Error::InvalidInstance("q = p_1 must be nonzero".into()));
        }
        if precision == 0 {
            return Err(Error::InvalidInstance(
                "precision must be at least 1".into(),
            ));
        }
        check_base(&q, precision)?;
        Ok(PoincareInstance { p, q, precision })
    }

    pub fn p(&self) -> &Polynomial<F> {
        &self.p
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Same map at another precision (re-checking the root-of-unity bound).
    pub fn with_precision(&self, precision: usize) -> Result<Self> {
        Self::with_q(self.p.clone(), self.q.clone(), precision)
    }
}

/// How [`solve_poincare_nonrecursive`] picks the order-`j` polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GChoice<F> {
    /// `g_j = prod_{i<j} (x - q^i)`.
    Canonical,
    /// `g_1..g_N` in order; each must have q-difference order equal to its index.
    Explicit(Vec<Polynomial<F>>),
}

/// Coefficient matching on `f(q x) = p(f(x))` with `f_1 = 1`.
pub fn solve_poincare_recursive<F: Field>(inst: &PoincareInstance<F>) -> Result<PowerSeries<F>> {
    let n = inst.precision;
    let max_power = inst.p.degree().unwrap_or(1).max(1);
    let mut table = PowerTable::new(max_power, F::one());
    let mut qj = inst.q.clone();
    for j in 2..=n {
        qj = qj.mul_ref(&inst.q);
        table.advance();
        let mut s = F::zero();
        for l in 2..=j.min(max_power) {
            let pl = inst.p.coeff(l);
            if !pl.is_zero() {
                s = s.add_ref(&pl.mul_ref(table.coeff(l, j)));
            }
        }
        let denom = qj.sub_ref(&inst.q);
        if denom.is_zero() {
            return Err(Error::RootOfUnityDivisor(j));
        }
        table.set_last(s.checked_div(&denom)?);
    }
    Ok(table.into_series())
}

/// Nonrecursive solution from integer iterates of `p`.
pub fn solve_poincare_nonrecursive<F: Field>(
    inst: &PoincareInstance<F>,
    g_choice: &GChoice<F>,
) -> Result<PowerSeries<F>> {
    let n = inst.precision;
    let gs: Vec<Polynomial<F>> = match g_choice {
        GChoice::Canonical => (1..=n)
            .map(|j| canonical_order_poly(j, &inst.q))
            .collect::<Result<_>>()?,
        GChoice::Explicit(list) => {
            if list.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "expected {n} polynomials g_1..g_{n}, got {}",
                    list.len()
                )));
            }
            for (idx, g) in list.iter().enumerate() {
                let j = idx + 1;
                let found = qdiff_order(g, &inst.q, n.max(g.degree().unwrap_or(0)))?;
                if found != j {
                    return Err(Error::OrderMismatch { expected: j, found });
                }
            }
            list.clone()
        }
    };

    // p^{∘i} for every i any g_j needs, computed once
    let max_i = gs.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    let mut iterates = Vec::with_capacity(max_i + 1);
    iterates.push(PowerSeries::x(n));
    for i in 1..=max_i {
        let next = inst.p.compose_series(&iterates[i - 1]);
        iterates.push(next);
    }

    let mut coeffs = vec![F::zero(); n + 1];
    for (idx, g) in gs.iter().enumerate() {
        let j = idx + 1;
        let mut s = F::zero();
        for (i, gi) in g.coeffs().iter().enumerate() {
            if !gi.is_zero() {
                s = s.add_ref(&gi.mul_ref(&iterates[i][j]));
            }
        }
        coeffs[j] = s.checked_div(&g.eval(&pow_u(&inst.q, j)))?;
    }
    Ok(PowerSeries::new(coeffs))
}

/// `σ = f^{∘-1}` for the normalized Poincaré solution `f`.
pub fn solve_schroder<F: Field>(inst: &PoincareInstance<F>) -> Result<PowerSeries<F>> {
    solve_poincare_recursive(inst)?.revert()
}

/// `σ ∘ p - q σ`, truncated at the instance precision.
pub fn schroder_residual<F: Field>(
    sigma: &PowerSeries<F>,
    inst: &PoincareInstance<F>,
) -> Result<PowerSeries<F>> {
    let n = inst.precision;
    require_precision(sigma, n)?;
    let sigma = sigma.truncate(n);
    let p = PowerSeries::from_polynomial(&inst.p, n);
    Ok(sigma.compose(&p)?.sub(&sigma.scale(&inst.q)))
}

/// Residuals of Poincaré's equation in its direct and its inverted form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareResidual<F> {
    /// `f(q x) - p(f(x))`
    pub direct: PowerSeries<F>,
    /// `f(x / q) - p^{∘-1}(f(x))`
    pub equivalent: PowerSeries<F>,
}

impl<F: Field> PoincareResidual<F> {
    /// Both residuals vanish through the precision.
    pub fn is_zero(&self) -> bool {
        self.direct.is_zero() && self.equivalent.is_zero()
    }

    /// First nonzero coefficient of the direct residual, falling back to the equivalent one.
    pub fn first_nonzero(&self) -> Option<(usize, &F)> {
        self.direct
            .first_nonzero()
            .or_else(|| self.equivalent.first_nonzero())
    }
}

/// Evaluates both residuals of `f` against the instance, through degree `N`.
///
/// The inverted form composes with the series `f`, so it needs `f_0 = 0`.
pub fn verify_poincare<F: Field>(
    f: &PowerSeries<F>,
    inst: &PoincareInstance<F>,
) -> Result<PoincareResidual<F>> {
    let n = inst.precision;
    require_precision(f, n)?;
    let f = f.truncate(n);
    let direct = f.scale_arg(&inst.q).sub(&inst.p.compose_series(&f));
    let p_inv = PowerSeries::from_polynomial(&inst.p, n).revert()?;
    let equivalent = f.scale_arg(&inst.q.inv()?).sub(&p_inv.compose(&f)?);
    Ok(PoincareResidual { direct, equivalent })
}

fn require_precision<F: Field>(f: &PowerSeries<F>, n: usize) -> Result<()> {
    if f.precision() < n {
        return Err(Error::PrecisionTooLow {
            have: f.precision(),
            need: n,
        });
    }
    Ok(())
}
