//! Truncated formal power series and exact (Laurent) polynomials.
//!
//! A [`PowerSeries`] of precision `N` stores `c_0..=c_N`; nothing is known
//! about coefficients above `N`, so binary operations return the smaller of
//! the two precisions.

mod json;
mod laurent;
mod poly;

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::field::Field;

pub use json::{LaurentDoc, PolynomialDoc, SeriesDoc};
pub use laurent::LaurentPolynomial;
pub use poly::Polynomial;

/// Formal power series truncated at an explicit precision `N` (inclusive).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> PowerSeries<F> {
    /// Builds a series from `c_0..=c_N`; the precision is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        PowerSeries { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        PowerSeries {
            coeffs: vec![F::zero(); precision + 1],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(F::one(), precision)
    }

    pub fn constant(c: F, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        s.coeffs[0] = c;
        s
    }

    /// The series `x` (the identity for composition).
    pub fn x(precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if precision >= 1 {
            s.coeffs[1] = F::one();
        }
        s
    }

    pub fn from_polynomial(p: &Polynomial<F>, precision: usize) -> Self {
        PowerSeries {
            coeffs: (0..=precision).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient `j`, or `None` above the precision.
    pub fn coeff(&self, j: usize) -> Option<&F> {
        self.coeffs.get(j)
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<(usize, &F)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Drops coefficients above `precision`. Panics if `precision` exceeds the current one.
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(
            precision <= self.precision(),
            "cannot raise precision by truncation"
        );
        PowerSeries {
            coeffs: self.coeffs[..=precision].to_vec(),
        }
    }

    /// The known part as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn map<G: Field>(&self, f: impl FnMut(&F) -> G) -> PowerSeries<G> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field>(&self, f: impl FnMut(&F) -> Result<G>) -> Result<PowerSeries<G>> {
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        PowerSeries {
            coeffs: (0..=n)
                .map(|j| self.coeffs[j].add_ref(&other.coeffs[j]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        PowerSeries {
            coeffs: (0..=n)
                .map(|j| self.coeffs[j].sub_ref(&other.coeffs[j]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: &F) -> Self {
        self.map(|c| c.mul_ref(s))
    }

    /// Cauchy product truncated at the smaller precision.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut out = vec![F::zero(); n + 1];
        for (l, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, b) in other.coeffs[..=n - l].iter().enumerate() {
                if !b.is_zero() {
                    out[l + m] = out[l + m].add_ref(&a.mul_ref(b));
                }
            }
        }
        PowerSeries { coeffs: out }
    }

    /// `self ∘ inner`; needs `inner_0 = 0`. For a polynomial outer function
    /// use [`Polynomial::compose_series`], which has no such restriction.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstantTerm(inner.coeffs[0].to_string()));
        }
        let n = self.precision().min(inner.precision());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[0].clone(), n);
        let mut power = Self::one(n);
        for l in 1..=n {
            power = power.mul(&inner);
            if !self.coeffs[l].is_zero() {
                acc = acc.add(&power.scale(&self.coeffs[l]));
            }
        }
        Ok(acc)
    }

    /// Compositional inverse by order-by-order coefficient matching.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.precision() < 1 || self.coeffs[1].is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.precision();
        let f1_inv = self.coeffs[1].inv()?;
        let mut table = PowerTable::new(n, f1_inv.clone());
        for k in 2..=n {
            table.advance();
            // (f∘g)_k = f_1 g_k + sum_{l>=2} f_l (g^l)_k must vanish
            let mut s = F::zero();
            for l in 2..=k {
                if !self.coeffs[l].is_zero() {
                    s = s.add_ref(&self.coeffs[l].mul_ref(table.coeff(l, k)));
                }
            }
            table.set_last(-(s.mul_ref(&f1_inv)));
        }
        Ok(table.into_series())
    }

    /// `f(c x)`: coefficient `j` becomes `c^j f_j`.
    pub fn scale_arg(&self, c: &F) -> Self {
        let mut pw = F::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| {
                if j > 0 {
                    pw = pw.mul_ref(c);
                }
                a.mul_ref(&pw)
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Division by `x^n`, defined on `x^n F`.
    pub fn div_xn(&self, n: usize) -> Result<Self> {
        if n > self.precision() {
            return Err(Error::PrecisionTooLow {
                have: self.precision(),
                need: n,
            });
        }
        if let Some(index) = self.coeffs[..n].iter().position(|c| !c.is_zero()) {
            return Err(Error::NotDivisibleByXn { n, index });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[n..].to_vec(),
        })
    }
}

impl<F: Field> Polynomial<F> {
    /// `self ∘ inner` for any `inner`: a polynomial outer function has finitely
    /// many terms, so a nonzero constant term in `inner` is admissible.
    pub fn compose_series(&self, inner: &PowerSeries<F>) -> PowerSeries<F> {
        let n = inner.precision();
        let mut acc = PowerSeries::zero(n);
        for c in self.coeffs().iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add_ref(c);
        }
        acc
    }
}

impl<F> Index<usize> for PowerSeries<F> {
    type Output = F;

    fn index(&self, j: usize) -> &F {
        &self.coeffs[j]
    }
}

impl<F: Field> fmt::Display for PowerSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.to_polynomial();
        if body.is_zero() {
            write!(f, "O(x^{})", self.precision() + 1)
        } else {
            write!(f, "{} + O(x^{})", body, self.precision() + 1)
        }
    }
}

impl<F: fmt::Debug> fmt::Debug for PowerSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PowerSeries").field(&self.coeffs).finish()
    }
}

/// Outer function of a composition: a truncated series or a polynomial.
pub trait Composable<F: Field> {
    fn compose_with(&self, inner: &PowerSeries<F>) -> Result<PowerSeries<F>>;
}

impl<F: Field> Composable<F> for PowerSeries<F> {
    fn compose_with(&self, inner: &PowerSeries<F>) -> Result<PowerSeries<F>> {
        self.compose(inner)
    }
}

impl<F: Field> Composable<F> for Polynomial<F> {
    fn compose_with(&self, inner: &PowerSeries<F>) -> Result<PowerSeries<F>> {
        Ok(self.compose_series(inner))
    }
}

pub fn ps_add<F: Field>(f: &PowerSeries<F>, g: &PowerSeries<F>) -> PowerSeries<F> {
    f.add(g)
}

pub fn ps_mul<F: Field>(f: &PowerSeries<F>, g: &PowerSeries<F>) -> PowerSeries<F> {
    f.mul(g)
}

pub fn ps_compose<F: Field>(f: &impl Composable<F>, g: &PowerSeries<F>) -> Result<PowerSeries<F>> {
    f.compose_with(g)
}

pub fn ps_revert<F: Field>(f: &PowerSeries<F>) -> Result<PowerSeries<F>> {
    f.revert()
}

pub fn ps_scale_arg<F: Field>(f: &PowerSeries<F>, c: &F) -> PowerSeries<F> {
    f.scale_arg(c)
}

pub fn ps_div_xn<F: Field>(f: &PowerSeries<F>, n: usize) -> Result<PowerSeries<F>> {
    f.div_xn(n)
}

pub fn poly_eval<F: Field>(g: &Polynomial<F>, v: &F) -> F {
    g.eval(v)
}

pub fn laurent_eval<F: Field>(g: &LaurentPolynomial<F>, v: &F) -> Result<F> {
    g.eval(v)
}

/// Powers `g, g^2, .., g^L` of a series `g` with `g_0 = 0` that is being
/// determined one coefficient at a time.
///
/// For `l >= 2`, `(g^l)_k` only involves `g_1..g_{k-l+1}`, so row `k` of every
/// power above the first is known before `g_k` is.
pub(crate) struct PowerTable<F> {
    // pows[l - 1] holds the coefficients 0..=k of g^l
    pows: Vec<Vec<F>>,
}

impl<F: Field> PowerTable<F> {
    /// Starts with `g = g1 x + O(x^2)`, tracking powers up to `max_power`.
    pub(crate) fn new(max_power: usize, g1: F) -> Self {
        let max_power = max_power.max(1);
        let mut pows = vec![vec![F::zero(), F::zero()]; max_power];
        pows[0][1] = g1;
        PowerTable { pows }
    }

    /// Index of the most recently opened row.
    pub(crate) fn current(&self) -> usize {
        self.pows[0].len() - 1
    }

    /// Opens row `k + 1`: fills it for every power `l >= 2` and leaves a zero
    /// placeholder for `g_{k+1}` itself.
    pub(crate) fn advance(&mut self) {
        let k = self.current() + 1;
        for l in 2..=self.pows.len() {
            let mut s = F::zero();
            if l <= k {
                let (lower, upper) = self.pows.split_at_mut(l - 1);
                let g = &lower[0];
                let prev = &lower[l - 2];
                for a in 1..=(k - (l - 1)) {
                    let (ga, pv) = (&g[a], &prev[k - a]);
                    if !ga.is_zero() && !pv.is_zero() {
                        s = s.add_ref(&ga.mul_ref(pv));
                    }
                }
                upper[0].push(s);
            } else {
                self.pows[l - 1].push(s);
            }
        }
        self.pows[0].push(F::zero());
    }

    /// `(g^l)_k`, for `l` at most the tracked power.
    pub(crate) fn coeff(&self, l: usize, k: usize) -> &F {
        &self.pows[l - 1][k]
    }

    /// Fixes `g_k` for the current row.
    pub(crate) fn set_last(&mut self, value: F) {
        *self.pows[0].last_mut().expect("row exists") = value;
    }

    pub(crate) fn into_series(mut self) -> PowerSeries<F> {
        PowerSeries::new(self.pows.swap_remove(0))
    }
}
