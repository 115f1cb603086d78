//! Integer, continuous and conjugated iterates of polynomial maps.
//!
//! For a map tangent to the identity (`p_0 = 0`, `p_1 = 1`) the coefficient
//! `(p^{∘n})_j` is a polynomial in `n` of degree at most `j - 1`. Sampling it
//! at `n = 0..j-1` and interpolating with Newton forward differences defines
//! `p^{∘t}` for any field element `t`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{pow_u, Field, Rational};
use crate::poincare::{solve_poincare_recursive, PoincareInstance};
use crate::qdiff::{check_base, laurent_q_pochhammer};
use crate::series::{Polynomial, PowerSeries};

/// `p^{∘n}` truncated at `precision`; negative `n` iterates the reversion of `p`.
pub fn iterate_integer<F: Field>(
    p: &Polynomial<F>,
    n: i64,
    precision: usize,
) -> Result<PowerSeries<F>> {
    if n >= 0 {
        let mut acc = PowerSeries::x(precision);
        for _ in 0..n {
            acc = p.compose_series(&acc);
        }
        return Ok(acc);
    }
    let work = precision.max(1);
    let inv = PowerSeries::from_polynomial(p, work).revert()?;
    let mut acc = PowerSeries::x(work);
    for _ in 0..n.unsigned_abs() {
        acc = inv.compose(&acc)?;
    }
    Ok(acc.truncate(precision))
}

/// Iterates `p^{∘lo}..=p^{∘hi}` sharing work between neighbours.
pub fn iterate_range<F: Field>(
    p: &Polynomial<F>,
    lo: i64,
    hi: i64,
    precision: usize,
) -> Result<Vec<PowerSeries<F>>> {
    assert!(lo <= hi, "empty iterate range");
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    let mut cur = iterate_integer(p, lo, precision)?;
    out.push(cur.clone());
    for _ in lo..hi {
        cur = p.compose_series(&cur);
        out.push(cur.clone());
    }
    Ok(out)
}

/// Coefficients in the monomial basis of the polynomial through
/// `(0, values[0]), (1, values[1]), ..`, built from forward differences.
pub fn newton_forward<F: Field>(values: &[F]) -> Polynomial<F> {
    let mut diffs = values.to_vec();
    let mut result = Polynomial::zero();
    // binomial(n, k) as a polynomial in n
    let mut basis = Polynomial::one();
    for k in 0..values.len() {
        result = &result + &basis.scale(&diffs[0]);
        for i in 0..diffs.len() - 1 {
            diffs[i] = diffs[i + 1].sub_ref(&diffs[i]);
        }
        diffs.pop();
        let shift = Polynomial::new(vec![F::from_i64(-(k as i64)), F::one()]);
        let inv = F::from_i64(k as i64 + 1).inv().expect("k + 1 > 0");
        basis = (&basis * &shift).scale(&inv);
    }
    result
}

/// `n ↦ (p^{∘n})_j` as an explicit polynomial `sum_l c_l n^l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterateCoefficientPolynomial<F> {
    j: usize,
    poly: Polynomial<F>,
}

impl<F: Field> IterateCoefficientPolynomial<F> {
    pub fn degree_index(&self) -> usize {
        self.j
    }

    /// `c_0..c_{j-1}` (zero-padded).
    pub fn coeffs(&self) -> Vec<F> {
        (0..self.j).map(|l| self.poly.coeff(l)).collect()
    }

    pub fn as_polynomial(&self) -> &Polynomial<F> {
        &self.poly
    }

    pub fn eval(&self, t: &F) -> F {
        self.poly.eval(t)
    }
}

impl<F: Field> fmt::Display for IterateCoefficientPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.display_in("n"))
    }
}

fn require_tangent<F: Field>(p: &Polynomial<F>) -> Result<()> {
    if !p.coeff(0).is_zero() || !p.coeff(1).is_one() {
        return Err(Error::NotTangentToIdentity);
    }
    Ok(())
}

/// Interpolates on nodes `0..j-1` and checks the two following nodes.
fn interpolate_checked<F: Field>(
    j: usize,
    samples: &[F],
) -> Result<IterateCoefficientPolynomial<F>> {
    debug_assert!(samples.len() >= j + 2);
    let poly = newton_forward(&samples[..j]);
    for (node, sample) in samples.iter().enumerate().skip(j) {
        if poly.eval(&F::from_i64(node as i64)) != *sample {
            return Err(Error::InterpolationMismatch { j, node });
        }
    }
    Ok(IterateCoefficientPolynomial { j, poly })
}

pub fn iterate_coefficient_polynomial<F: Field>(
    p: &Polynomial<F>,
    j: usize,
) -> Result<IterateCoefficientPolynomial<F>> {
    require_tangent(p)?;
    let iterates = iterate_range(p, 0, j as i64 + 1, j.max(1))?;
    let samples: Vec<F> = iterates.iter().map(|s| s[j].clone()).collect();
    interpolate_checked(j, &samples)
}

/// Interpolated iterate coefficients for every degree up to a precision,
/// reusable across many values of `t`.
#[derive(Debug, Clone)]
pub struct ContinuousIteration<F> {
    polys: Vec<IterateCoefficientPolynomial<F>>,
}

impl<F: Field> ContinuousIteration<F> {
    pub fn new(p: &Polynomial<F>, precision: usize) -> Result<Self> {
        require_tangent(p)?;
        let iterates = iterate_range(p, 0, precision as i64 + 1, precision)?;
        let polys = (0..=precision)
            .map(|j| {
                let samples: Vec<F> = iterates[..j + 2].iter().map(|s| s[j].clone()).collect();
                interpolate_checked(j, &samples)
            })
            .collect::<Result<_>>()?;
        Ok(ContinuousIteration { polys })
    }

    pub fn precision(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn coefficient_polynomial(&self, j: usize) -> Option<&IterateCoefficientPolynomial<F>> {
        self.polys.get(j)
    }

    /// `p^{∘t}` truncated at the precision.
    pub fn at(&self, t: &F) -> PowerSeries<F> {
        PowerSeries::new(self.polys.iter().map(|c| c.eval(t)).collect())
    }
}

pub fn iterate_continuous<F: Field>(
    p: &Polynomial<F>,
    t: &F,
    precision: usize,
) -> Result<PowerSeries<F>> {
    Ok(ContinuousIteration::new(p, precision)?.at(t))
}

/// `f(λ f^{∘-1}(x))` where `f` solves the instance's Poincaré equation.
/// With `λ = q^m` this is `p^{∘m}`.
pub fn iterate_by_conjugation<F: Field>(
    inst: &PoincareInstance<F>,
    lambda: &F,
    precision: usize,
) -> Result<PowerSeries<F>> {
    let inst = inst.with_precision(precision)?;
    let f = solve_poincare_recursive(&inst)?;
    f.scale_arg(lambda).compose(&f.revert()?)
}

/// Both sides of the iterate recurrence for one `(n, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck<F> {
    pub n: i64,
    pub j: usize,
    /// `(p^{∘n})_j` by direct composition.
    pub lhs: F,
    /// The recurrence's right-hand side built from the other iterates.
    pub rhs: F,
}

impl<F: Field> RecurrenceCheck<F> {
    pub fn residual(&self) -> F {
        self.lhs.sub_ref(&self.rhs)
    }
}

/// Evaluates, for `j > n`,
///
/// ```text
/// (p^{∘n})_j = A(q^j) / A_n * ( sum_{l=n-j-1}^{n-1} B_l / B(q^j) (p^{∘l})_j
///                             - sum_{l=n-j}^{n-1}   A_l / A(q^j) (p^{∘l})_j )
/// ```
///
/// with `A = x^{n-j} prod_{i<j}(x - q^i)` and `B = x^{n-j-1} prod_{i<j}(x - q^i)`,
/// and returns both sides.
pub fn verify_iterate_recurrence<F: Field>(
    p: &Polynomial<F>,
    q: &F,
    n: i64,
    j: usize,
    precision: usize,
) -> Result<RecurrenceCheck<F>> {
    if j as i64 <= n {
        return Err(Error::InvalidInstance(format!(
            "need j > n, got j = {j}, n = {n}"
        )));
    }
    if !p.coeff(0).is_zero() || p.coeff(1) != *q {
        return Err(Error::InvalidInstance("need p_0 = 0 and p_1 = q".into()));
    }
    check_base(q, j.max(precision))?;
    let prec = precision.max(j);
    let ji = j as i64;
    let lo = n - ji - 1;
    let iterates = iterate_range(p, lo, n, prec)?;
    let it = |l: i64| iterates[(l - lo) as usize][j].clone();

    let a = laurent_q_pochhammer(n - ji, j, q)?;
    let b = laurent_q_pochhammer(n - ji - 1, j, q)?;
    let qj = pow_u(q, j);
    let a_at = a.eval(&qj)?;
    let b_at = b.eval(&qj)?;

    let mut first = F::zero();
    for l in (n - ji - 1)..=(n - 1) {
        first = first.add_ref(&b.coeff(l).checked_div(&b_at)?.mul_ref(&it(l)));
    }
    let mut second = F::zero();
    for l in (n - ji)..=(n - 1) {
        second = second.add_ref(&a.coeff(l).checked_div(&a_at)?.mul_ref(&it(l)));
    }
    let rhs = a_at
        .checked_div(&a.coeff(n))?
        .mul_ref(&first.sub_ref(&second));
    Ok(RecurrenceCheck {
        n,
        j,
        lhs: it(n),
        rhs,
    })
}

/// `sum_{l=0}^{j} C(j,l) (-1)^l (p^{∘(n-l)})_j`, which vanishes for maps
/// tangent to the identity.
pub fn verify_q1_difference_identity<F: Field>(p: &Polynomial<F>, n: i64, j: usize) -> Result<F> {
    require_tangent(p)?;
    let ji = j as i64;
    let iterates = iterate_range(p, n - ji, n, j.max(1))?;
    let mut binom = BigInt::from(1);
    let mut acc = F::zero();
    for l in 0..=j {
        if l > 0 {
            binom = binom * BigInt::from(j - l + 1) / BigInt::from(l);
        }
        let mut term = F::from_rational(&Rational::from_integer(binom.clone()))
            .mul_ref(&iterates[(ji - l as i64) as usize][j]);
        if l % 2 == 1 {
            term = -term;
        }
        acc = acc.add_ref(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn poly(cs: &[&str]) -> Polynomial<Rational> {
        Polynomial::new(cs.iter().map(|c| r(c)).collect())
    }

    fn series(cs: &[&str]) -> PowerSeries<Rational> {
        PowerSeries::new(cs.iter().map(|c| r(c)).collect())
    }

    #[test]
    fn integer_iterates() {
        let p = poly(&["0", "2", "1"]);
        assert_eq!(
            iterate_integer(&p, 2, 4).unwrap(),
            series(&["0", "4", "6", "4", "1"])
        );
        assert_eq!(iterate_integer(&p, 0, 4).unwrap(), PowerSeries::x(4));
        assert_eq!(
            iterate_integer(&p, -1, 3).unwrap(),
            series(&["0", "1/2", "-1/8", "1/16"])
        );
        // (1+x)^{1/4} - 1
        assert_eq!(
            iterate_integer(&p, -2, 3).unwrap(),
            series(&["0", "1/4", "-3/32", "7/128"])
        );
        assert_eq!(
            iterate_integer(&poly(&["0", "0", "1"]), -1, 3),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn newton_forward_matches_samples() {
        let vals: Vec<Rational> = [0, 0, 2, 6]
            .iter()
            .map(|&v| Rational::from_integer(v))
            .collect();
        let poly = newton_forward(&vals);
        assert_eq!(poly, self::poly(&["0", "-1", "1"]));
        assert!(newton_forward::<Rational>(&[]).is_zero());
    }

    #[test]
    fn coefficient_polynomials() {
        let p = poly(&["0", "1", "1"]);
        assert_eq!(
            iterate_coefficient_polynomial(&p, 2).unwrap().coeffs(),
            vec![r("0"), r("1")]
        );
        assert_eq!(
            iterate_coefficient_polynomial(&p, 3).unwrap().coeffs(),
            vec![r("0"), r("-1"), r("1")]
        );
        let p3 = poly(&["0", "1", "3", "-1/2"]);
        assert_eq!(
            iterate_coefficient_polynomial(&p3, 1).unwrap().coeffs(),
            vec![r("1")]
        );
        assert_eq!(
            iterate_coefficient_polynomial(&poly(&["0", "2", "1"]), 2),
            Err(Error::NotTangentToIdentity)
        );
    }

    #[test]
    fn continuous_examples() {
        let p = poly(&["0", "1", "1"]);
        let half = iterate_continuous(&p, &r("1/2"), 3).unwrap();
        assert_eq!(half, series(&["0", "1", "1/2", "-1/4"]));
        assert_eq!(half.compose(&half).unwrap(), series(&["0", "1", "1", "0"]));
        assert_eq!(
            iterate_continuous(&p, &r("1"), 5).unwrap(),
            PowerSeries::from_polynomial(&p, 5)
        );
        assert_eq!(
            iterate_continuous(&p, &r("0"), 5).unwrap(),
            PowerSeries::x(5)
        );
    }

    #[test]
    fn conjugation_examples() {
        let inst = PoincareInstance::new(poly(&["0", "2", "1"]), 4).unwrap();
        assert_eq!(
            iterate_by_conjugation(&inst, &r("4"), 4).unwrap(),
            series(&["0", "4", "6", "4", "1"])
        );
        assert_eq!(
            iterate_by_conjugation(&inst, &r("1"), 4).unwrap(),
            PowerSeries::x(4)
        );
        assert_eq!(
            iterate_by_conjugation(&inst, &r("2"), 4).unwrap(),
            PowerSeries::from_polynomial(inst.p(), 4)
        );
    }

    #[test]
    fn recurrence_examples() {
        let p = poly(&["0", "2", "1"]);
        for (n, j) in [(1, 2), (0, 2)] {
            let check = verify_iterate_recurrence(&p, &r("2"), n, j, 4).unwrap();
            assert!(check.residual().is_zero(), "{check:?}");
        }
        let lin = poly(&["0", "3"]);
        let check = verify_iterate_recurrence(&lin, &r("3"), 1, 3, 4).unwrap();
        assert!(check.residual().is_zero());
        assert!(check.lhs.is_zero());
        assert!(verify_iterate_recurrence(&p, &r("2"), 2, 2, 4).is_err());
        assert!(verify_iterate_recurrence(&p, &r("3"), 0, 2, 4).is_err());
    }

    #[test]
    fn q1_identity_examples() {
        let p = poly(&["0", "1", "1"]);
        assert!(verify_q1_difference_identity(&p, 3, 3).unwrap().is_zero());
        assert!(verify_q1_difference_identity(&p, 2, 2).unwrap().is_zero());
        assert!(verify_q1_difference_identity(&p, 5, 1).unwrap().is_zero());
        assert_eq!(
            verify_q1_difference_identity(&poly(&["0", "2", "1"]), 3, 2),
            Err(Error::NotTangentToIdentity)
        );
    }
}
