use std::fmt;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;

/// Finite sum `sum_{e=low}^{high} c_e x^e` where `low` may be negative.
///
/// Both end coefficients are nonzero; the zero Laurent polynomial has
/// `low = 0` and no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<F> {
    low: i64,
    coeffs: Vec<F>,
}

impl<F: Field> LaurentPolynomial<F> {
    pub fn new(low: i64, coeffs: Vec<F>) -> Self {
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        let mut coeffs: Vec<F> = coeffs.into_iter().skip(lead_zeros).collect();
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        LaurentPolynomial {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        LaurentPolynomial {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    /// `x^shift * p`.
    pub fn shifted(p: &Polynomial<F>, shift: i64) -> Self {
        Self::new(shift, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent; `None` for zero.
    pub fn high(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient at exponent `e` (zero outside the support).
    pub fn coeff(&self, e: i64) -> F {
        let idx = e - self.low;
        if idx < 0 {
            return F::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Iterates `(exponent, coefficient)` over the support.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Exact value at `v`; needs `v != 0` when negative exponents occur.
    pub fn eval(&self, v: &F) -> Result<F> {
        if self.is_zero() {
            return Ok(F::zero());
        }
        if self.low < 0 && v.is_zero() {
            return Err(Error::ZeroAtNegativeExponent);
        }
        let body = self
            .coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul_ref(v).add_ref(c));
        if self.low == 0 {
            Ok(body)
        } else {
            Ok(body.mul_ref(&v.pow(self.low)?))
        }
    }
}

impl<F: Field> fmt::Display for LaurentPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let body = Polynomial::new(self.coeffs.clone());
        match self.low {
            0 => write!(f, "{body}"),
            1 => write!(f, "x*({body})"),
            e => write!(f, "x^{e}*({body})"),
        }
    }
}

impl<F: fmt::Debug> fmt::Debug for LaurentPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LaurentPolynomial")
            .field("low", &self.low)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn normalizes_support() {
        let l = LaurentPolynomial::new(-3, vec![r("0"), r("-1"), r("1"), r("0")]);
        assert_eq!(l.low(), -2);
        assert_eq!(l.high(), Some(-1));
        assert_eq!(l.coeff(-2), r("-1"));
        assert_eq!(l.coeff(5), r("0"));
        assert!(LaurentPolynomial::<Rational>::new(4, vec![r("0")]).is_zero());
    }

    #[test]
    fn evaluates_negative_exponents() {
        // x^{-1}(x - 1) at 2
        let l = LaurentPolynomial::new(-1, vec![r("-1"), r("1")]);
        assert_eq!(l.eval(&r("2")).unwrap(), r("1/2"));
        assert_eq!(l.eval(&r("0")), Err(Error::ZeroAtNegativeExponent));
        let pos = LaurentPolynomial::new(2, vec![r("1")]);
        assert_eq!(pos.eval(&r("0")).unwrap(), r("0"));
    }
}
