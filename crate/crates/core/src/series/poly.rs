use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense univariate polynomial with exact coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![F::zero(), F::one()],
        }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<F> {
        self.coeffs.last().cloned()
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul_ref(v).add_ref(c))
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    /// Euclidean division; `DivisionByZero` for a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dl_inv = dl.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul_ref(&dl_inv);
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_ref(&c.mul_ref(di));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lc) => a.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => a,
        }
    }

    /// Converts coefficients into another field.
    pub fn map<G: Field>(&self, f: impl FnMut(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders with a chosen variable name, highest degree first.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { p: self, var }
    }
}

struct PolyDisplay<'a, F> {
    p: &'a Polynomial<F>,
    var: &'a str,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.p.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{k}", self.var),
            };
            let cs = c.to_string();
            let term = if k == 0 {
                cs
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else if cs.contains(['+', '(']) || cs[1..].contains('-') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if !first && !term.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&term)?;
            first = false;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl<F: fmt::Debug> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            (0..n)
                .map(|i| self.coeff(i).add_ref(&rhs.coeff(i)))
                .collect(),
        )
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            (0..n)
                .map(|i| self.coeff(i).sub_ref(&rhs.coeff(i)))
                .collect(),
        )
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}
