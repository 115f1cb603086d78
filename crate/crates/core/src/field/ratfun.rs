use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{expr, Field, FieldTag, Rational};
use crate::error::{Error, Result};
use crate::series::Polynomial;

/// Element of Q(q): a reduced fraction of polynomials in the indeterminate `q`.
///
/// Canonical form: numerator and denominator coprime, denominator monic,
/// zero stored as `0/1`. Structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial<Rational>,
    den: Polynomial<Rational>,
}

impl RationalFunction {
    pub fn new(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RationalFunction {
            num: Polynomial::x(),
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial<Rational>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial<Rational> {
        &self.den
    }

    /// The value as a rational constant, if it has no `q` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    /// Exact value at `q = v`.
    pub fn eval_at(&self, v: &Rational) -> Result<Rational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluationPoint(v.to_string()));
        }
        self.num.eval(v).checked_div(&d)
    }

    fn reduce(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().expect("denominator is nonzero");
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let s = lc.inv().expect("leading coefficient is nonzero");
        RationalFunction {
            num: num.scale(&s),
            den: den.scale(&s),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.display_in("q").to_string();
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let den = self.den.display_in("q").to_string();
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}

fn wrap(s: &str) -> String {
    let atomic = s
        .chars()
        .all(|c| c.is_ascii_digit() || c == 'q' || c == '^');
    if atomic {
        s.to_string()
    } else {
        format!("({s})")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    /// Parses an arithmetic expression in `q` with rational constants,
    /// e.g. `"(q^2+1)/(q-1)"` or `"1/2*q^3 - 3"`.
    fn from_str(s: &str) -> Result<Self> {
        expr::parse_rational_function(s)
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Field for RationalFunction {
    const TAG: FieldTag = FieldTag::Qq;

    fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    fn one() -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        Self::reduce(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    fn is_root_of_unity_up_to(&self, k: usize) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroBase);
        }
        match self.as_constant() {
            Some(c) => c.is_root_of_unity_up_to(k),
            // a nonconstant rational function has nonconstant powers
            None => Ok(false),
        }
    }
}
