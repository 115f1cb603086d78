//! Exact coefficient fields.
//!
//! Every series, polynomial and operator in this crate is generic over a
//! [`Field`]. Two fields are provided: the rationals [`Rational`] and the
//! rational functions in one indeterminate `q` over the rationals,
//! [`RationalFunction`]. Computations are statically confined to a single
//! field; [`FieldElement`] is the tagged, dynamically checked form used at
//! I/O boundaries.

mod expr;
mod ratfun;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

pub use ratfun::RationalFunction;
pub use rational::Rational;

/// Which coefficient field a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    /// The rationals, encoded as `"Q"`.
    Q,
    /// Rational functions in `q` over the rationals, encoded as `"Q(q)"`.
    Qq,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => f.write_str("Q"),
            FieldTag::Qq => f.write_str("Q(q)"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(FieldTag::Q),
            "Q(q)" | "Qq" => Ok(FieldTag::Qq),
            other => Err(Error::Parse(format!("unknown field tag `{other}`"))),
        }
    }
}

/// An exact, canonically normalized field.
///
/// Equality is structural equality of canonical forms, so `==` is exact
/// mathematical equality.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + FromStr<Err = Error>
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Embeds a rational constant.
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    /// Multiplicative inverse; `DivisionByZero` for zero.
    fn inv(&self) -> Result<Self>;

    fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// `self^k` by binary exponentiation. Negative `k` inverts first.
    fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }

    /// True iff `self^m = 1` for some `1 <= m <= k`. Errors with `ZeroBase` on zero.
    fn is_root_of_unity_up_to(&self, k: usize) -> Result<bool>;
}

/// Integer power that cannot fail (nonnegative exponent).
pub(crate) fn pow_u<F: Field>(a: &F, k: usize) -> F {
    a.pow(k as i64).expect("nonnegative powers never divide")
}

/// Binary operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A coefficient tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(Rational),
    RationalFunction(RationalFunction),
}

impl FieldElement {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldElement::Rational(_) => FieldTag::Q,
            FieldElement::RationalFunction(_) => FieldTag::Qq,
        }
    }

    /// Parses `s` as an element of the field named by `tag`.
    pub fn parse(tag: FieldTag, s: &str) -> Result<Self> {
        match tag {
            FieldTag::Q => s.parse().map(FieldElement::Rational),
            FieldTag::Qq => s.parse().map(FieldElement::RationalFunction),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(a) => a.is_zero(),
            FieldElement::RationalFunction(a) => a.is_zero(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(a) => a.fmt(f),
            FieldElement::RationalFunction(a) => a.fmt(f),
        }
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        FieldElement::Rational(r)
    }
}

impl From<RationalFunction> for FieldElement {
    fn from(r: RationalFunction) -> Self {
        FieldElement::RationalFunction(r)
    }
}

fn apply<F: Field>(a: &F, b: &F, op: FieldOp) -> Result<F> {
    Ok(match op {
        FieldOp::Add => a.add_ref(b),
        FieldOp::Sub => a.sub_ref(b),
        FieldOp::Mul => a.mul_ref(b),
        FieldOp::Div => a.checked_div(b)?,
    })
}

/// Exact arithmetic on tagged elements; both operands must share a field.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    match (a, b) {
        (FieldElement::Rational(x), FieldElement::Rational(y)) => apply(x, y, op).map(Into::into),
        (FieldElement::RationalFunction(x), FieldElement::RationalFunction(y)) => {
            apply(x, y, op).map(Into::into)
        }
        _ => Err(Error::FieldMismatch {
            expected: a.tag().to_string(),
            found: b.tag().to_string(),
        }),
    }
}

pub fn field_pow(a: &FieldElement, k: i64) -> Result<FieldElement> {
    match a {
        FieldElement::Rational(x) => x.pow(k).map(Into::into),
        FieldElement::RationalFunction(x) => x.pow(k).map(Into::into),
    }
}

pub fn is_root_of_unity_up_to(a: &FieldElement, k: usize) -> Result<bool> {
    match a {
        FieldElement::Rational(x) => x.is_root_of_unity_up_to(k),
        FieldElement::RationalFunction(x) => x.is_root_of_unity_up_to(k),
    }
}

/// Evaluates a rational function at a rational point.
pub fn ratfun_eval_at(r: &RationalFunction, v: &Rational) -> Result<Rational> {
    r.eval_at(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> FieldElement {
        FieldElement::parse(FieldTag::Q, s).unwrap()
    }

    fn qq(s: &str) -> FieldElement {
        FieldElement::parse(FieldTag::Qq, s).unwrap()
    }

    #[test]
    fn tagged_arith() {
        assert_eq!(
            field_arith(&q("1/2"), &q("1/3"), FieldOp::Add).unwrap(),
            q("5/6")
        );
        assert_eq!(
            field_arith(&qq("q^2-1"), &qq("q-1"), FieldOp::Div).unwrap(),
            qq("q+1")
        );
        assert_eq!(
            field_arith(&qq("q-1"), &qq("q+1"), FieldOp::Mul).unwrap(),
            qq("q^2-1")
        );
        assert_eq!(
            field_arith(&q("1"), &q("0"), FieldOp::Div),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            field_arith(&q("1"), &qq("q"), FieldOp::Add),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn tagged_pow() {
        assert_eq!(field_pow(&q("2"), 10).unwrap(), q("1024"));
        assert_eq!(field_pow(&qq("q"), 3).unwrap(), qq("q^3"));
        assert_eq!(field_pow(&q("2/3"), -2).unwrap(), q("9/4"));
        assert_eq!(field_pow(&q("7/5"), 0).unwrap(), q("1"));
        assert_eq!(field_pow(&q("0"), -1), Err(Error::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        assert!(is_root_of_unity_up_to(&q("-1"), 2).unwrap());
        assert!(!is_root_of_unity_up_to(&q("-1"), 1).unwrap());
        assert!(is_root_of_unity_up_to(&q("1"), 1).unwrap());
        assert!(!is_root_of_unity_up_to(&q("2"), 64).unwrap());
        assert!(!is_root_of_unity_up_to(&qq("q"), 16).unwrap());
        assert!(is_root_of_unity_up_to(&qq("(q-1)/(q-1) * -1"), 4).unwrap());
        assert_eq!(is_root_of_unity_up_to(&q("0"), 3), Err(Error::ZeroBase));
    }

    #[test]
    fn eval_rational_function() {
        let r: RationalFunction = "(q^2-1)/(q-1)".parse().unwrap();
        assert_eq!(
            ratfun_eval_at(&r, &Rational::from_integer(1)).unwrap(),
            Rational::from_integer(2)
        );
        let cube: RationalFunction = "q^3".parse().unwrap();
        assert_eq!(
            ratfun_eval_at(&cube, &Rational::from_integer(2)).unwrap(),
            Rational::from_integer(8)
        );
        let pole: RationalFunction = "1/(q-1)".parse().unwrap();
        assert!(matches!(
            ratfun_eval_at(&pole, &Rational::from_integer(1)),
            Err(Error::PoleAtEvaluationPoint(_))
        ));
    }

    #[test]
    fn tag_round_trip() {
        for tag in [FieldTag::Q, FieldTag::Qq] {
            assert_eq!(tag.to_string().parse::<FieldTag>().unwrap(), tag);
        }
        assert!("R".parse::<FieldTag>().is_err());
    }
}
