//! JSON documents for series and polynomials.
//!
//! Coefficients are exact strings in the textual encoding of their field:
//! `{"field":"Q","precision":2,"coeffs":["0","1","1/2"]}`.

use serde::{Deserialize, Serialize};

use super::{LaurentPolynomial, Polynomial, PowerSeries};
use crate::error::{Error, Result};
use crate::field::{Field, FieldTag};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub field: String,
    pub precision: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub field: String,
    pub degree: usize,
    pub coeffs: Vec<String>,
}

/// `degree` is the highest exponent, `low` the lowest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentDoc {
    pub field: String,
    pub degree: i64,
    pub low: i64,
    pub coeffs: Vec<String>,
}

fn check_field<F: Field>(tag: &str) -> Result<()> {
    let found: FieldTag = tag.parse()?;
    if found != F::TAG {
        return Err(Error::FieldMismatch {
            expected: F::TAG.to_string(),
            found: found.to_string(),
        });
    }
    Ok(())
}

fn parse_all<F: Field>(coeffs: &[String]) -> Result<Vec<F>> {
    coeffs.iter().map(|c| c.parse()).collect()
}

fn strings<F: Field>(coeffs: &[F]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}

impl SeriesDoc {
    pub fn from_series<F: Field>(s: &PowerSeries<F>) -> Self {
        SeriesDoc {
            field: F::TAG.to_string(),
            precision: s.precision(),
            coeffs: strings(s.coeffs()),
        }
    }

    pub fn to_series<F: Field>(&self) -> Result<PowerSeries<F>> {
        check_field::<F>(&self.field)?;
        if self.coeffs.len() != self.precision + 1 {
            return Err(Error::Parse(format!(
                "precision {} needs {} coefficients, got {}",
                self.precision,
                self.precision + 1,
                self.coeffs.len()
            )));
        }
        Ok(PowerSeries::new(parse_all(&self.coeffs)?))
    }
}

impl PolynomialDoc {
    pub fn from_polynomial<F: Field>(p: &Polynomial<F>) -> Self {
        let coeffs = if p.is_zero() {
            vec![F::zero().to_string()]
        } else {
            strings(p.coeffs())
        };
        PolynomialDoc {
            field: F::TAG.to_string(),
            degree: p.degree().unwrap_or(0),
            coeffs,
        }
    }

    pub fn to_polynomial<F: Field>(&self) -> Result<Polynomial<F>> {
        check_field::<F>(&self.field)?;
        if self.coeffs.len() != self.degree + 1 {
            return Err(Error::Parse(format!(
                "degree {} needs {} coefficients, got {}",
                self.degree,
                self.degree + 1,
                self.coeffs.len()
            )));
        }
        Ok(Polynomial::new(parse_all(&self.coeffs)?))
    }
}

impl LaurentDoc {
    pub fn from_laurent<F: Field>(p: &LaurentPolynomial<F>) -> Self {
        if p.is_zero() {
            return LaurentDoc {
                field: F::TAG.to_string(),
                degree: 0,
                low: 0,
                coeffs: vec![F::zero().to_string()],
            };
        }
        LaurentDoc {
            field: F::TAG.to_string(),
            degree: p.high().expect("nonzero"),
            low: p.low(),
            coeffs: strings(p.coeffs()),
        }
    }

    pub fn to_laurent<F: Field>(&self) -> Result<LaurentPolynomial<F>> {
        check_field::<F>(&self.field)?;
        let expected = self.degree - self.low + 1;
        if expected < 1 || self.coeffs.len() as i64 != expected {
            return Err(Error::Parse(format!(
                "exponents {}..={} do not match {} coefficients",
                self.low,
                self.degree,
                self.coeffs.len()
            )));
        }
        Ok(LaurentPolynomial::new(self.low, parse_all(&self.coeffs)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalFunction};

    #[test]
    fn series_document_layout() {
        let s = PowerSeries::new(
            ["0", "1", "1/2", "1/6", "1/24"]
                .iter()
                .map(|c| c.parse::<Rational>().unwrap())
                .collect(),
        );
        let json = serde_json::to_string(&SeriesDoc::from_series(&s)).unwrap();
        assert_eq!(
            json,
            r#"{"field":"Q","precision":4,"coeffs":["0","1","1/2","1/6","1/24"]}"#
        );
        let back: SeriesDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_series::<Rational>().unwrap(), s);
    }

    #[test]
    fn field_mismatch_is_reported() {
        let doc = SeriesDoc {
            field: "Q(q)".into(),
            precision: 0,
            coeffs: vec!["q".into()],
        };
        assert!(matches!(
            doc.to_series::<Rational>(),
            Err(Error::FieldMismatch { .. })
        ));
        assert_eq!(
            doc.to_series::<RationalFunction>().unwrap()[0],
            RationalFunction::q()
        );
    }

    #[test]
    fn length_checks() {
        let doc = SeriesDoc {
            field: "Q".into(),
            precision: 3,
            coeffs: vec!["0".into()],
        };
        assert!(matches!(doc.to_series::<Rational>(), Err(Error::Parse(_))));
    }

    #[test]
    fn polynomial_and_laurent_documents() {
        let p: Polynomial<Rational> = Polynomial::new(vec![Rational::zero(), 2.into(), 1.into()]);
        let doc = PolynomialDoc::from_polynomial(&p);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"field":"Q","degree":2,"coeffs":["0","2","1"]}"#
        );
        assert_eq!(doc.to_polynomial::<Rational>().unwrap(), p);

        let l = LaurentPolynomial::new(-1, vec![Rational::from(-1), Rational::one()]);
        let ldoc = LaurentDoc::from_laurent(&l);
        assert_eq!(
            serde_json::to_string(&ldoc).unwrap(),
            r#"{"field":"Q","degree":0,"low":-1,"coeffs":["-1","1"]}"#
        );
        assert_eq!(ldoc.to_laurent::<Rational>().unwrap(), l);
    }
}
