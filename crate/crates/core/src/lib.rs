//! Exact formal power series for Poincaré and Schröder functional equations.
//!
//! Coefficients live in an exact [`field::Field`]: the rationals, or rational
//! functions in a symbolic `q`. On top of truncated series arithmetic the crate
//! provides
//!
//! * homogeneous q-difference operators `D_{g;q}` and coefficient extraction
//!   through them ([`qdiff`]),
//! * two independent solvers for `f(q x) = p(f(x))` plus the Schröder
//!   solution `σ = f^{∘-1}` ([`poincare`]),
//! * integer, continuous and conjugated iterates of polynomial maps, and
//!   checks of the identities relating them ([`iteration`]),
//! * a command-line front end ([`cli`]).
//!
//! ```
//! use poincare::prelude::*;
//!
//! let p: Polynomial<Rational> = "0,2,1".parse_coeffs().unwrap(); // 2x + x^2
//! let inst = PoincareInstance::new(p, 4).unwrap();
//! let f = solve_poincare_recursive(&inst).unwrap();
//! assert_eq!(f.to_string(), "1/24*x^4+1/6*x^3+1/2*x^2+x + O(x^5)");
//! ```

pub mod cli;
pub mod error;
pub mod field;
pub mod iteration;
pub mod poincare;
pub mod qdiff;
pub mod series;

pub use error::{Error, Result};

/// Parses comma-separated coefficient lists, lowest degree first.
pub trait ParseCoeffs {
    fn parse_coeffs<T: FromCoeffs>(&self) -> Result<T>;
}

/// Types buildable from a coefficient list.
pub trait FromCoeffs: Sized {
    fn from_coeff_strs(parts: &[&str]) -> Result<Self>;
}

impl ParseCoeffs for str {
    fn parse_coeffs<T: FromCoeffs>(&self) -> Result<T> {
        let parts: Vec<&str> = self.split(',').map(str::trim).collect();
        if parts.iter().any(|s| s.is_empty()) {
            return Err(Error::Parse(format!("empty coefficient in `{self}`")));
        }
        T::from_coeff_strs(&parts)
    }
}

impl<F: field::Field> FromCoeffs for series::Polynomial<F> {
    fn from_coeff_strs(parts: &[&str]) -> Result<Self> {
        Ok(series::Polynomial::new(
            parts.iter().map(|s| s.parse()).collect::<Result<_>>()?,
        ))
    }
}

impl<F: field::Field> FromCoeffs for series::PowerSeries<F> {
    fn from_coeff_strs(parts: &[&str]) -> Result<Self> {
        Ok(series::PowerSeries::new(
            parts.iter().map(|s| s.parse()).collect::<Result<_>>()?,
        ))
    }
}

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::field::{Field, FieldElement, FieldTag, Rational, RationalFunction};
    pub use crate::iteration::{
        iterate_by_conjugation, iterate_coefficient_polynomial, iterate_continuous,
        iterate_integer, verify_iterate_recurrence, verify_q1_difference_identity,
        ContinuousIteration, IterateCoefficientPolynomial,
    };
    pub use crate::poincare::{
        schroder_residual, solve_poincare_nonrecursive, solve_poincare_recursive, solve_schroder,
        verify_poincare, GChoice, PoincareInstance,
    };
    pub use crate::qdiff::{
        canonical_order_poly, laurent_q_pochhammer, maclaurin_coefficient, qdiff_order,
        QDiffOperator,
    };
    pub use crate::series::{LaurentPolynomial, Polynomial, PowerSeries};
    pub use crate::ParseCoeffs;
}
