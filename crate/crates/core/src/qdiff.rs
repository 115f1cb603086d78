//! Homogeneous q-difference operators.
//!
//! For a nonzero polynomial `g` and base `q`, the operator
//! `D_{g;q} f = x^{-n} sum_i g_i f(q^i x)` sends `x^m` to `g(q^m) x^{m-n}`.
//! Its order `n` is the least index with `g(q^n) != 0`, so `D` annihilates
//! `1, x, .., x^{n-1}` and the division by `x^n` is exact.

use crate::error::{Error, Result};
use crate::field::{pow_u, Field};
use crate::series::{LaurentPolynomial, Polynomial, PowerSeries};

/// `D_{g;q}` with its q-difference order computed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDiffOperator<F> {
    g: Polynomial<F>,
    q: F,
    order: usize,
}

impl<F: Field> QDiffOperator<F> {
    /// Fails on `g = 0`, `q = 0`, or `q` a root of unity of order at most
    /// `max(bound, deg g)`.
    pub fn new(g: Polynomial<F>, q: F, bound: usize) -> Result<Self> {
        let order = qdiff_order(&g, &q, bound)?;
        Ok(QDiffOperator { g, q, order })
    }

    /// The first-order operator with `g = (1 - x) / (1 - q)`, i.e. the Jackson derivative.
    pub fn jackson(q: F) -> Result<Self> {
        let scale = F::one()
            .sub_ref(&q)
            .inv()
            .map_err(|_| Error::RootOfUnityBase(1))?;
        let g = Polynomial::new(vec![scale.clone(), -scale]);
        Self::new(g, q, 1)
    }

    pub fn g(&self) -> &Polynomial<F> {
        &self.g
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `D f`, with precision `prec(f) - order`.
    pub fn apply(&self, f: &PowerSeries<F>) -> Result<PowerSeries<F>> {
        if f.precision() < self.order {
            return Err(Error::PrecisionTooLow {
                have: f.precision(),
                need: self.order,
            });
        }
        let mut h = PowerSeries::zero(f.precision());
        let mut qi = F::one();
        for (i, gi) in self.g.coeffs().iter().enumerate() {
            if i > 0 {
                qi = qi.mul_ref(&self.q);
            }
            if !gi.is_zero() {
                h = h.add(&f.scale_arg(&qi).scale(gi));
            }
        }
        // h_m = g(q^m) f_m vanishes below the order; div_xn re-checks it
        h.div_xn(self.order)
    }
}

/// Least `n` with `g(q^n) != 0`; always at most `deg g`.
pub fn qdiff_order<F: Field>(g: &Polynomial<F>, q: &F, bound: usize) -> Result<usize> {
    let deg = g.degree().ok_or(Error::ZeroPolynomial)?;
    check_base(q, bound.max(deg))?;
    let mut qn = F::one();
    for n in 0..=deg {
        if !g.eval(&qn).is_zero() {
            return Ok(n);
        }
        qn = qn.mul_ref(q);
    }
    // q^0..q^deg are distinct, and a nonzero g of degree deg has at most deg roots
    unreachable!("nonzero polynomial vanished at deg + 1 distinct points")
}

pub(crate) fn check_base<F: Field>(q: &F, bound: usize) -> Result<()> {
    if q.is_zero() {
        return Err(Error::ZeroBase);
    }
    if q.is_root_of_unity_up_to(bound)? {
        let m = (1..=bound)
            .find(|&m| pow_u(q, m).is_one())
            .expect("some power is one");
        return Err(Error::RootOfUnityBase(m));
    }
    Ok(())
}

pub fn qdiff_apply<F: Field>(d: &QDiffOperator<F>, f: &PowerSeries<F>) -> Result<PowerSeries<F>> {
    d.apply(f)
}

/// Recovers `f_j` as `(D_{g_j;q} f)(0) / g_j(q^j)`, where `g_j` must have order exactly `j`.
pub fn maclaurin_coefficient<F: Field>(
    f: &PowerSeries<F>,
    j: usize,
    g_j: &Polynomial<F>,
    q: &F,
) -> Result<F> {
    let bound = j.max(g_j.degree().unwrap_or(0)).max(1);
    let d = QDiffOperator::new(g_j.clone(), q.clone(), bound)?;
    if d.order() != j {
        return Err(Error::OrderMismatch {
            expected: j,
            found: d.order(),
        });
    }
    let df = d.apply(f)?;
    df[0].checked_div(&g_j.eval(&pow_u(q, j)))
}

/// `prod_{i=0}^{j-1} (x - q^i)`, expanded; its q-difference order is `j`.
pub fn canonical_order_poly<F: Field>(j: usize, q: &F) -> Result<Polynomial<F>> {
    check_base(q, j.max(1))?;
    let mut acc = Polynomial::one();
    let mut qi = F::one();
    for i in 0..j {
        if i > 0 {
            qi = qi.mul_ref(q);
        }
        let factor = Polynomial::new(vec![-qi.clone(), F::one()]);
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// `x^n prod_{i=0}^{j-1} (x - q^i)` with `n` possibly negative.
pub fn laurent_q_pochhammer<F: Field>(n: i64, j: usize, q: &F) -> Result<LaurentPolynomial<F>> {
    Ok(LaurentPolynomial::shifted(&canonical_order_poly(j, q)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalFunction};

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
    fn order_examples() {
        assert_eq!(
            qdiff_order(&poly(&["2", "-3", "1"]), &r("2"), 3).unwrap(),
            2
        );
        assert_eq!(qdiff_order(&poly(&["1"]), &r("2"), 1).unwrap(), 0);
        assert_eq!(qdiff_order(&poly(&["-1", "1"]), &r("2"), 2).unwrap(), 1);
        assert_eq!(
            qdiff_order(&poly(&[]), &r("2"), 2),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            qdiff_order(&poly(&["-1", "1"]), &r("-1"), 4),
            Err(Error::RootOfUnityBase(2))
        );
        assert_eq!(
            qdiff_order(&poly(&["-1", "1"]), &r("0"), 4),
            Err(Error::ZeroBase)
        );
    }

    #[test]
    fn apply_examples() {
        let d = QDiffOperator::new(poly(&["-1", "1"]), r("2"), 2).unwrap();
        assert_eq!(
            d.apply(&series(&["0", "1", "1"])).unwrap(),
            series(&["1", "3"])
        );
        assert!(d.apply(&PowerSeries::zero(4)).unwrap().is_zero());

        let d2 = QDiffOperator::new(poly(&["2", "-3", "1"]), r("2"), 3).unwrap();
        assert_eq!(d2.apply(&series(&["0", "1", "1"])).unwrap(), series(&["6"]));
        assert!(matches!(
            d2.apply(&series(&["0", "1"])),
            Err(Error::PrecisionTooLow { have: 1, need: 2 })
        ));
    }

    #[test]
    fn broken_operator_invariant_is_caught() {
        // an order that lies about g trips the always-on divisibility check
        let liar = QDiffOperator {
            g: poly(&["1"]),
            q: r("2"),
            order: 1,
        };
        assert!(matches!(
            liar.apply(&series(&["1", "1"])),
            Err(Error::NotDivisibleByXn { n: 1, index: 0 })
        ));
    }

    #[test]
    fn maclaurin_examples() {
        let f = series(&["0", "1", "1"]);
        assert_eq!(
            maclaurin_coefficient(&f, 2, &poly(&["2", "-3", "1"]), &r("2")).unwrap(),
            r("1")
        );
        assert_eq!(
            maclaurin_coefficient(&f, 1, &poly(&["-1", "1"]), &r("2")).unwrap(),
            r("1")
        );
        let g = series(&["5/3", "1", "1"]);
        assert_eq!(
            maclaurin_coefficient(&g, 0, &poly(&["1"]), &r("7")).unwrap(),
            r("5/3")
        );
        assert_eq!(
            maclaurin_coefficient(&f, 2, &poly(&["-1", "1"]), &r("2")),
            Err(Error::OrderMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn canonical_poly_examples() {
        assert_eq!(canonical_order_poly(0, &r("2")).unwrap(), poly(&["1"]));
        assert_eq!(
            canonical_order_poly(2, &r("2")).unwrap(),
            poly(&["2", "-3", "1"])
        );
        assert_eq!(
            canonical_order_poly(3, &r("2")).unwrap(),
            poly(&["-8", "14", "-7", "1"])
        );
        assert!(canonical_order_poly(3, &r("-1")).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let a = laurent_q_pochhammer(0, 2, &r("2")).unwrap();
        assert_eq!((a.low(), a.high()), (0, Some(2)));
        assert_eq!(a.coeffs(), poly(&["2", "-3", "1"]).coeffs());
        let b = laurent_q_pochhammer(-1, 1, &r("2")).unwrap();
        assert_eq!((b.low(), b.coeff(-1), b.coeff(0)), (-1, r("-1"), r("1")));
        let c = laurent_q_pochhammer(3, 0, &r("2")).unwrap();
        assert_eq!((c.low(), c.high(), c.coeff(3)), (3, Some(3), r("1")));
    }

    #[test]
    fn jackson_is_first_order() {
        let d = QDiffOperator::jackson(r("3")).unwrap();
        assert_eq!(d.order(), 1);
        // Jackson derivative of x^2 is (q^2 - 1)/(q - 1) x = (q + 1) x
        let out = d.apply(&series(&["0", "0", "1", "0"])).unwrap();
        assert_eq!(out, series(&["0", "4", "0"]));
        assert!(QDiffOperator::jackson(r("1")).is_err());
    }

    #[test]
    fn symbolic_base() {
        let q = RationalFunction::q();
        let g = canonical_order_poly(3, &q).unwrap();
        assert_eq!(qdiff_order(&g, &q, 3).unwrap(), 3);
    }
}
