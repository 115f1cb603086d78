#![allow(dead_code)]

use poincare::prelude::*;
use proptest::prelude::*;

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn poly(cs: &[&str]) -> Polynomial<Rational> {
    Polynomial::new(cs.iter().map(|c| r(c)).collect())
}

pub fn series(cs: &[&str]) -> PowerSeries<Rational> {
    PowerSeries::new(cs.iter().map(|c| r(c)).collect())
}

pub fn rat_from(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// Small rationals n/d with |n| <= 6, 1 <= d <= 4.
pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat_from(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// Multipliers that are not roots of unity.
pub fn good_q() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![
        rat_from(2, 1),
        rat_from(3, 1),
        rat_from(-2, 1),
        rat_from(5, 2),
        rat_from(1, 3),
    ])
}

pub fn series_strategy(precision: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    prop::collection::vec(small_rational(), precision + 1).prop_map(PowerSeries::new)
}

/// Series with zero constant term.
pub fn nilpotent_series(precision: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    series_strategy(precision).prop_map(|s| {
        let mut c = s.into_coeffs();
        c[0] = Rational::zero();
        PowerSeries::new(c)
    })
}

/// Invertible series: zero constant term, nonzero linear term.
pub fn invertible_series(precision: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    (nilpotent_series(precision), nonzero_rational()).prop_map(|(s, a)| {
        let mut c = s.into_coeffs();
        c[1] = a;
        PowerSeries::new(c)
    })
}

pub fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(small_rational(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

/// p = q x + p_2 x^2 + .. + p_d x^d
pub fn poincare_map(q: Rational, max_deg: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(small_rational(), 1..max_deg).prop_map(move |tail| {
        let mut c = vec![Rational::zero(), q.clone()];
        c.extend(tail);
        Polynomial::new(c)
    })
}

/// p = x + p_2 x^2 + .. + p_d x^d
pub fn tangent_map(max_deg: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    poincare_map(Rational::one(), max_deg)
}

/// Small rational functions in q: ratios of integer polynomials of degree <= 2.
pub fn small_ratfun() -> impl Strategy<Value = RationalFunction> {
    let ipoly = prop::collection::vec(-3i64..=3, 1..=3)
        .prop_map(|cs| Polynomial::new(cs.into_iter().map(Rational::from).collect::<Vec<_>>()));
    (
        ipoly.clone(),
        ipoly.prop_filter("nonzero denominator", |p| !p.is_zero()),
    )
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}
