//! Truncated series: products, composition, reversion.

use poincare::prelude::*;

fn main() -> Result<()> {
    let exp_m1: PowerSeries<Rational> = "0,1,1/2,1/6,1/24,1/120,1/720".parse_coeffs()?;
    let log1p = exp_m1.revert()?;
    println!("exp(x) - 1       = {exp_m1}");
    println!("its reversion    = {log1p}");
    println!("composition      = {}", exp_m1.compose(&log1p)?);

    let sq = exp_m1.mul(&exp_m1);
    println!("(exp(x) - 1)^2   = {sq}");
    println!("exp(2x) - 1      = {}", exp_m1.scale_arg(&"2".parse()?));

    let p: Polynomial<Rational> = "0,1,1".parse_coeffs()?;
    let twice = p.compose_series(&PowerSeries::from_polynomial(&p, 6));
    println!("p(p(x)), p = {p}: {twice}");
    Ok(())
}
