//! Continuous iteration of p = x + x^2 through interpolated iterate coefficients.

use poincare::prelude::*;

fn main() -> Result<()> {
    let p: Polynomial<Rational> = "0,1,1".parse_coeffs()?;
    let it = ContinuousIteration::new(&p, 10)?;
    for j in 2..=5 {
        let c = it.coefficient_polynomial(j).expect("within precision");
        println!("(p^n)_{j} = {c}");
    }

    let half = it.at(&"1/2".parse()?);
    println!("p^(1/2) = {half}");
    println!("p^(1/2) ∘ p^(1/2) = {}", half.compose(&half)?);

    let third = it.at(&"1/3".parse()?);
    let two_thirds = it.at(&"2/3".parse()?);
    println!(
        "p^(1/3) ∘ p^(2/3) = p: {}",
        third.compose(&two_thirds)? == it.at(&Rational::one())
    );
    Ok(())
}
