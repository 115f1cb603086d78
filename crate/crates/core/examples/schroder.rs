//! Schröder's equation q σ = σ ∘ p for p = (1+x)^2 - 1; the normalized solution is log(1+x).

use poincare::prelude::*;

fn main() -> Result<()> {
    let p: Polynomial<Rational> = "0,2,1".parse_coeffs()?;
    let inst = PoincareInstance::new(p, 12)?;
    let sigma = solve_schroder(&inst)?;
    println!("σ = {sigma}");
    println!("σ∘p - qσ = {}", schroder_residual(&sigma, &inst)?);

    let f = solve_poincare_recursive(&inst)?;
    println!("f = {f}");
    println!("f∘σ = {}", f.compose(&sigma)?);
    Ok(())
}
