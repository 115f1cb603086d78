//! Iterates of p through the Poincaré conjugacy: p^m = f(q^m f^{-1}(x)).

use poincare::prelude::*;

fn main() -> Result<()> {
    let p: Polynomial<Rational> = "0,2,-1,1".parse_coeffs()?;
    let inst = PoincareInstance::new(p.clone(), 7)?;
    for m in [-2i64, -1, 2, 3] {
        let lambda = inst.q().pow(m)?;
        let conj = iterate_by_conjugation(&inst, &lambda, 7)?;
        let direct = iterate_integer(&p, m, 7)?;
        println!(
            "m = {m:>2}: {conj}  (matches composition: {})",
            conj == direct
        );
    }
    let lambda: Rational = "-1/2".parse()?;
    println!(
        "λ = {lambda}: {}",
        iterate_by_conjugation(&inst, &lambda, 7)?
    );
    Ok(())
}
