//! Solve f(qx) = p(f(x)) both ways and check the residual.

use poincare::prelude::*;

fn main() -> Result<()> {
    let p: Polynomial<Rational> = "0,3,-1,1/2".parse_coeffs()?;
    let inst = PoincareInstance::new(p, 10)?;

    let rec = solve_poincare_recursive(&inst)?;
    let non = solve_poincare_nonrecursive(&inst, &GChoice::Canonical)?;
    println!("p = {}, q = {}", inst.p(), inst.q());
    println!("f = {rec}");
    assert_eq!(rec, non);

    let res = verify_poincare(&rec, &inst)?;
    println!(
        "residuals vanish through x^{}: {}",
        inst.precision(),
        res.is_zero()
    );

    // any g_j of order j gives the same f
    let q = inst.q().clone();
    let gs = (1..=10)
        .map(|j| {
            let h = Polynomial::new(vec![Rational::from(7), Rational::from(1)]);
            Ok(&canonical_order_poly(j, &q)? * &h)
        })
        .collect::<Result<Vec<_>>>()?;
    let alt = solve_poincare_nonrecursive(&inst, &GChoice::Explicit(gs))?;
    println!("with g_j = (x + 7) prod (x - q^i): same f = {}", alt == rec);
    Ok(())
}
