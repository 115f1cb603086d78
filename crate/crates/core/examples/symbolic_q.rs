//! Solving over Q(q) with q left symbolic, then specializing.

use poincare::prelude::*;

fn main() -> Result<()> {
    let p = Polynomial::new(vec![
        RationalFunction::zero(),
        RationalFunction::q(),
        RationalFunction::one(),
    ]);
    let inst = PoincareInstance::new(p, 5)?;
    let f = solve_poincare_recursive(&inst)?;
    for (j, c) in f.coeffs().iter().enumerate() {
        println!("f_{j} = {c}");
    }
    for v in ["2", "-3", "1/2"] {
        let v: Rational = v.parse()?;
        println!("q = {v}: {}", f.try_map(|c| c.eval_at(&v))?);
    }
    Ok(())
}
