//! q-difference operators D_{g;q} and coefficient extraction.

use poincare::prelude::*;

fn main() -> Result<()> {
    let q: Rational = "3".parse()?;
    let f: PowerSeries<Rational> = "5,-1,2,1/2,4,0,-3".parse_coeffs()?;

    let jackson = QDiffOperator::jackson(q.clone())?;
    println!("Jackson derivative of {f}:\n  {}", jackson.apply(&f)?);

    for j in 0..=4 {
        let g = canonical_order_poly(j, &q)?;
        let d = QDiffOperator::new(g.clone(), q.clone(), 6)?;
        let c = maclaurin_coefficient(&f, j, &g, &q)?;
        println!("g_{j} = {g}  order {}  recovers f_{j} = {c}", d.order());
    }

    let bad = canonical_order_poly(2, &q)?;
    match maclaurin_coefficient(&f, 3, &bad, &q) {
        Err(e) => println!("wrong order rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
