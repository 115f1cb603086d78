//! Checks of the identities linking iterates p^n across n.

use poincare::prelude::*;

fn main() -> Result<()> {
    for q in ["2", "3"] {
        let q: Rational = q.parse()?;
        let p = Polynomial::new(vec![Rational::zero(), q.clone(), Rational::one()]);
        for j in 1..=4usize {
            for n in 0..j as i64 {
                let chk = verify_iterate_recurrence(&p, &q, n, j, j)?;
                println!(
                    "q = {q} n = {n} j = {j}: lhs {} rhs {} residual {}",
                    chk.lhs,
                    chk.rhs,
                    chk.residual()
                );
            }
        }
    }

    // tangent to the identity: j-th differences of (p^n)_j vanish
    let p: Polynomial<Rational> = "0,1,1,1".parse_coeffs()?;
    for j in 1..=5 {
        println!(
            "q = 1, j = {j}: {}",
            verify_q1_difference_identity(&p, j as i64 + 1, j)?
        );
    }
    Ok(())
}
