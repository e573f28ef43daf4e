//! Closed forms: Schur determinants at `d = 2`, the two-variable
//! hypergeometric Jack formula, the ₃F₂ binomial expression, and the
//! Jacobi–Trudi variant of the Bernoulli polynomials.

use jackbern::bernoulli::mv_bernoulli;
use jackbern::closed_forms::{
    binomial_r2_3f2_check, jack_r2_closed, jacobi_trudi_btilde, jacobi_trudi_btilde_normalized,
    schur_det, FlaggedCheck,
};
use jackbern::jack::jack_p;
use jackbern::partition::enumerate_partitions;
use jackbern::rational::{format_rational, frac, int};
use jackbern::{Partition, Result};

pub fn run_example() -> Result<()> {
    let two = int(2);
    let m = Partition::new(vec![2, 1])?;
    println!("s_{m} by determinant: {}", schur_det(&m, 3)?);
    println!("P_{m} at d = 2:       {}", jack_p(&m, 3, &two)?);

    let d = frac(2, 3);
    let m = Partition::new(vec![3, 1])?;
    println!("r = 2, d = 2/3: 2F1 form of P_{m} = {}", jack_r2_closed(&m, &d)?);

    println!("₃F₂ binomial expression against the interpolation binomial (r = 2, |m| ≤ 5):");
    for d in [frac(1, 2), int(1), int(2), int(3)] {
        let (mut agree, mut disagree, mut singular) = (0, 0, 0);
        let parts = enumerate_partitions(2, 5);
        for m in &parts {
            for k in parts.iter().filter(|k| m.contains(k)) {
                match binomial_r2_3f2_check(m, k, &d)? {
                    FlaggedCheck::Agree => agree += 1,
                    FlaggedCheck::Disagree { .. } => disagree += 1,
                    FlaggedCheck::Singular => singular += 1,
                }
            }
        }
        println!("  d = {}: {agree} agree, {disagree} disagree, {singular} singular", format_rational(&d));
    }

    println!("Jacobi–Trudi B̃ against B at d = 2, r = 2:");
    for m in enumerate_partitions(2, 3) {
        let bare = jacobi_trudi_btilde(&m, 2)?;
        let bt = jacobi_trudi_btilde_normalized(&m, 2)?;
        let b = mv_bernoulli(&m, 2, &two)?;
        println!("  {m}: det = {bare}; normalized = {bt}; B = {b}; equal: {}", bt == b);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("closed_forms example");
}
