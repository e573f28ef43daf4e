//! Multiple multivariate Bernoulli polynomials with periods `ω`, and the
//! one-variable reduction to classical multiple Bernoulli polynomials.

use jackbern::bernoulli::{multiple_mv_bernoulli, verify_theorem2, OmegaTuple};
use jackbern::closed_forms::multiple_bernoulli_classical;
use jackbern::partition::enumerate_partitions;
use jackbern::rational::int;
use jackbern::{Partition, Result};

pub fn run_example() -> Result<()> {
    let omega = OmegaTuple::new(vec![int(1), int(2)])?;
    let (r, d) = (2, int(2));
    for m in enumerate_partitions(r, 2) {
        println!("B_{{2,{m}}}(z | 1, 2) = {}", multiple_mv_bernoulli(&m, &omega, r, &d)?);
    }

    for m in 0..=3 {
        let classical = multiple_bernoulli_classical(m, &omega);
        let reduced = multiple_mv_bernoulli(&Partition::new(vec![m])?, &omega, 1, &d)?;
        println!("r = 1, m = {m}: {classical}   (agrees: {})", classical == reduced);
    }

    let reports = verify_theorem2(r, &d, &omega, 2)?;
    let passed = reports.iter().filter(|x| x.passed()).count();
    println!("difference/reflection identities at ω = (1, 2): {passed}/{} pass", reports.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("multiple_bernoulli example");
}
