//! Multivariate Bernoulli polynomials from the explicit formula, checked
//! against the generating function at a rational point, and as JSON.

use jackbern::bernoulli::{bernoulli_number, mv_bernoulli, mv_bernoulli_eval_via_series};
use jackbern::json::sympoly_to_json;
use jackbern::partition::enumerate_partitions;
use jackbern::rational::{format_rational, frac, int};
use jackbern::{Partition, Result};

pub fn run_example() -> Result<()> {
    let numbers: Vec<String> = (0..=10).map(|n| format_rational(&bernoulli_number(n))).collect();
    println!("B_0..B_10 = {}", numbers.join(", "));

    let (r, d) = (2, int(1));
    let z = vec![frac(3, 2), frac(-2, 5)];
    for m in enumerate_partitions(r, 3) {
        let b = mv_bernoulli(&m, r, &d)?;
        let direct = b.evaluate(&z)?;
        let series = mv_bernoulli_eval_via_series(&z, &m, r, &d)?;
        println!("B_{m}(z) = {b}");
        println!("    at z = (3/2, -2/5): {} (series route: {})", format_rational(&direct), format_rational(&series));
    }

    let m = Partition::new(vec![2, 1])?;
    println!("{}", sympoly_to_json(&mv_bernoulli(&m, 3, &int(2))?, None));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bernoulli example");
}
