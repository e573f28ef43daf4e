//! Shifted (interpolation) Jack polynomials and the generalized binomial
//! coefficients they define.

use jackbern::partition::enumerate_partitions;
use jackbern::rational::{format_rational, int};
use jackbern::shifted::{binomial, shifted_jack, verify_vanishing};
use jackbern::{Partition, Result};

pub fn run_example() -> Result<()> {
    let (r, d) = (2, int(2));
    let k = Partition::new(vec![2, 1])?;
    let sj = shifted_jack(&k, r, &d)?;
    println!("P^ip_{k}(z; 1) = {}", sj.poly);

    println!("values at n + δ for |n| ≤ 4:");
    for n in enumerate_partitions(r, 4) {
        println!("  n = {n}: {}", format_rational(&sj.eval_at_partition(&n)?));
    }
    println!("{}", verify_vanishing(&k, r, &d, 2)?.to_json_line());

    let r = 3;
    let d = int(1);
    let parts = enumerate_partitions(r, 3);
    println!("binom(m, k) at r = 3, d = 1 (rows m, columns k):");
    print!("{:>10}", "");
    for k in &parts {
        print!("{:>10}", k.to_string());
    }
    println!();
    for m in &parts {
        print!("{:>10}", m.to_string());
        for k in &parts {
            print!("{:>10}", format_rational(&binomial(m, k, r, &d)?));
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("shifted_jack example");
}
