//! Partitions: enumeration order, dominance, conjugates and generalized
//! Pochhammer symbols.

use jackbern::partition::{enumerate_partitions, gen_pochhammer, partitions_of};
use jackbern::rational::{format_rational, frac, int};
use jackbern::{Partition, Result};

pub fn run_example() -> Result<()> {
    let all = enumerate_partitions(3, 4);
    println!("partitions with at most 3 parts and weight ≤ 4 ({}):", all.len());
    for m in &all {
        println!("  {m}  conjugate {}", m.conjugate());
    }

    let weight5 = partitions_of(5, 3);
    println!("dominance among weight-5 partitions (r = 3):");
    for a in &weight5 {
        let below: Vec<String> = weight5
            .iter()
            .filter(|b| b != &a && b.dominance_less(a).unwrap_or(false))
            .map(|b| b.to_string())
            .collect();
        println!("  {a} dominates {}", below.join(" "));
    }

    let m = Partition::new(vec![3, 1])?;
    println!("subpartitions of {m}: {:?}", m.subpartitions().iter().map(|k| k.to_string()).collect::<Vec<_>>());
    for d in [frac(1, 2), int(1), int(2)] {
        let p = gen_pochhammer(&int(2), &m, &d);
        println!("(2)_{m} at d = {}: {}", format_rational(&d), format_rational(&p));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("partitions example");
}
