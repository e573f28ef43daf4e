//! Running the verification suites, with polynomials persisted to a disk
//! cache between runs.

use std::collections::BTreeMap;

use jackbern::bernoulli::{OmegaTuple, DEFAULT_SEED};
use jackbern::cache::DiskCache;
use jackbern::rational::int;
use jackbern::suites::{run, Suite, SuiteConfig};
use jackbern::Result;

pub fn run_example() -> Result<()> {
    let cfg = SuiteConfig {
        r: 2,
        d: int(1),
        max_weight: 3,
        omega: OmegaTuple::new(vec![int(1), int(2)])?,
        seed: DEFAULT_SEED,
    };
    let dir = std::env::temp_dir().join(format!("jackbern-example-{}", std::process::id()));
    let cache = DiskCache::open(&dir)?;
    cache.load_into_memo()?;

    let reports = run(Suite::All, &cfg)?;
    let mut by_identity: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for rep in &reports {
        let e = by_identity.entry(rep.identity.as_str()).or_default();
        e.1 += 1;
        if rep.passed() {
            e.0 += 1;
        }
    }
    for (name, (pass, total)) in &by_identity {
        println!("{name:<24} {pass}/{total}");
    }
    println!("first report: {}", reports[0].to_json_line());

    let summary = cache.persist_memo()?;
    println!("cache: {} written, {} unchanged", summary.written, summary.unchanged);
    cache.clear()?;
    let _ = std::fs::remove_dir(&dir);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify_theorems example");
}
