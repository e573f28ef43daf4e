//! Truncated power series: the Bernoulli kernel in one variable, and the
//! hypergeometric kernel ₀F₀(z, u) read back in the `Ψ` basis.

use jackbern::rational::{format_rational, frac, int};
use jackbern::series::{bernoulli_scalar_series, e1_power, f00_truncated, psi_coefficients};
use jackbern::Result;

pub fn run_example() -> Result<()> {
    let s = bernoulli_scalar_series(&int(1), 8)?;
    let coeffs: Vec<String> = s.coeffs().iter().map(format_rational).collect();
    println!("t/(e^t - 1) = {} + O(t^9)", coeffs.join(", "));

    let z = vec![frac(1, 2), frac(-1, 3)];
    let d = int(1);
    let f = f00_truncated(&z, 2, &d, 3)?;
    println!("₀F₀(z, u) at z = (1/2, -1/3), d = 1, up to degree 3:");
    for (k, c) in psi_coefficients(&f, &d)? {
        println!("  {} · Ψ_{k}(u)", format_rational(&c));
    }

    let cube = e1_power(2, 3, 3);
    println!("|u|^3 read back in the Ψ basis: {:?}", psi_coefficients(&cube, &int(2))?
        .iter()
        .map(|(k, c)| format!("{k}: {}", format_rational(c)))
        .collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("generating_series example");
}
