//! Jack polynomials in their three normalizations, the special value at
//! `1`, and expansion of a symmetric polynomial in the `Ψ` basis.

use jackbern::jack::{
    jack_eigenvalue, jack_p, jack_phi, jack_psi, jack_special_value_one, monomial_to_psi,
    normalization_factors,
};
use jackbern::partition::enumerate_partitions;
use jackbern::rational::{format_rational, int};
use jackbern::{Partition, Result, SymPoly};

pub fn run_example() -> Result<()> {
    let (r, d) = (2, int(1));
    for m in enumerate_partitions(r, 3) {
        println!("P_{m}(z; 1/2) = {}", jack_p(&m, r, &d)?);
    }

    let m = Partition::new(vec![2, 1])?;
    let r = 3;
    for d in [int(1), int(2)] {
        let ds = format_rational(&d);
        println!("d = {ds}, m = {m}, r = {r}");
        println!("  P   = {}", jack_p(&m, r, &d)?);
        println!("  Φ   = {}", jack_phi(&m, r, &d)?);
        println!("  Ψ   = {}", jack_psi(&m, r, &d)?);
        println!("  eigenvalue of D2: {}", format_rational(&jack_eigenvalue(&m, r, &d)));
        println!("  P(1, 1, 1) = {}", format_rational(&jack_special_value_one(&m, r, &d)));
        let f = normalization_factors(&m, r, &d)?;
        println!(
            "  d_m = {}, (n/r)_m = {}, J = {}·P, C = {}·P",
            format_rational(&f.d_m),
            format_rational(&f.n_over_r_pochhammer),
            format_rational(&f.stanley_factor),
            format_rational(&f.kaneko_factor)
        );
    }

    let d = int(2);
    let cube = SymPoly::e1(2).pow(3);
    let expansion = monomial_to_psi(&cube, &d)?;
    println!("(u1 + u2)^3 in the Ψ basis at d = 2:");
    for (k, c) in &expansion.coeffs {
        println!("  {} · Ψ_{k}", format_rational(c));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("jack_polynomials example");
}
