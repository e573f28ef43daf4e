//! Verification suites run by `jackbern verify`. Each returns one report
//! per identity and partition, in a fixed order.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bernoulli::{
    bernoulli_poly_classical, multiple_mv_bernoulli, mv_bernoulli, seeded_points,
    verify_theorem1_seeded, verify_theorem2, OmegaTuple,
};
use crate::closed_forms::{
    binomial_d2_det, btilde_via_series, f00_d2_det, f00_r2_closed, jack_r2_closed,
    jacobi_trudi_btilde_normalized, multiple_bernoulli_classical, schur_det, shifted_schur_det,
};
use crate::error::Result;
use crate::jack::{
    jack_eigenvalue, jack_p, jack_phi, jack_psi, jack_special_value_one, normalization_factors,
    pieri_coefficient, psi_normalizer,
};
use crate::partition::{enumerate_partitions, partitions_of, Partition};
use crate::rational::{factorial, format_rational, frac, half, int, pow, Rational};
use crate::report::{Counterexample, Params, VerificationReport};
use crate::series::{exp_series, psi_coefficients, GradedSeries};
use crate::shifted::{binomial, shifted_jack, shifted_point, verify_vanishing};
use crate::sympoly::SymPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Thm1,
    Thm2,
    Pieri,
    SpecialValues,
    ClosedForms,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Pieri => "pieri",
            Suite::SpecialValues => "special-values",
            Suite::ClosedForms => "closed-forms",
            Suite::All => "all",
        }
    }
}

/// Parameters shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub r: usize,
    pub d: Rational,
    pub max_weight: u32,
    /// The multiple-period identities run over every nonempty prefix.
    pub omega: OmegaTuple,
    pub seed: u64,
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    match suite {
        Suite::Thm1 => verify_theorem1_seeded(cfg.r, &cfg.d, cfg.max_weight, cfg.seed),
        Suite::Thm2 => {
            let mut out = Vec::new();
            for w in cfg.omega.prefixes() {
                out.extend(verify_theorem2(cfg.r, &cfg.d, &w, cfg.max_weight)?);
            }
            Ok(out)
        }
        Suite::Pieri => pieri(cfg),
        Suite::SpecialValues => special_values(cfg),
        Suite::ClosedForms => closed_forms(cfg),
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Thm1, Suite::Thm2, Suite::Pieri, Suite::SpecialValues, Suite::ClosedForms] {
                out.extend(run(s, cfg)?);
            }
            Ok(out)
        }
    }
}

fn per_partition<F>(parts: &[Partition], f: F) -> Result<Vec<VerificationReport>>
where
    F: Fn(&Partition) -> Result<Vec<VerificationReport>> + Sync + Send,
{
    let nested: Vec<Vec<VerificationReport>> = parts.par_iter().map(f).collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn first_failure(
    identity: &str,
    params: Params,
    checks: impl IntoIterator<Item = Result<(Partition, String, String, bool)>>,
) -> Result<VerificationReport> {
    for c in checks {
        let (m, lhs, rhs, ok) = c?;
        if !ok {
            return Ok(VerificationReport::fail(
                identity,
                params,
                Counterexample { partition: m, lhs, rhs },
            ));
        }
    }
    Ok(VerificationReport::pass(identity, params))
}

fn psi_sum(r: usize, d: &Rational, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Result<SymPoly> {
    let mut out = SymPoly::zero(r);
    for (n, c) in terms {
        if !c.is_zero() {
            out = &out + &jack_psi(&n, r, d)?.scale(&c);
        }
    }
    Ok(out)
}

/// Pieri-type expansions of `|u| Ψ_m`, `|u|^N/N! Ψ_m`, `e^{|u|} Ψ_m`, and
/// the expansion of `|u|^N` in the `Ψ` basis.
pub fn pieri(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let (r, d) = (cfg.r, &cfg.d);
    let parts = enumerate_partitions(r, cfg.max_weight);
    let mut out = per_partition(&parts, |m| {
        let params = || Params::new(r, d).with_partition(m);
        let psi = jack_psi(m, r, d)?;
        let mut reps = Vec::new();

        let lhs = SymPoly::e1(r).multiply(&psi)?;
        let rhs = psi_sum(
            r,
            d,
            (1..=r).filter_map(|i| {
                let up = m.add_box(i, r)?;
                Some(pieri_coefficient(m, i, r, d).map(|c| (up, c)))
            })
            .collect::<Result<Vec<_>>>()?,
        )?;
        reps.push(VerificationReport::compare("pieri.n1", params(), m, &lhs, &rhs));

        let general = first_failure(
            "pieri.power",
            params(),
            (1..=3u32).map(|n| {
                let lhs = SymPoly::e1(r).pow(n).multiply(&psi)?.scale(&factorial(n).recip());
                let terms = partitions_of(m.weight() + n, r)
                    .into_iter()
                    .map(|k| binomial(&k, m, r, d).map(|c| (k, c)))
                    .collect::<Result<Vec<_>>>()?;
                let rhs = psi_sum(r, d, terms)?;
                Ok((m.clone(), lhs.to_string(), rhs.to_string(), lhs == rhs))
            }),
        )?;
        reps.push(general);

        let top = m.weight() as usize + 3;
        let series = GradedSeries::from_sympoly(&psi, top).multiply_scalar(&exp_series(top))?;
        let coeffs = psi_coefficients(&series, d)?;
        let exp_rep = first_failure(
            "pieri.exp",
            params(),
            enumerate_partitions(r, top as u32).into_iter().map(|n| {
                let got = coeffs.get(&n).cloned().unwrap_or_else(Rational::zero);
                let want = binomial(&n, m, r, d)?;
                Ok((n, format_rational(&got), format_rational(&want), got == want))
            }),
        )?;
        reps.push(exp_rep);
        Ok(reps)
    })?;

    for n in 0..=cfg.max_weight {
        let params = Params::new(r, d).with_max_weight(n);
        let lhs = SymPoly::e1(r).pow(n);
        let rhs = psi_sum(r, d, partitions_of(n, r).into_iter().map(|m| (m, factorial(n))))?;
        let witness = Partition::new(vec![n]).expect("single part");
        out.push(VerificationReport::compare("psi.power_sum", params, &witness, &lhs, &rhs));
    }
    Ok(out)
}

/// Eigen-equation and triangularity of `P_m`, special values at `1` and at
/// `m + (d/2)δ` with their cell-product forms, the normalization
/// dictionary, and the vanishing and top-term properties of `P^ip_m`.
pub fn special_values(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let (r, d) = (cfg.r, &cfg.d);
    let parts = enumerate_partitions(r, cfg.max_weight);
    let h = half(d);
    per_partition(&parts, |m| {
        let params = || Params::new(r, d).with_partition(m);
        let p = jack_p(m, r, d)?;
        let mut reps = Vec::new();

        let lhs = p.apply_d2(d)?;
        let rhs = p.scale(&jack_eigenvalue(m, r, d));
        reps.push(VerificationReport::compare("jack.eigen", params(), m, &lhs, &rhs));

        let triangular = p.coeff(m).is_one()
            && p.terms().all(|(k, _)| k == m || k.dominance_less(m).unwrap_or(false));
        reps.push(VerificationReport::compare("jack.triangular", params(), m, &triangular, &true));

        let ones = vec![Rational::one(); r];
        let direct = p.evaluate(&ones)?;
        let product = jack_special_value_one(m, r, d);
        reps.push(VerificationReport::compare("special.p_at_one", params(), m, &direct, &product));

        let conj = m.conjugate();
        let mut p1_cells = Rational::one();
        let mut pip_cells = Rational::one();
        let mut stanley_one = pow(&(int(2) / d), m.weight() as i64)?;
        for (i, j) in m.cells() {
            let (i, j) = (i as i64, j as i64);
            let mi = int(m.part(i as usize) as i64);
            let cj = int(conj.part(j as usize) as i64);
            let arm_leg = &mi - int(j) + &h * (&cj - int(i) + int(1));
            let upper = int(j - 1) + &h * int(r as i64 - i + 1);
            p1_cells *= &upper / &arm_leg;
            pip_cells *= &mi - int(j) + int(1) + &h * (&cj - int(i));
            stanley_one *= upper;
        }
        reps.push(VerificationReport::compare("special.p_at_one_cells", params(), m, &product, &p1_cells));

        let sj = shifted_jack(m, r, d)?;
        let direct = sj.poly.evaluate(&shifted_point(m, r, d)?)?;
        let product = psi_normalizer(m, r, d);
        reps.push(VerificationReport::compare("special.pip_at_m", params(), m, &direct, &product));
        reps.push(VerificationReport::compare("special.pip_at_m_cells", params(), m, &product, &pip_cells));

        let f = normalization_factors(m, r, d)?;
        if !f.n_over_r_pochhammer.is_zero() {
            let lhs = jack_psi(m, r, d)?;
            let rhs = jack_phi(m, r, d)?.scale(&f.psi_over_phi()?);
            reps.push(VerificationReport::compare("remark1.psi_phi", params(), m, &lhs, &rhs));
        }
        let j_one = &f.stanley_factor * jack_special_value_one(m, r, d);
        reps.push(VerificationReport::compare("remark1.stanley", params(), m, &j_one, &stanley_one));
        let c_one = &f.kaneko_factor * jack_special_value_one(m, r, d);
        let kaneko_one = factorial(m.weight()) * &p1_cells / &pip_cells;
        reps.push(VerificationReport::compare("remark1.kaneko", params(), m, &c_one, &kaneko_one));

        let top = sj.poly.component(m.weight());
        reps.push(VerificationReport::compare("shifted.top", params(), m, &top, &p));
        let mut vanish = verify_vanishing(m, r, d, 2)?;
        vanish.params.max_weight = None;
        reps.push(vanish);
        Ok(reps)
    })
}

/// Agreement with the `d = 2` determinant formulas, the `r = 2`
/// hypergeometric forms, the product-kernel Bernoulli variant, and the
/// classical `r = 1` and multiple Bernoulli polynomials.
pub fn closed_forms(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let (r, d) = (cfg.r, &cfg.d);
    let two = int(2);
    let parts = enumerate_partitions(r, cfg.max_weight);
    let mut out = per_partition(&parts, |m| {
        let params = || Params::new(r, d).with_partition(m);
        let p2 = || Params::new(r, &two).with_partition(m);
        let mut reps = Vec::new();
        reps.push(VerificationReport::compare(
            "closed.schur",
            p2(),
            m,
            &*jack_p(m, r, &two)?,
            &schur_det(m, r)?,
        ));
        reps.push(VerificationReport::compare(
            "closed.shifted_schur",
            p2(),
            m,
            &*shifted_jack(m, r, &two)?.poly,
            &shifted_schur_det(m, r)?,
        ));
        reps.push(first_failure(
            "closed.binomial_det",
            p2(),
            enumerate_partitions(r, cfg.max_weight).into_iter().map(|k| {
                let lhs = binomial(m, &k, r, &two)?;
                let rhs = binomial_d2_det(m, &k, r)?;
                Ok((k, format_rational(&lhs), format_rational(&rhs), lhs == rhs))
            }),
        )?);
        if r == 2 {
            reps.push(VerificationReport::compare(
                "closed.jack_r2",
                params(),
                m,
                &*jack_p(m, 2, d)?,
                &jack_r2_closed(m, d)?,
            ));
        }
        if r >= 2 {
            reps.push(first_failure(
                "closed.btilde",
                p2(),
                seeded_points(cfg.seed, 1000 + m.weight() as u64, r, 3).into_iter().map(|z| {
                    let det = jacobi_trudi_btilde_normalized(m, r)?.evaluate(&z)?;
                    let ext = btilde_via_series(&z, m, r, &two)?;
                    Ok((m.clone(), format_rational(&det), format_rational(&ext), det == ext))
                }),
            )?);
        }
        if r == 1 {
            let classical = bernoulli_poly_classical(m.weight());
            reps.push(VerificationReport::compare(
                "closed.classical_r1",
                params(),
                m,
                &mv_bernoulli(m, 1, d)?,
                &classical,
            ));
            reps.push(first_failure(
                "closed.multiple_r1",
                params().with_omega(cfg.omega.entries()),
                cfg.omega.prefixes().into_iter().map(|w| {
                    let lhs = multiple_mv_bernoulli(m, &w, 1, d)?;
                    let rhs = multiple_bernoulli_classical(m.weight(), &w);
                    Ok((m.clone(), lhs.to_string(), rhs.to_string(), lhs == rhs))
                }),
            )?);
        }
        Ok(reps)
    })?;

    let bound = Params::new(r, &two).with_max_weight(cfg.max_weight);
    let pts: Vec<Vec<Rational>> = seeded_points(cfg.seed, 2000, r, 5);
    out.push(first_failure(
        "closed.f00_d2",
        bound.clone(),
        pts.iter()
            .filter(|z| distinct(z))
            .map(|z| {
                let lhs = crate::series::f00_truncated(z, r, &two, cfg.max_weight as usize)?;
                let rhs = f00_d2_det(z, cfg.max_weight as usize)?;
                Ok((Partition::empty(), lhs.to_sympoly().to_string(), rhs.to_sympoly().to_string(), lhs == rhs))
            }),
    )?);
    if r == 2 {
        let us = seeded_points(cfg.seed, 2001, 2, 5);
        let deg = cfg.max_weight.max(4) as usize;
        out.push(first_failure(
            "closed.f00_r2",
            Params::new(r, d).with_max_weight(deg as u32),
            pts.iter().zip(&us).map(|(z, u)| {
                let lhs = crate::series::f00_truncated(z, 2, d, deg)?.evaluate(u)?;
                let rhs = f00_r2_closed(z, u, d, deg)?;
                Ok((Partition::empty(), format_rational(&lhs), format_rational(&rhs), lhs == rhs))
            }),
        )?);
    }
    if r >= 2 && cfg.max_weight >= 2 {
        // the product kernel differs from |u|/(e^{|u|}-1) from degree 2 on
        let params = Params::new(r, &two).with_max_weight(cfg.max_weight);
        let mut witness = false;
        for m in &parts {
            if jacobi_trudi_btilde_normalized(m, r)? != mv_bernoulli(m, r, &two)? {
                witness = true;
                break;
            }
        }
        out.push(if witness {
            VerificationReport::pass("closed.btilde_differs", params)
        } else {
            VerificationReport::fail(
                "closed.btilde_differs",
                params,
                Counterexample {
                    partition: Partition::empty(),
                    lhs: "B̃ = B on every partition".into(),
                    rhs: "some B̃ ≠ B".into(),
                },
            )
        });
    }
    out.extend(classical_multiple(cfg)?);
    Ok(out)
}

fn distinct(z: &[Rational]) -> bool {
    (0..z.len()).all(|i| (i + 1..z.len()).all(|j| z[i] != z[j]))
}

/// The classical multiple Bernoulli identities, for every prefix of `ω`
/// and `m ≤ max_weight`.
pub fn classical_multiple(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let zero = Rational::zero();
    let one = Rational::one();
    for w in cfg.omega.prefixes() {
        let n = w.n();
        for m in 0..=cfg.max_weight {
            let params = || Params::new(1, &cfg.d).with_omega(w.entries());
            let mp = Partition::new(vec![m]).expect("single part");
            let b = multiple_bernoulli_classical(m, &w);
            let sign = if m % 2 == 0 { one.clone() } else { -one.clone() };
            let lower = |ww: &OmegaTuple| {
                if m == 0 {
                    SymPoly::zero(1)
                } else {
                    multiple_bernoulli_classical(m - 1, ww).scale(&int(m as i64))
                }
            };

            out.push(first_failure(
                "classical.scaling",
                params(),
                [frac(2, 1), frac(-3, 1), frac(1, 2)].into_iter().map(|c| {
                    let lhs = multiple_bernoulli_classical(m, &w.scale(&c)?).affine_substitute(&c, &zero);
                    let rhs = b.scale(&pow(&c, m as i64 - n as i64)?);
                    Ok((mp.clone(), lhs.to_string(), rhs.to_string(), lhs == rhs))
                }),
            )?);
            let lhs = b.affine_substitute(&-one.clone(), &w.sum());
            out.push(VerificationReport::compare("classical.symmetry", params(), &mp, &lhs, &b.scale(&sign)));
            for j in 1..=n {
                let pj = || params().with_j(j);
                let moved = b.affine_substitute(&one, &w.entries()[j - 1]);
                let low = lower(&w.hat(j));
                out.push(VerificationReport::compare("classical.difference", pj(), &mp, &(&moved - &b), &low));
                let neg = multiple_bernoulli_classical(m, &w.neg(j));
                out.push(VerificationReport::compare("classical.negation", pj(), &mp, &neg, &-&moved));
                out.push(VerificationReport::compare("classical.sum", pj(), &mp, &(&b + &neg), &-&low));
            }
            out.push(VerificationReport::compare("classical.derivative", params(), &mp, &b.apply_e0(), &lower(&w)));
        }
    }
    Ok(out)
}
