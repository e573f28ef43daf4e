//! Shifted (interpolation) Jack polynomials and generalized binomial
//! coefficients.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jack::{jack_p, psi_normalizer};
use crate::linalg;
use crate::memo::{self, Family, Key};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{ensure_positive_d, format_rational, half, int, Rational};
use crate::report::{Counterexample, Params, VerificationReport};
use crate::sympoly::SymPoly;

/// `P^ip_k(z; d/2)`: degree `|k|`, top component `P_k`, vanishing at
/// `m + (d/2)δ` for every `m ≠ k` with `|m| ≤ |k|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedJack {
    pub k: Partition,
    pub r: usize,
    pub d: Rational,
    pub poly: Arc<SymPoly>,
}

impl ShiftedJack {
    pub fn eval_at_partition(&self, m: &Partition) -> Result<Rational> {
        self.poly.evaluate(&shifted_point(m, self.r, &self.d)?)
    }
}

/// `m + (d/2)δ` with `δ = (r-1, r-2, …, 0)`.
pub fn shifted_point(m: &Partition, r: usize, d: &Rational) -> Result<Vec<Rational>> {
    m.check_fits(r)?;
    let h = half(d);
    Ok(m.padded(r)
        .iter()
        .enumerate()
        .map(|(i, &mi)| int(mi as i64) + &h * int((r - 1 - i) as i64))
        .collect())
}

pub fn shifted_jack(k: &Partition, r: usize, d: &Rational) -> Result<ShiftedJack> {
    ensure_positive_d(d)?;
    k.check_fits(r)?;
    let key = Key {
        family: Family::Pip,
        r,
        d: d.clone(),
        partition: k.clone(),
    };
    let poly = memo::get_or_try_insert(key, || solve_interpolation(k, r, d))?;
    Ok(ShiftedJack {
        k: k.clone(),
        r,
        d: d.clone(),
        poly,
    })
}

fn solve_interpolation(k: &Partition, r: usize, d: &Rational) -> Result<SymPoly> {
    let basis = enumerate_partitions(r, k.weight());
    let polys: Vec<Arc<SymPoly>> = basis
        .iter()
        .map(|mu| jack_p(mu, r, d))
        .collect::<Result<_>>()?;
    let raws: Vec<_> = polys.iter().map(|p| p.to_raw()).collect();
    let kidx = basis.iter().position(|mu| mu == k).expect("k enumerated");

    let mut rows = Vec::with_capacity(basis.len() - 1);
    let mut rhs = Vec::with_capacity(basis.len() - 1);
    for n in basis.iter().filter(|n| *n != k) {
        let pt = shifted_point(n, r, d)?;
        let vals: Vec<Rational> = raws.iter().map(|p| p.evaluate(&pt)).collect::<Result<_>>()?;
        rhs.push(-vals[kidx].clone());
        rows.push(
            vals.into_iter()
                .enumerate()
                .filter(|(i, _)| *i != kidx)
                .map(|(_, v)| v)
                .collect::<Vec<_>>(),
        );
    }
    let x = linalg::solve(&rows, &rhs).ok_or_else(|| Error::SingularSystem(k.to_string()))?;

    let mut out = (*polys[kidx]).clone();
    let others = (0..basis.len()).filter(|&i| i != kidx);
    for (i, c) in others.zip(x) {
        if !c.is_zero() {
            out = &out + &polys[i].scale(&c);
        }
    }
    Ok(out)
}

/// `binom(m, k) = P^ip_k(m + (d/2)δ) / P^ip_k(k + (d/2)δ)`, evaluated for
/// every pair; it vanishes exactly when `k ⊄ m`.
pub fn binomial(m: &Partition, k: &Partition, r: usize, d: &Rational) -> Result<Rational> {
    let sj = shifted_jack(k, r, d)?;
    Ok(sj.eval_at_partition(m)? / psi_normalizer(k, r, d))
}

/// Checks `P^ip_k(m + (d/2)δ) = 0` for every `m ⊉ k` with
/// `|m| ≤ |k| + extra_weight`, including weights beyond the defining system.
pub fn verify_vanishing(
    k: &Partition,
    r: usize,
    d: &Rational,
    extra_weight: u32,
) -> Result<VerificationReport> {
    let sj = shifted_jack(k, r, d)?;
    let bound = k.weight() + extra_weight;
    let params = Params::new(r, d).with_partition(k).with_max_weight(bound);
    for m in enumerate_partitions(r, bound) {
        if m.contains(k) {
            continue;
        }
        let v = sj.eval_at_partition(&m)?;
        if !v.is_zero() {
            return Ok(VerificationReport::fail(
                "shifted.vanishing",
                params,
                Counterexample {
                    partition: m,
                    lhs: format_rational(&v),
                    rhs: "0".into(),
                },
            ));
        }
    }
    Ok(VerificationReport::pass("shifted.vanishing", params))
}

/// Value `P^ip_k(k + (d/2)δ)` by direct evaluation of the solved polynomial.
pub fn self_value(k: &Partition, r: usize, d: &Rational) -> Result<Rational> {
    shifted_jack(k, r, d)?.eval_at_partition(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::pieri_coefficient;
    use crate::rational::frac;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shifted_examples() {
        let z = SymPoly::monomial(&p(&[1]), 1);
        let expect = &z.pow(2) - &z;
        assert_eq!(*shifted_jack(&p(&[2]), 1, &int(2)).unwrap().poly, expect);
        for r in 1..=3 {
            assert_eq!(*shifted_jack(&Partition::empty(), r, &frac(1, 2)).unwrap().poly, SymPoly::one(r));
        }
        let expect = &SymPoly::monomial(&p(&[1]), 2) - &SymPoly::one(2);
        assert_eq!(*shifted_jack(&p(&[1]), 2, &int(2)).unwrap().poly, expect);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&p(&[3]), &p(&[2]), 1, &int(2)).unwrap(), int(3));
        assert_eq!(binomial(&p(&[2, 1]), &p(&[2, 1]), 2, &int(1)).unwrap(), int(1));
        for d in [int(1), int(2), int(3)] {
            let b = binomial(&p(&[2]), &p(&[1]), 2, &d).unwrap();
            assert_eq!(b, int(2));
            assert_eq!(b, pieri_coefficient(&p(&[1]), 1, 2, &d).unwrap());
        }
        assert_eq!(binomial(&p(&[1]), &p(&[1, 1]), 2, &int(1)).unwrap(), int(0));
        assert_eq!(binomial(&p(&[3, 1]), &Partition::empty(), 2, &frac(1, 2)).unwrap(), int(1));
    }

    #[test]
    fn vanishing_examples() {
        assert!(verify_vanishing(&p(&[1]), 2, &int(2), 2).unwrap().passed());
        assert!(verify_vanishing(&Partition::empty(), 3, &int(1), 3).unwrap().passed());
        let rep = verify_vanishing(&p(&[2]), 1, &int(2), 3).unwrap();
        assert!(rep.passed());
        let sj = shifted_jack(&p(&[2]), 1, &int(2)).unwrap();
        let zeros: Vec<u32> = (0..=5)
            .filter(|&z| {
                let m = Partition::new(vec![z]).unwrap();
                sj.eval_at_partition(&m).unwrap().is_zero()
            })
            .collect();
        assert_eq!(zeros, vec![0, 1]);
    }

    #[test]
    fn self_value_is_normalizer() {
        for d in [frac(1, 2), int(1), int(3)] {
            for k in enumerate_partitions(2, 3) {
                assert_eq!(self_value(&k, 2, &d).unwrap(), psi_normalizer(&k, 2, &d));
            }
        }
    }
}
