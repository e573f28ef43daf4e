//! Bernoulli numbers and polynomials: classical, multivariate
//! `B_m^{(d)}(z)`, and multiple multivariate `B_{n,m}^{(d)}(z | ω)`, plus the
//! verification suites for their identities.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jack::{jack_phi, lowering_coefficient, monomial_to_psi};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{binomial_int, ensure_positive_d, factorial, format_rational, frac, int, pow, Rational};
use crate::report::{Counterexample, Params, VerificationReport};
use crate::series::{bernoulli_scalar_series, f00_truncated, ScalarSeries};
use crate::shifted::binomial;
use crate::sympoly::SymPoly;

pub const DEFAULT_SEED: u64 = 20_240_917;

/// `B_N`, with `B_1 = -1/2`.
pub fn bernoulli_number(n: u32) -> Rational {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(Vec::new()));
    let mut t = table.lock().expect("bernoulli table");
    if t.len() <= n as usize {
        let want = (n as usize + 1).max(2 * t.len()).max(16);
        let s = bernoulli_scalar_series(&Rational::one(), want - 1).expect("omega = 1");
        *t = s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * factorial(k as u32))
            .collect();
    }
    t[n as usize].clone()
}

/// `B_m(z) = Σ_n C(m, n) B_n z^{m-n}` as a one-variable polynomial.
pub fn bernoulli_poly_classical(m: u32) -> SymPoly {
    SymPoly::from_terms(
        1,
        (0..=m).map(|n| {
            let part = Partition::new(vec![m - n]).expect("single part");
            (part, binomial_int(m as i64, n) * bernoulli_number(n))
        }),
    )
}

/// `B_m^{(d)}(z) = Σ_{n ⊂ m} B_{|m|-|n|} binom(m, n) Φ_n(z)`.
pub fn mv_bernoulli(m: &Partition, r: usize, d: &Rational) -> Result<SymPoly> {
    ensure_positive_d(d)?;
    m.check_fits(r)?;
    let mut out = SymPoly::zero(r);
    for n in m.subpartitions() {
        let c = bernoulli_number(m.weight() - n.weight()) * binomial(m, &n, r, d)?;
        if !c.is_zero() {
            out = &out + &jack_phi(&n, r, d)?.scale(&c);
        }
    }
    Ok(out)
}

/// `B_m^{(d)}(z)` at a point, read off as the `Ψ_m(u)` coefficient of
/// `|u|/(e^{|u|}-1) · ₀F₀(z, u)`.
pub fn mv_bernoulli_eval_via_series(
    zpoint: &[Rational],
    m: &Partition,
    r: usize,
    d: &Rational,
) -> Result<Rational> {
    m.check_fits(r)?;
    let table = series_table(zpoint, r, d, &OmegaTuple::new(vec![Rational::one()])?, m.weight())?;
    Ok(table.get(m).cloned().unwrap_or_else(Rational::zero))
}

/// Every `B_{n,m}(z | ω)` with `|m| ≤ max_weight` at one point, from the
/// series `Π_j |u|/(e^{ω_j |u|}-1) · ₀F₀(z, u)`.
pub fn series_table(
    zpoint: &[Rational],
    r: usize,
    d: &Rational,
    omega: &OmegaTuple,
    max_weight: u32,
) -> Result<BTreeMap<Partition, Rational>> {
    let top = max_weight as usize;
    let g = f00_truncated(zpoint, r, d, top)?.multiply_scalar(&scalar_product_series(omega, top)?)?;
    let mut out = BTreeMap::new();
    for c in g.components() {
        out.extend(monomial_to_psi(c, d)?.coeffs);
    }
    Ok(out)
}

/// Periods `ω = (ω_1, …, ω_n)`, all nonzero. `n = 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaTuple {
    entries: Vec<Rational>,
}

impl OmegaTuple {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::ZeroOmega);
        }
        Ok(OmegaTuple { entries })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `|ω| = ω_1 + ⋯ + ω_n`.
    pub fn sum(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |a, b| a + b)
    }

    /// `ω̂(j)`: drop the `j`-th entry (1-based).
    pub fn hat(&self, j: usize) -> OmegaTuple {
        let mut e = self.entries.clone();
        e.remove(j - 1);
        OmegaTuple { entries: e }
    }

    /// `ω⁻[j]`: negate the `j`-th entry (1-based).
    pub fn neg(&self, j: usize) -> OmegaTuple {
        let mut e = self.entries.clone();
        e[j - 1] = -e[j - 1].clone();
        OmegaTuple { entries: e }
    }

    /// `cω`; `c` must be nonzero.
    pub fn scale(&self, c: &Rational) -> Result<OmegaTuple> {
        OmegaTuple::new(self.entries.iter().map(|w| w * c).collect())
    }

    /// Nonempty prefixes `(ω_1), (ω_1, ω_2), …`.
    pub fn prefixes(&self) -> Vec<OmegaTuple> {
        (1..=self.n())
            .map(|k| OmegaTuple {
                entries: self.entries[..k].to_vec(),
            })
            .collect()
    }
}

/// `Π_j t/(e^{ω_j t}-1)`; the empty product is `1`.
pub fn scalar_product_series(omega: &OmegaTuple, max_degree: usize) -> Result<ScalarSeries> {
    let mut acc = ScalarSeries::one(max_degree);
    for w in omega.entries() {
        acc = acc.mul(&bernoulli_scalar_series(w, max_degree)?)?;
    }
    Ok(acc)
}

/// `B_{n,m}(z | ω) = Σ_{k ⊂ m} N! s_N binom(m, k) Φ_k(z)`, `N = |m| - |k|`,
/// where `s = Π_j t/(e^{ω_j t}-1)`.
pub fn multiple_mv_bernoulli(
    m: &Partition,
    omega: &OmegaTuple,
    r: usize,
    d: &Rational,
) -> Result<SymPoly> {
    ensure_positive_d(d)?;
    m.check_fits(r)?;
    let s = scalar_product_series(omega, m.weight() as usize)?;
    let mut out = SymPoly::zero(r);
    for k in m.subpartitions() {
        let n = m.weight() - k.weight();
        let c = factorial(n) * s.coeff(n as usize) * binomial(m, &k, r, d)?;
        if !c.is_zero() {
            out = &out + &jack_phi(&k, r, d)?.scale(&c);
        }
    }
    Ok(out)
}

/// `count` points in `Q^r` with numerators in `[-9, 9]` and denominators in
/// `[1, 5]`, reproducible from `(seed, stream)`.
pub fn seeded_points(seed: u64, stream: u64, r: usize, count: usize) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..count)
        .map(|_| {
            (0..r)
                .map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                .collect()
        })
        .collect()
}

/// `Σ_i c_i(m) F(m - ε_i)` with `c_i(m) = (m_i + (d/2)(r-i)) h_{-,i}(m)`,
/// skipping `i` where `m - ε_i` is not a partition.
fn lowering_sum(
    m: &Partition,
    r: usize,
    d: &Rational,
    mut f: impl FnMut(&Partition) -> Result<SymPoly>,
) -> Result<SymPoly> {
    let mut out = SymPoly::zero(r);
    for i in 1..=r {
        if let Some(lower) = m.remove_box(i, r) {
            let c = lowering_coefficient(m, i, r, d)?;
            out = &out + &f(&lower)?.scale(&c);
        }
    }
    Ok(out)
}

fn sign(m: &Partition) -> Rational {
    if m.weight().is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn table<F>(parts: &[Partition], f: F) -> Result<BTreeMap<Partition, SymPoly>>
where
    F: Fn(&Partition) -> Result<SymPoly> + Sync,
{
    parts
        .par_iter()
        .map(|m| Ok((m.clone(), f(m)?)))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

/// Runs the eight identities for `B_m^{(d)}` on every `|m| ≤ max_weight`.
pub fn verify_theorem1(r: usize, d: &Rational, max_weight: u32) -> Result<Vec<VerificationReport>> {
    verify_theorem1_seeded(r, d, max_weight, DEFAULT_SEED)
}

pub fn verify_theorem1_seeded(
    r: usize,
    d: &Rational,
    max_weight: u32,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    ensure_positive_d(d)?;
    let parts = enumerate_partitions(r, max_weight);
    let b = table(&parts, |m| mv_bernoulli(m, r, d))?;
    let per_m: Vec<Vec<VerificationReport>> = parts
        .par_iter()
        .enumerate()
        .map(|(idx, m)| theorem1_for(m, idx as u64, r, d, &b, seed))
        .collect::<Result<_>>()?;
    Ok(per_m.into_iter().flatten().collect())
}

fn theorem1_for(
    m: &Partition,
    stream: u64,
    r: usize,
    d: &Rational,
    b: &BTreeMap<Partition, SymPoly>,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let params = || Params::new(r, d).with_partition(m);
    let one = Rational::one();
    let zero = Rational::zero();
    let bm = &b[m];
    let mut out = Vec::with_capacity(8);

    out.push(VerificationReport::compare(
        "thm1.1",
        params(),
        m,
        &bm.constant_term(),
        &bernoulli_number(m.weight()),
    ));

    let shifted = bm.affine_substitute(&one, &one);
    let diff = lowering_sum(m, r, d, |n| jack_phi(n, r, d))?;
    out.push(VerificationReport::compare("thm1.2", params(), m, &(&shifted - bm), &diff));

    let rhs = lowering_sum(m, r, d, |n| Ok(b[n].clone()))?;
    out.push(VerificationReport::compare("thm1.3", params(), m, &bm.apply_e0(), &rhs));

    out.push(VerificationReport::compare(
        "thm1.4",
        params(),
        m,
        &bm.affine_substitute(&-one.clone(), &one),
        &bm.scale(&sign(m)),
    ));

    let mut rep = VerificationReport::pass("thm1.5", params());
    for z in seeded_points(seed, stream, r, 3) {
        let lhs = bm.evaluate(&z)?;
        let rhs = mv_bernoulli_eval_via_series(&z, m, r, d)?;
        if lhs != rhs {
            rep = VerificationReport::fail(
                "thm1.5",
                params(),
                Counterexample {
                    partition: m.clone(),
                    lhs: format_rational(&lhs),
                    rhs: format_rational(&rhs),
                },
            );
            break;
        }
    }
    out.push(rep);

    let mut inv = SymPoly::zero(r);
    for n in m.subpartitions() {
        let c = binomial(m, &n, r, d)? / int((m.weight() - n.weight()) as i64 + 1);
        inv = &inv + &b[&n].scale(&c);
    }
    out.push(VerificationReport::compare("thm1.6", params(), m, &jack_phi(m, r, d)?, &inv));

    let mut rep = VerificationReport::pass("thm1.7", params());
    for big_n in [2i64, 3] {
        let mut lhs = SymPoly::zero(r);
        for i in 0..big_n {
            lhs = &lhs + &bm.affine_substitute(&one, &frac(i, big_n));
        }
        let rhs = bm
            .affine_substitute(&int(big_n), &zero)
            .scale(&pow(&int(big_n), 1 - m.weight() as i64)?);
        if lhs != rhs {
            rep = VerificationReport::compare("thm1.7", params(), m, &lhs, &rhs);
            break;
        }
    }
    out.push(rep);

    let mut rhs = SymPoly::zero(r);
    for n in m.subpartitions() {
        rhs = &rhs + &b[&n].scale(&binomial(m, &n, r, d)?);
    }
    out.push(VerificationReport::compare("thm1.8", params(), m, &shifted, &rhs));
    Ok(out)
}

/// Runs the six identities for `B_{n,m}^{(d)}(z | ω)` on every
/// `|m| ≤ max_weight`, with the `j`-indexed items reported per `j`.
pub fn verify_theorem2(
    r: usize,
    d: &Rational,
    omega: &OmegaTuple,
    max_weight: u32,
) -> Result<Vec<VerificationReport>> {
    ensure_positive_d(d)?;
    let parts = enumerate_partitions(r, max_weight);
    let n = omega.n();
    let mm = |w: &OmegaTuple| table(&parts, |m| multiple_mv_bernoulli(m, w, r, d));
    let b = mm(omega)?;
    let scaled: Vec<(Rational, BTreeMap<Partition, SymPoly>)> = [int(2), int(-3)]
        .into_iter()
        .map(|c| Ok((c.clone(), mm(&omega.scale(&c)?)?)))
        .collect::<Result<_>>()?;
    let hats: Vec<_> = (1..=n).map(|j| mm(&omega.hat(j))).collect::<Result<_>>()?;
    let negs: Vec<_> = (1..=n).map(|j| mm(&omega.neg(j))).collect::<Result<_>>()?;
    let one = Rational::one();
    let zero = Rational::zero();
    let wsum = omega.sum();

    let per_m: Vec<Vec<VerificationReport>> = parts
        .par_iter()
        .map(|m| -> Result<Vec<VerificationReport>> {
            let params = || Params::new(r, d).with_omega(omega.entries()).with_partition(m);
            let bm = &b[m];
            let mut out = Vec::new();

            let mut rep = VerificationReport::pass("thm2.1", params());
            for (c, tab) in &scaled {
                let lhs = tab[m].affine_substitute(c, &zero);
                let rhs = bm.scale(&pow(c, m.weight() as i64 - n as i64)?);
                if lhs != rhs {
                    rep = VerificationReport::compare("thm2.1", params(), m, &lhs, &rhs);
                    break;
                }
            }
            out.push(rep);

            out.push(VerificationReport::compare(
                "thm2.2",
                params(),
                m,
                &bm.affine_substitute(&-one.clone(), &wsum),
                &bm.scale(&sign(m)),
            ));

            let mut item3 = Vec::new();
            let mut item4 = Vec::new();
            let mut item5 = Vec::new();
            for j in 1..=n {
                let pj = || params().with_j(j);
                let wj = &omega.entries()[j - 1];
                let moved = bm.affine_substitute(&one, wj);
                let lowered = lowering_sum(m, r, d, |k| Ok(hats[j - 1][k].clone()))?;
                item3.push(VerificationReport::compare("thm2.3", pj(), m, &(&moved - bm), &lowered));
                let bneg = &negs[j - 1][m];
                item4.push(VerificationReport::compare("thm2.4", pj(), m, bneg, &-&moved));
                item5.push(VerificationReport::compare("thm2.5", pj(), m, &(bm + bneg), &-&lowered));
            }
            out.extend(item3);
            out.extend(item4);
            out.extend(item5);

            let rhs = lowering_sum(m, r, d, |k| Ok(b[k].clone()))?;
            out.push(VerificationReport::compare("thm2.6", params(), m, &bm.apply_e0(), &rhs));
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_m.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Akiyama–Tanigawa, which yields `B_1 = +1/2`.
    fn akiyama_tanigawa(n: usize) -> Rational {
        let mut a = vec![Rational::zero(); n + 1];
        for m in 0..=n {
            a[m] = frac(1, m as i64 + 1);
            for j in (1..=m).rev() {
                a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
            }
        }
        a[0].clone()
    }

    #[test]
    fn numbers() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), frac(-1, 2));
        assert_eq!(bernoulli_number(4), frac(-1, 30));
        assert_eq!(bernoulli_number(12), frac(-691, 2730));
        for n in 2..=20 {
            assert_eq!(bernoulli_number(n as u32), akiyama_tanigawa(n), "B_{n}");
        }
    }

    #[test]
    fn classical_polys() {
        let z = SymPoly::monomial(&p(&[1]), 1);
        assert_eq!(bernoulli_poly_classical(0), SymPoly::one(1));
        assert_eq!(bernoulli_poly_classical(1), &z - &SymPoly::constant(1, frac(1, 2)));
        let b2 = &(&z.pow(2) - &z) + &SymPoly::constant(1, frac(1, 6));
        assert_eq!(bernoulli_poly_classical(2), b2);
        for m in 0..=8 {
            assert_eq!(bernoulli_poly_classical(m).constant_term(), bernoulli_number(m));
        }
    }

    #[test]
    fn mv_examples() {
        for r in 1..=3 {
            assert_eq!(mv_bernoulli(&Partition::empty(), r, &int(1)).unwrap(), SymPoly::one(r));
        }
        for d in [frac(1, 2), int(1), int(2)] {
            let b = mv_bernoulli(&p(&[1]), 2, &d).unwrap();
            let expect = &SymPoly::monomial(&p(&[1]), 2).scale(&frac(1, 2)) - &SymPoly::constant(2, frac(1, 2));
            assert_eq!(b, expect);
        }
        for m in 0..=8 {
            let b = mv_bernoulli(&Partition::new(vec![m]).unwrap(), 1, &frac(3, 2)).unwrap();
            assert_eq!(b, bernoulli_poly_classical(m));
        }
    }

    #[test]
    fn series_route_examples() {
        let z0 = vec![int(0), int(0)];
        assert_eq!(mv_bernoulli_eval_via_series(&z0, &p(&[1, 1]), 2, &int(1)).unwrap(), frac(1, 6));
        let z = vec![int(1), int(0)];
        assert_eq!(mv_bernoulli_eval_via_series(&z, &Partition::empty(), 2, &int(1)).unwrap(), int(1));
        let z = vec![frac(-2, 3), frac(7, 5)];
        for m in enumerate_partitions(2, 3) {
            let direct = mv_bernoulli(&m, 2, &int(3)).unwrap().evaluate(&z).unwrap();
            assert_eq!(mv_bernoulli_eval_via_series(&z, &m, 2, &int(3)).unwrap(), direct);
        }
    }

    #[test]
    fn omega_helpers() {
        let w = OmegaTuple::new(vec![int(1), int(2), int(3)]).unwrap();
        assert_eq!(w.hat(2).entries(), &[int(1), int(3)]);
        assert_eq!(w.neg(3).entries(), &[int(1), int(2), int(-3)]);
        assert_eq!(w.sum(), int(6));
        assert_eq!(w.prefixes().len(), 3);
        assert!(matches!(OmegaTuple::new(vec![int(1), int(0)]), Err(Error::ZeroOmega)));
    }

    #[test]
    fn product_series_examples() {
        let one = OmegaTuple::new(vec![int(1)]).unwrap();
        assert_eq!(
            scalar_product_series(&one, 5).unwrap(),
            bernoulli_scalar_series(&int(1), 5).unwrap()
        );
        let w = OmegaTuple::new(vec![int(1), int(2)]).unwrap();
        assert_eq!(scalar_product_series(&w, 3).unwrap().coeff(0), frac(1, 2));
        let w = OmegaTuple::new(vec![int(1), int(1)]).unwrap();
        assert_eq!(scalar_product_series(&w, 3).unwrap().coeff(1), int(-1));
    }

    #[test]
    fn multiple_examples() {
        let one = OmegaTuple::new(vec![int(1)]).unwrap();
        for m in enumerate_partitions(2, 3) {
            assert_eq!(
                multiple_mv_bernoulli(&m, &one, 2, &int(1)).unwrap(),
                mv_bernoulli(&m, 2, &int(1)).unwrap()
            );
        }
        let w = OmegaTuple::new(vec![int(1), int(2)]).unwrap();
        assert_eq!(
            multiple_mv_bernoulli(&Partition::empty(), &w, 2, &int(1)).unwrap(),
            SymPoly::constant(2, frac(1, 2))
        );
        // B_{1,m}(z | (c)) = c^{m-1} B_m(z / c)
        let c = frac(5, 2);
        let w = OmegaTuple::new(vec![c.clone()]).unwrap();
        for m in 0..=5u32 {
            let lhs = multiple_mv_bernoulli(&Partition::new(vec![m]).unwrap(), &w, 1, &int(2)).unwrap();
            let rhs = bernoulli_poly_classical(m)
                .affine_substitute(&c.recip(), &Rational::zero())
                .scale(&pow(&c, m as i64 - 1).unwrap());
            assert_eq!(lhs, rhs);
        }
        let empty = OmegaTuple::new(vec![]).unwrap();
        let m = p(&[2, 1]);
        assert_eq!(multiple_mv_bernoulli(&m, &empty, 2, &int(1)).unwrap(), jack_phi(&m, 2, &int(1)).unwrap());
    }

    #[test]
    fn multiple_matches_series_oracle() {
        let w = OmegaTuple::new(vec![int(1), frac(-2, 3), int(3)]).unwrap();
        for (idx, z) in seeded_points(7, 0, 2, 2).into_iter().enumerate() {
            let tab = series_table(&z, 2, &frac(1, 2), &w, 3).unwrap();
            for m in enumerate_partitions(2, 3) {
                let direct = multiple_mv_bernoulli(&m, &w, 2, &frac(1, 2)).unwrap().evaluate(&z).unwrap();
                assert_eq!(tab[&m], direct, "point {idx}, {m}");
            }
        }
    }

    #[test]
    fn seeded_points_are_reproducible() {
        assert_eq!(seeded_points(1, 4, 3, 3), seeded_points(1, 4, 3, 3));
        assert_ne!(seeded_points(1, 4, 3, 3), seeded_points(1, 5, 3, 3));
    }

    #[test]
    fn theorem_examples() {
        let reps = verify_theorem1(2, &int(1), 0).unwrap();
        assert_eq!(reps.len(), 8);
        assert!(reps.iter().all(|r| r.passed()));
        let reps = verify_theorem1(1, &int(2), 6).unwrap();
        assert!(reps.iter().all(|r| r.passed()), "{:?}", reps.iter().find(|r| !r.passed()));
        let w = OmegaTuple::new(vec![int(1), int(1)]).unwrap();
        let reps = verify_theorem2(2, &int(2), &w, 3).unwrap();
        assert!(reps.iter().all(|r| r.passed()), "{:?}", reps.iter().find(|r| !r.passed()));
        assert_eq!(reps.len(), enumerate_partitions(2, 3).len() * (3 + 3 * 2));
    }
}
