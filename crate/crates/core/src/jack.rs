//! Jack polynomials `P_m(z; d/2)` and their normalizations.
//!
//! `P_m` is computed per degree as the monic, dominance-triangular
//! eigenfunction of `D_2`: writing `D_2 m_μ = Σ_ν a_{μν} m_ν`, the
//! coefficients of `P_m = Σ c_ν m_ν` satisfy
//! `(a_{mm} - a_{νν}) c_ν = Σ_{ν<μ≤m} c_μ a_{μν}`, solved from the top of
//! the dominance order down.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::memo::{self, Family, Key};
use crate::partition::{gen_pochhammer, partitions_of, Partition};
use crate::rational::{ensure_positive_d, factorial, half, int, pow, rising, Rational};
use crate::sympoly::SymPoly;

fn check(m: &Partition, r: usize, d: &Rational) -> Result<()> {
    ensure_positive_d(d)?;
    m.check_fits(r)
}

/// Eigenvalue of `D_2` on `P_m`: `Σ_j m_j (m_j - 1 + d (r - j))`.
pub fn jack_eigenvalue(m: &Partition, r: usize, d: &Rational) -> Rational {
    m.parts()
        .iter()
        .enumerate()
        .map(|(idx, &mj)| {
            let j = idx as i64 + 1;
            int(mj as i64) * (int(mj as i64 - 1) + d * int(r as i64 - j))
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// The Jack polynomial `P_m(z; d/2)` in `r` variables, memoized.
pub fn jack_p(m: &Partition, r: usize, d: &Rational) -> Result<Arc<SymPoly>> {
    check(m, r, d)?;
    let key = Key {
        family: Family::P,
        r,
        d: d.clone(),
        partition: m.clone(),
    };
    memo::get_or_try_insert(key, || compute_jack_p(m, r, d))
}

fn compute_jack_p(m: &Partition, r: usize, d: &Rational) -> Result<SymPoly> {
    // lexicographically descending: a linear extension of dominance
    let below: Vec<Partition> = partitions_of(m.weight(), r)
        .into_iter()
        .filter(|k| k == m || k.dominance_less(m).unwrap_or(false))
        .collect();
    let actions: Vec<SymPoly> = below
        .iter()
        .map(|mu| SymPoly::monomial(mu, r).apply_d2(d))
        .collect::<Result<_>>()?;
    let top = actions[0].coeff(m);
    let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
    coeffs.insert(m.clone(), Rational::one());
    for (idx, nu) in below.iter().enumerate().skip(1) {
        let mut rhs = Rational::zero();
        for (mu, act) in below[..idx].iter().zip(&actions[..idx]) {
            if let Some(c) = coeffs.get(mu) {
                rhs += c * act.coeff(nu);
            }
        }
        let gap = &top - actions[idx].coeff(nu);
        if gap.is_zero() {
            return Err(Error::PivotCollision(m.to_string(), nu.to_string()));
        }
        let c = rhs / gap;
        if !c.is_zero() {
            coeffs.insert(nu.clone(), c);
        }
    }
    Ok(SymPoly::from_terms(r, coeffs))
}

/// `P_m(1; d/2) = Π_{i<j} ((d/2)(j-i+1))_{m_i-m_j} / ((d/2)(j-i))_{m_i-m_j}`.
pub fn jack_special_value_one(m: &Partition, r: usize, d: &Rational) -> Rational {
    let h = half(d);
    let mut acc = Rational::one();
    for i in 1..=r {
        for j in i + 1..=r {
            let gap = m.part(i) - m.part(j);
            let ji = int((j - i) as i64);
            acc *= rising(&(&h * (&ji + int(1))), gap) / rising(&(&h * &ji), gap);
        }
    }
    acc
}

/// `P^ip_m(m + (d/2)δ; d/2)`, the normalizer turning `P_m` into `Ψ_m`:
/// `Π_j ((d/2)(r-j)+1)_{m_j} · Π_{i<j} ((d/2)(j-i-1)+1)_{m_i-m_j} / ((d/2)(j-i)+1)_{m_i-m_j}`.
pub fn psi_normalizer(m: &Partition, r: usize, d: &Rational) -> Rational {
    let h = half(d);
    let one = Rational::one();
    let mut acc = Rational::one();
    for j in 1..=r {
        acc *= rising(&(&h * int((r - j) as i64) + &one), m.part(j));
    }
    for i in 1..=r {
        for j in i + 1..=r {
            let gap = m.part(i) - m.part(j);
            let ji = int((j - i) as i64);
            acc *= rising(&(&h * (&ji - &one) + &one), gap) / rising(&(&h * &ji + &one), gap);
        }
    }
    acc
}

/// Normalized Jack polynomial `Φ_m = P_m / P_m(1)`, so that `Φ_m(1) = 1`.
pub fn jack_phi(m: &Partition, r: usize, d: &Rational) -> Result<SymPoly> {
    let p = jack_p(m, r, d)?;
    Ok(p.scale(&jack_special_value_one(m, r, d).recip()))
}

/// `Ψ_m = P_m / P^ip_m(m + (d/2)δ)`, the analogue of `z^m / m!`.
pub fn jack_psi(m: &Partition, r: usize, d: &Rational) -> Result<SymPoly> {
    let p = jack_p(m, r, d)?;
    Ok(p.scale(&psi_normalizer(m, r, d).recip()))
}

/// `h_{±,i}(m) = Π_{k≠i} (m_i - m_k - (d/2)(i-k) ± d/2) / (m_i - m_k - (d/2)(i-k))`.
pub fn h_factor(m: &Partition, i: usize, r: usize, d: &Rational, plus: bool) -> Result<Rational> {
    let h = half(d);
    let mut acc = Rational::one();
    for k in (1..=r).filter(|&k| k != i) {
        let base = int(m.part(i) as i64 - m.part(k) as i64) - &h * int(i as i64 - k as i64);
        if base.is_zero() {
            return Err(Error::ZeroDenominator("h factor"));
        }
        let num = if plus { &base + &h } else { &base - &h };
        acc *= num / base;
    }
    Ok(acc)
}

/// Coefficient of `Ψ_{m + ε_i}` in `|u| Ψ_m(u)`:
/// `(m_i + 1 + (d/2)(r-i)) h_{-,i}(m + ε_i)`.
pub fn pieri_coefficient(m: &Partition, i: usize, r: usize, d: &Rational) -> Result<Rational> {
    check(m, r, d)?;
    let up = m
        .add_box(i, r)
        .ok_or_else(|| Error::NotAddable(format!("{m} + e_{i}")))?;
    Ok((int(m.part(i) as i64 + 1) + half(d) * int((r - i) as i64)) * h_factor(&up, i, r, d, false)?)
}

/// `(m_i + (d/2)(r-i)) h_{-,i}(m)`: the weight attached to `m - ε_i` in the
/// difference and differential equations.
pub fn lowering_coefficient(m: &Partition, i: usize, r: usize, d: &Rational) -> Result<Rational> {
    Ok((int(m.part(i) as i64) + half(d) * int((r - i) as i64)) * h_factor(m, i, r, d, false)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JackBasis {
    P,
    Psi,
}

/// Coefficients of a symmetric polynomial in the `P` or `Ψ` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackExpansion {
    pub r: usize,
    pub d: Rational,
    pub basis: JackBasis,
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl JackExpansion {
    pub fn coeff(&self, m: &Partition) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Rescales diagonally into `basis` (`Ψ_m = P_m / psi_normalizer(m)`).
    pub fn to_basis(&self, basis: JackBasis) -> JackExpansion {
        if basis == self.basis {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, c)| {
                let n = psi_normalizer(m, self.r, &self.d);
                let c = match basis {
                    JackBasis::Psi => c * n,
                    JackBasis::P => c / n,
                };
                (m.clone(), c)
            })
            .collect();
        JackExpansion {
            r: self.r,
            d: self.d.clone(),
            basis,
            coeffs,
        }
    }

    /// Expands back into the monomial basis.
    pub fn to_sympoly(&self) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.r);
        for (m, c) in &self.coeffs {
            let b = match self.basis {
                JackBasis::P => (*jack_p(m, self.r, &self.d)?).clone(),
                JackBasis::Psi => jack_psi(m, self.r, &self.d)?,
            };
            out = &out + &b.scale(c);
        }
        Ok(out)
    }
}

/// Expands `f` in the Jack `P` basis by peeling off the lexicographically
/// largest monomial in each degree.
pub fn monomial_to_p(f: &SymPoly, d: &Rational) -> Result<JackExpansion> {
    ensure_positive_d(d)?;
    let r = f.r();
    let mut rest = f.clone();
    let mut coeffs = BTreeMap::new();
    while let Some(lead) = leading_key(&rest) {
        let c = rest.coeff(&lead);
        let p = jack_p(&lead, r, d)?;
        rest = &rest - &p.scale(&c);
        coeffs.insert(lead, c);
    }
    Ok(JackExpansion {
        r,
        d: d.clone(),
        basis: JackBasis::P,
        coeffs,
    })
}

/// Expands `f = Σ c_m Ψ_m`.
pub fn monomial_to_psi(f: &SymPoly, d: &Rational) -> Result<JackExpansion> {
    Ok(monomial_to_p(f, d)?.to_basis(JackBasis::Psi))
}

fn leading_key(f: &SymPoly) -> Option<Partition> {
    // canonical order is weight ascending, lex descending: the first key of
    // the top weight is the lexicographic maximum there
    let top = f.degree()?;
    f.terms()
        .map(|(k, _)| k)
        .find(|k| k.weight() == top)
        .cloned()
}

/// Scalars relating the common Jack normalizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationFactors {
    /// `d_m` (a product over pairs `i < j`).
    pub d_m: Rational,
    /// `(n/r)_m` with `n = r + (d/2) r (r-1)`.
    pub n_over_r_pochhammer: Rational,
    /// `s` with Stanley's `J_m = s · P_m`.
    pub stanley_factor: Rational,
    /// `t` with Kaneko's `C_m = t · P_m`; equivalently `C_m = |m|! Ψ_m`.
    pub kaneko_factor: Rational,
}

impl NormalizationFactors {
    /// `d_m / (n/r)_m`, the ratio with `Ψ_m = (d_m / (n/r)_m) Φ_m`.
    pub fn psi_over_phi(&self) -> Result<Rational> {
        if self.n_over_r_pochhammer.is_zero() {
            return Err(Error::ZeroDenominator("(n/r)_m"));
        }
        Ok(&self.d_m / &self.n_over_r_pochhammer)
    }
}

pub fn normalization_factors(m: &Partition, r: usize, d: &Rational) -> Result<NormalizationFactors> {
    check(m, r, d)?;
    let h = half(d);
    let one = Rational::one();
    let mut d_m = Rational::one();
    for i in 1..=r {
        for j in i + 1..=r {
            let gap = m.part(i) - m.part(j);
            let ji = int((j - i) as i64);
            d_m *= (int(gap as i64) + &h * &ji) / (&h * &ji);
            d_m *= rising(&(&h * (&ji + &one)), gap) / rising(&(&h * (&ji - &one) + &one), gap);
        }
    }
    let n_over_r = &one + &h * int(r as i64 - 1);
    let n_over_r_pochhammer = gen_pochhammer(&n_over_r, m, d);
    let conj = m.conjugate();
    let mut hooks = Rational::one();
    for (i, j) in m.cells() {
        hooks *= int(m.part(i as usize) as i64 - j as i64)
            + &h * int(conj.part(j as usize) as i64 - i as i64 + 1);
    }
    let stanley_factor = pow(&(int(2) / d), m.weight() as i64)? * hooks;
    let kaneko_factor = factorial(m.weight()) / psi_normalizer(m, r, d);
    Ok(NormalizationFactors {
        d_m,
        n_over_r_pochhammer,
        stanley_factor,
        kaneko_factor,
    })
}
