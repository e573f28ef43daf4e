//! Polynomials in the raw monomial basis `z^e`. Used transiently for
//! differentiation, substitution, products and alternant quotients before
//! results are collected back into the symmetric basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{binomial_int, int, Rational};
use crate::sympoly::SymPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RawPoly {
    pub fn zero(nvars: usize) -> Self {
        RawPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = RawPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The single variable `z_j` (0-based).
    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        let mut p = RawPoly::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = RawPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> RawPoly {
        if c.is_zero() {
            return RawPoly::zero(self.nvars);
        }
        RawPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn derivative(&self, j: usize) -> RawPoly {
        let mut out = RawPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[j] > 0 {
                let mut f = e.clone();
                f[j] -= 1;
                out.add_term(f, c * int(e[j] as i64));
            }
        }
        out
    }

    /// Multiplies by `z_j^k`.
    pub fn shift_var(&self, j: usize, k: u32) -> RawPoly {
        RawPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f[j] += k;
                    (f, c.clone())
                })
                .collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `z_j -> a z_j + b` in every variable.
    pub fn affine(&self, a: &Rational, b: &Rational) -> RawPoly {
        let max_deg = self
            .terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0);
        // (a z + b)^k = Σ_i C(k,i) a^i b^(k-i) z^i
        let expansions: Vec<Vec<Rational>> = (0..=max_deg)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        binomial_int(k as i64, i)
                            * num_traits::pow(a.clone(), i as usize)
                            * num_traits::pow(b.clone(), (k - i) as usize)
                    })
                    .collect()
            })
            .collect();
        let mut out = RawPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut partial = RawPoly::constant(self.nvars, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let mut factor = RawPoly::zero(self.nvars);
                for (i, coef) in expansions[k as usize].iter().enumerate() {
                    let mut f = vec![0; self.nvars];
                    f[j] = i as u32;
                    factor.add_term(f, coef.clone());
                }
                partial = &partial * &factor;
            }
            out = &out + &partial;
        }
        out
    }

    /// Exact quotient by `z_j - z_l`; errors if the division leaves a remainder.
    pub fn div_by_difference(&self, j: usize, l: usize) -> Result<RawPoly> {
        assert_ne!(j, l);
        // coefficients a_k (free of z_j) of z_j^k
        let mut by_power: BTreeMap<u32, RawPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[j];
            f[j] = 0;
            by_power
                .entry(k)
                .or_insert_with(|| RawPoly::zero(self.nvars))
                .add_term(f, c.clone());
        }
        let top = match by_power.keys().next_back() {
            Some(&k) => k,
            None => return Ok(RawPoly::zero(self.nvars)),
        };
        let get = |k: u32| {
            by_power
                .get(&k)
                .cloned()
                .unwrap_or_else(|| RawPoly::zero(self.nvars))
        };
        // synthetic division by (z_j - z_l): b_{k-1} = a_k + z_l b_k
        let mut quotient = RawPoly::zero(self.nvars);
        let mut b = RawPoly::zero(self.nvars);
        for k in (1..=top).rev() {
            b = &get(k) + &b.shift_var(l, 1);
            quotient = &quotient + &b.shift_var(j, k - 1);
        }
        let remainder = &get(0) + &b.shift_var(l, 1);
        if !remainder.is_zero() {
            return Err(Error::InexactDivision("z_j - z_l"));
        }
        Ok(quotient)
    }

    /// Exact quotient by the Vandermonde product `Π_{i<j} (z_i - z_j)`.
    pub fn div_by_vandermonde(&self) -> Result<RawPoly> {
        let mut q = self.clone();
        for i in 0..self.nvars {
            for j in i + 1..self.nvars {
                q = q.div_by_difference(i, j)?;
            }
        }
        Ok(q)
    }

    /// Collects a symmetric polynomial into the monomial-symmetric basis.
    pub fn to_sympoly(&self) -> Result<SymPoly> {
        let mut sym = SymPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                sym.add_term(Partition::from_sorted(e.clone()), c.clone());
            }
        }
        for (e, c) in &self.terms {
            if sym.coeff(&Partition::from_unsorted(e)) != *c {
                return Err(Error::NotSymmetric);
            }
        }
        if sym.to_raw().terms.len() != self.terms.len() {
            return Err(Error::NotSymmetric);
        }
        Ok(sym)
    }
}

impl Add for &RawPoly {
    type Output = RawPoly;
    fn add(self, rhs: &RawPoly) -> RawPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RawPoly {
    type Output = RawPoly;
    fn sub(self, rhs: &RawPoly) -> RawPoly {
        self + &(-rhs)
    }
}

impl Neg for &RawPoly {
    type Output = RawPoly;
    fn neg(self) -> RawPoly {
        RawPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &RawPoly {
    type Output = RawPoly;
    fn mul(self, rhs: &RawPoly) -> RawPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = RawPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Distinct permutations of `exps`, lexicographically ascending.
pub(crate) fn distinct_permutations(exps: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = exps.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[1, 1]).len(), 1);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = RawPoly::var(2, 0);
        let d = &x - &x;
        assert!(d.is_zero());
    }

    #[test]
    fn exact_division_by_difference() {
        // (z0^3 z1 - z0 z1^3) / (z0 - z1) = z0 z1 (z0 + z1)
        let f = &RawPoly::monomial(vec![3, 1], int(1)) - &RawPoly::monomial(vec![1, 3], int(1));
        let q = f.div_by_difference(0, 1).unwrap();
        let expect = &RawPoly::monomial(vec![2, 1], int(1)) + &RawPoly::monomial(vec![1, 2], int(1));
        assert_eq!(q, expect);
        let g = RawPoly::monomial(vec![1, 0], int(1));
        assert!(g.div_by_difference(0, 1).is_err());
    }

    #[test]
    fn affine_of_square() {
        // (2z + 1)^2 = 4z^2 + 4z + 1
        let f = RawPoly::monomial(vec![2], int(1));
        let g = f.affine(&int(2), &int(1));
        assert_eq!(g.coeff(&[2]), int(4));
        assert_eq!(g.coeff(&[1]), int(4));
        assert_eq!(g.coeff(&[0]), int(1));
        assert_eq!(g.evaluate(&[frac(1, 2)]).unwrap(), int(4));
    }

    #[test]
    fn non_symmetric_is_rejected() {
        let f = RawPoly::var(2, 0);
        assert_eq!(f.to_sympoly(), Err(Error::NotSymmetric));
    }
}
