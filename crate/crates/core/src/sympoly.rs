//! Symmetric polynomials over the rationals in the monomial-symmetric basis,
//! with the operators `E_0` and `D_2` and affine substitutions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{format_rational, Rational};
use crate::raw::{distinct_permutations, RawPoly};

/// A symmetric polynomial in `r` variables, stored as coefficients of the
/// monomial symmetric polynomials `m_λ`. Keys with more than `r` parts never
/// appear and zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    r: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymPoly {
    pub fn zero(r: usize) -> Self {
        SymPoly {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(r: usize, c: Rational) -> Self {
        let mut p = SymPoly::zero(r);
        p.add_term(Partition::empty(), c);
        p
    }

    pub fn one(r: usize) -> Self {
        SymPoly::constant(r, Rational::one())
    }

    /// The monomial symmetric polynomial `m_λ`; zero if `λ` has more than `r` parts.
    pub fn monomial(lambda: &Partition, r: usize) -> Self {
        let mut p = SymPoly::zero(r);
        p.add_term(lambda.clone(), Rational::one());
        p
    }

    /// `|z| = z_1 + ... + z_r = m_(1)`.
    pub fn e1(r: usize) -> Self {
        SymPoly::monomial(&Partition::from_sorted(vec![1]), r)
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut p = SymPoly::zero(r);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c·m_λ`; silently drops `λ` with more than `r` parts.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || lambda.len() > self.r {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    /// The homogeneous component of degree `n`.
    pub fn component(&self, n: u32) -> SymPoly {
        SymPoly {
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight() == n)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.terms.keys().all(|k| k.weight() == n)
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.r);
        }
        SymPoly {
            r: self.r,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn to_raw(&self) -> RawPoly {
        let mut raw = RawPoly::zero(self.r);
        for (lambda, c) in &self.terms {
            for e in distinct_permutations(&lambda.padded(self.r)) {
                raw.add_term(e, c.clone());
            }
        }
        raw
    }

    pub fn multiply(&self, other: &SymPoly) -> Result<SymPoly> {
        if self.r != other.r {
            return Err(Error::VariableCountMismatch {
                left: self.r,
                right: other.r,
            });
        }
        // Only the weakly decreasing exponents of the product are needed.
        let lhs = self.to_raw();
        let rhs = other.to_raw();
        let mut out = SymPoly::zero(self.r);
        for (e2, c2) in rhs.terms() {
            for (e1, c1) in lhs.terms() {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if e.windows(2).all(|w| w[0] >= w[1]) {
                    out.add_term(Partition::from_sorted(e), c1 * c2);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> SymPoly {
        let mut acc = SymPoly::one(self.r);
        for _ in 0..n {
            acc = acc.multiply(self).expect("same r");
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.r {
            return Err(Error::PointLength {
                expected: self.r,
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (lambda, c) in &self.terms {
            let mut m = Rational::zero();
            for e in distinct_permutations(&lambda.padded(self.r)) {
                let mut t = Rational::one();
                for (x, &k) in point.iter().zip(&e) {
                    if k > 0 {
                        t *= num_traits::pow(x.clone(), k as usize);
                    }
                }
                m += t;
            }
            acc += c * m;
        }
        Ok(acc)
    }

    /// `E_0 f = Σ_j ∂f/∂z_j`.
    pub fn apply_e0(&self) -> SymPoly {
        let raw = self.to_raw();
        let mut out = RawPoly::zero(self.r);
        for j in 0..self.r {
            out = &out + &raw.derivative(j);
        }
        out.to_sympoly().expect("E_0 preserves symmetry")
    }

    /// `D_2 f = Σ_j z_j² ∂_j² f + d Σ_{j≠l} z_j²/(z_j - z_l) ∂_j f`.
    ///
    /// The rational part is evaluated pairwise as
    /// `(z_j² ∂_j f - z_l² ∂_l f) / (z_j - z_l)`, which divides exactly for
    /// symmetric `f`.
    pub fn apply_d2(&self, d: &Rational) -> Result<SymPoly> {
        let raw = self.to_raw();
        let first: Vec<RawPoly> = (0..self.r).map(|j| raw.derivative(j)).collect();
        let mut out = RawPoly::zero(self.r);
        for (j, dj) in first.iter().enumerate() {
            out = &out + &dj.derivative(j).shift_var(j, 2);
        }
        let mut cross = RawPoly::zero(self.r);
        for j in 0..self.r {
            for l in j + 1..self.r {
                let num = &first[j].shift_var(j, 2) - &first[l].shift_var(l, 2);
                cross = &cross + &num.div_by_difference(j, l)?;
            }
        }
        out = &out + &cross.scale(d);
        out.to_sympoly()
    }

    /// `f(a z_1 + b, ..., a z_r + b)` expanded back into the monomial basis.
    pub fn affine_substitute(&self, a: &Rational, b: &Rational) -> SymPoly {
        if a.is_one() && b.is_zero() {
            return self.clone();
        }
        self.to_raw()
            .affine(a, b)
            .to_sympoly()
            .expect("affine substitution preserves symmetry")
    }

    /// Plain-text rendering, highest degree first: `1/2·m[1] − 1/2`.
    pub fn to_plain(&self) -> String {
        render(self, |k| format!("m[{}]", join_parts(k)), format_rational, "·", "−")
    }

    /// LaTeX rendering: `\frac{1}{2} m_{(1)} - \frac{1}{2}`.
    pub fn to_latex(&self) -> String {
        render(
            self,
            |k| format!("m_{{({})}}", join_parts(k)),
            latex_rational,
            " ",
            "-",
        )
    }
}

fn join_parts(k: &Partition) -> String {
    k.parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

fn render(
    p: &SymPoly,
    basis: impl Fn(&Partition) -> String,
    scalar: impl Fn(&Rational) -> String,
    times: &str,
    minus: &str,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut keys: Vec<&Partition> = p.terms.keys().collect();
    keys.sort_by(|a, b| b.weight().cmp(&a.weight()).then_with(|| b.parts().cmp(a.parts())));
    let mut out = String::new();
    for (idx, k) in keys.into_iter().enumerate() {
        let c = &p.terms[k];
        let negative = c.is_negative();
        let mag = c.abs();
        let body = if k.is_empty() {
            scalar(&mag)
        } else if mag.is_one() {
            basis(k)
        } else {
            format!("{}{}{}", scalar(&mag), times, basis(k))
        };
        match (idx, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push_str(minus);
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push(' ');
                out.push_str(minus);
                out.push(' ');
                out.push_str(&body);
            }
        }
    }
    out
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

// The operator impls panic on mismatched `r`; that is a caller bug, not data.
impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.r, rhs.r, "adding polynomials in different variable counts");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Rational> for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &Rational) -> SymPoly {
        self.scale(rhs)
    }
}

impl std::iter::Sum for SymPoly {
    fn sum<I: Iterator<Item = SymPoly>>(mut iter: I) -> SymPoly {
        let first = iter.next().expect("sum of at least one polynomial");
        iter.fold(first, |acc, p| &acc + &p)
    }
}
