//! Truncated formal series: scalar series in `t`, and graded symmetric
//! series in `u` whose degree-`n` component is homogeneous of degree `n`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::jack::{jack_phi, jack_psi, monomial_to_psi};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{ensure_positive_d, int, Rational};
use crate::sympoly::SymPoly;

/// `Σ_{n ≤ max_degree} c_n t^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSeries {
    coeffs: Vec<Rational>,
}

impl ScalarSeries {
    /// Panics on an empty coefficient vector.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least degree 0");
        ScalarSeries { coeffs }
    }

    pub fn zero(max_degree: usize) -> Self {
        ScalarSeries::new(vec![Rational::zero(); max_degree + 1])
    }

    pub fn one(max_degree: usize) -> Self {
        let mut s = ScalarSeries::zero(max_degree);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `t` (zero if `max_degree = 0`).
    pub fn t(max_degree: usize) -> Self {
        let mut s = ScalarSeries::zero(max_degree);
        if max_degree >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// `e^{a t} = Σ a^n t^n / n!`.
    pub fn exp(a: &Rational, max_degree: usize) -> Self {
        let mut coeffs = Vec::with_capacity(max_degree + 1);
        let mut c = Rational::one();
        for n in 0..=max_degree {
            coeffs.push(c.clone());
            c = c * a / int(n as i64 + 1);
        }
        ScalarSeries::new(coeffs)
    }

    /// `(e^{a t} - 1) / t = Σ a^{n+1} t^n / (n+1)!`.
    pub fn expm1_over_t(a: &Rational, max_degree: usize) -> Self {
        let e = ScalarSeries::exp(a, max_degree + 1);
        ScalarSeries::new(e.coeffs[1..].to_vec())
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Zero past the truncation degree.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.max_degree() != other.max_degree() {
            return Err(Error::TruncationMismatch {
                left: self.max_degree(),
                right: other.max_degree(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        Ok(ScalarSeries::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        Ok(ScalarSeries::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ScalarSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(ScalarSeries::new(out))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroDenominator("series constant term"));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = vec![inv0.clone()];
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(ScalarSeries::new(out))
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(max_degree + 1, Rational::zero());
        ScalarSeries::new(c)
    }
}

/// `t / (e^{ωt} - 1) = Σ B_N ω^{N-1} t^N / N!`, as the inverse of
/// `(e^{ωt} - 1)/t`.
pub fn bernoulli_scalar_series(omega: &Rational, max_degree: usize) -> Result<ScalarSeries> {
    if omega.is_zero() {
        return Err(Error::ZeroOmega);
    }
    ScalarSeries::expm1_over_t(omega, max_degree).inverse()
}

/// `Σ_{n ≤ max_degree} f_n(u)` with `f_n` homogeneous of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    r: usize,
    components: Vec<SymPoly>,
}

impl GradedSeries {
    pub fn zero(r: usize, max_degree: usize) -> Self {
        GradedSeries {
            r,
            components: vec![SymPoly::zero(r); max_degree + 1],
        }
    }

    pub fn one(r: usize, max_degree: usize) -> Self {
        let mut g = GradedSeries::zero(r, max_degree);
        g.components[0] = SymPoly::one(r);
        g
    }

    /// Splits `f` by degree, dropping everything above `max_degree`.
    pub fn from_sympoly(f: &SymPoly, max_degree: usize) -> Self {
        GradedSeries {
            r: f.r(),
            components: (0..=max_degree).map(|n| f.component(n as u32)).collect(),
        }
    }

    /// Builds from explicit components; each must be homogeneous of its index.
    pub fn from_components(r: usize, components: Vec<SymPoly>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Parse {
                what: "graded series",
                input: "no components".into(),
            });
        }
        for (n, c) in components.iter().enumerate() {
            if c.r() != r {
                return Err(Error::VariableCountMismatch {
                    left: r,
                    right: c.r(),
                });
            }
            if !c.is_homogeneous_of(n as u32) {
                return Err(Error::Parse {
                    what: "graded series component",
                    input: format!("degree {n}: {c}"),
                });
            }
        }
        Ok(GradedSeries { r, components })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[SymPoly] {
        &self.components
    }

    pub fn component(&self, n: usize) -> &SymPoly {
        &self.components[n]
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            return Err(Error::VariableCountMismatch {
                left: self.r,
                right: other.r,
            });
        }
        if self.max_degree() != other.max_degree() {
            return Err(Error::TruncationMismatch {
                left: self.max_degree(),
                right: other.max_degree(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(GradedSeries {
            r: self.r,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(GradedSeries {
            r: self.r,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GradedSeries {
            r: self.r,
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let top = self.max_degree();
        let mut out = GradedSeries::zero(self.r, top);
        for (i, a) in self.components.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.components[..=top - i].iter().enumerate() {
                if !b.is_zero() {
                    out.components[i + j] = &out.components[i + j] + &a.multiply(b)?;
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `t = |u|` into `ss` and multiplies.
    pub fn multiply_scalar(&self, ss: &ScalarSeries) -> Result<Self> {
        if ss.max_degree() != self.max_degree() {
            return Err(Error::TruncationMismatch {
                left: self.max_degree(),
                right: ss.max_degree(),
            });
        }
        let top = self.max_degree();
        let e1 = SymPoly::e1(self.r);
        let mut powers = vec![SymPoly::one(self.r)];
        for _ in 1..=top {
            let next = powers.last().expect("nonempty").multiply(&e1)?;
            powers.push(next);
        }
        let mut out = GradedSeries::zero(self.r, top);
        for (i, a) in self.components.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (n, c) in ss.coeffs()[..=top - i].iter().enumerate() {
                if !c.is_zero() {
                    let term = a.multiply(&powers[n])?.scale(c);
                    out.components[i + n] = &out.components[i + n] + &term;
                }
            }
        }
        Ok(out)
    }

    /// The truncated sum as one polynomial.
    pub fn to_sympoly(&self) -> SymPoly {
        self.components.iter().cloned().sum()
    }

    pub fn evaluate(&self, upoint: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for c in &self.components {
            acc += c.evaluate(upoint)?;
        }
        Ok(acc)
    }
}

/// `Σ_{|m| ≤ max_degree} Ψ_m(z) Φ_m(u)`, the truncated kernel `₀F₀(z, u)`.
pub fn f00_truncated(
    zpoint: &[Rational],
    r: usize,
    d: &Rational,
    max_degree: usize,
) -> Result<GradedSeries> {
    ensure_positive_d(d)?;
    if zpoint.len() != r {
        return Err(Error::PointLength {
            expected: r,
            got: zpoint.len(),
        });
    }
    let mut out = GradedSeries::zero(r, max_degree);
    for m in enumerate_partitions(r, max_degree as u32) {
        let c = jack_psi(&m, r, d)?.evaluate(zpoint)?;
        if c.is_zero() {
            continue;
        }
        let n = m.weight() as usize;
        out.components[n] = &out.components[n] + &jack_phi(&m, r, d)?.scale(&c);
    }
    Ok(out)
}

/// Reads `gs = Σ c_m Ψ_m(u)` off degree by degree.
pub fn psi_coefficients(gs: &GradedSeries, d: &Rational) -> Result<BTreeMap<Partition, Rational>> {
    let mut out = BTreeMap::new();
    for c in gs.components() {
        out.extend(monomial_to_psi(c, d)?.coeffs);
    }
    Ok(out)
}

/// `|u|^N` as a graded series truncated at `max_degree`.
pub fn e1_power(r: usize, n: u32, max_degree: usize) -> GradedSeries {
    GradedSeries::from_sympoly(&SymPoly::e1(r).pow(n), max_degree)
}

/// `Σ_N t^N/N!` truncated.
pub fn exp_series(max_degree: usize) -> ScalarSeries {
    ScalarSeries::exp(&Rational::one(), max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::{jack_special_value_one, psi_normalizer};
    use crate::rational::{factorial, frac};
    use crate::sympoly::SymPoly;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn bernoulli_series_examples() {
        let s = bernoulli_scalar_series(&int(1), 4).unwrap();
        assert_eq!(s.coeffs(), &[int(1), frac(-1, 2), frac(1, 12), int(0), frac(-1, 720)]);
        assert_eq!(bernoulli_scalar_series(&int(2), 0).unwrap().coeff(0), frac(1, 2));
        let s = bernoulli_scalar_series(&int(1), 11).unwrap();
        for n in (3..=11).step_by(2) {
            assert!(s.coeff(n).is_zero());
        }
        assert!(matches!(bernoulli_scalar_series(&int(0), 3), Err(Error::ZeroOmega)));
    }

    #[test]
    fn strict_truncation() {
        let a = ScalarSeries::one(3);
        let b = ScalarSeries::one(4);
        assert!(matches!(a.mul(&b), Err(Error::TruncationMismatch { .. })));
        let g = GradedSeries::one(2, 3);
        let h = GradedSeries::one(2, 2);
        assert!(matches!(g.add(&h), Err(Error::TruncationMismatch { .. })));
        assert!(matches!(g.multiply_scalar(&b), Err(Error::TruncationMismatch { .. })));
    }

    #[test]
    fn inverse_round_trip() {
        let s = ScalarSeries::exp(&frac(3, 2), 6);
        let prod = s.mul(&s.inverse().unwrap()).unwrap();
        assert_eq!(prod, ScalarSeries::one(6));
        assert_eq!(s.inverse().unwrap(), ScalarSeries::exp(&frac(-3, 2), 6));
    }

    #[test]
    fn f00_examples() {
        let c = frac(2, 3);
        let g = f00_truncated(std::slice::from_ref(&c), 1, &int(2), 2).unwrap();
        let u = SymPoly::monomial(&p(&[1]), 1);
        let expect = &(&SymPoly::one(1) + &u.scale(&c)) + &u.pow(2).scale(&(&c * &c / int(2)));
        assert_eq!(g.to_sympoly(), expect);
        for r in 1..=3 {
            let g = f00_truncated(&vec![int(0); r], r, &frac(1, 2), 3).unwrap();
            assert_eq!(g, GradedSeries::one(r, 3));
        }
        assert!(f00_truncated(&q(&[1]), 2, &int(1), 2).is_err());
    }

    #[test]
    fn multiply_scalar_examples() {
        let g = f00_truncated(&q(&[1, -2]), 2, &int(1), 3).unwrap();
        assert_eq!(g.multiply_scalar(&ScalarSeries::one(3)).unwrap(), g);
        let b = bernoulli_scalar_series(&int(1), 4).unwrap();
        let out = GradedSeries::one(2, 4).multiply_scalar(&b).unwrap();
        for n in 0..=4u32 {
            let expect = SymPoly::e1(2).pow(n).scale(&b.coeff(n as usize));
            assert_eq!(out.component(n as usize), &expect);
        }
    }

    #[test]
    fn psi_coefficient_examples() {
        let d = frac(1, 2);
        for n in 0..=4u32 {
            let coeffs = psi_coefficients(&e1_power(2, n, 4), &d).unwrap();
            for m in enumerate_partitions(2, 4) {
                let expect = if m.weight() == n { factorial(n) } else { int(0) };
                assert_eq!(coeffs.get(&m).cloned().unwrap_or_default(), expect, "{m}");
            }
        }
        let phi = GradedSeries::from_sympoly(&jack_phi(&p(&[1]), 2, &d).unwrap(), 2);
        let c = psi_coefficients(&phi, &d).unwrap();
        let m1 = p(&[1]);
        assert_eq!(c[&m1], psi_normalizer(&m1, 2, &d) / jack_special_value_one(&m1, 2, &d));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn f00_read_back_in_psi_basis() {
        let d = int(3);
        let z = vec![frac(1, 2), int(-1)];
        let g = f00_truncated(&z, 2, &d, 3).unwrap();
        let c = psi_coefficients(&g, &d).unwrap();
        for m in enumerate_partitions(2, 3) {
            let rescale = psi_normalizer(&m, 2, &d) / jack_special_value_one(&m, 2, &d);
            let expect = jack_psi(&m, 2, &d).unwrap().evaluate(&z).unwrap() * rescale;
            assert_eq!(c.get(&m).cloned().unwrap_or_default(), expect);
        }
    }

    #[test]
    fn index_law() {
        let d = frac(1, 2);
        let z = vec![frac(1, 3), int(2)];
        let z1: Vec<Rational> = z.iter().map(|x| x + int(1)).collect();
        let lhs = f00_truncated(&z1, 2, &d, 3).unwrap();
        let rhs = f00_truncated(&z, 2, &d, 3).unwrap().multiply_scalar(&exp_series(3)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn geometric_sum() {
        for n in 2..=4i64 {
            let deg = 6;
            let mut lhs = ScalarSeries::zero(deg);
            for i in 0..n {
                lhs = lhs.add(&ScalarSeries::exp(&frac(i, n), deg)).unwrap();
            }
            let num = ScalarSeries::expm1_over_t(&int(1), deg);
            let den = ScalarSeries::expm1_over_t(&frac(1, n), deg);
            assert_eq!(lhs, num.mul(&den.inverse().unwrap()).unwrap());
        }
    }
}
