use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::{Coefficient, GaussRat};

/// A finitely supported Laurent polynomial `Σ aₖ zᵏ` over `ℚ(𝕚)`.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, GaussRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn monomial(c: GaussRat, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `zⁿ`.
    pub fn z_pow(n: i64) -> Self {
        LaurentPoly::monomial(GaussRat::one(), n)
    }

    /// `zⁿ − z⁻ⁿ`; equals `2𝕚·sin(πnt)` at `z = e^{πit}`.
    pub fn sin_pair(n: i64) -> Self {
        LaurentPoly::from_terms([(n, GaussRat::one()), (-n, GaussRat::from_int(-1))])
    }

    /// `zⁿ + z⁻ⁿ`; equals `2cos(πnt)` at `z = e^{πit}`.
    pub fn cos_pair(n: i64) -> Self {
        LaurentPoly::from_terms([(n, GaussRat::one()), (-n, GaussRat::one())])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, GaussRat)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    /// Integer-coefficient shorthand, mostly for tests.
    pub fn from_int_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        LaurentPoly::from_terms(iter.into_iter().map(|(e, c)| (e, GaussRat::from_int(c))))
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the only possible term is `z⁰` (includes zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(GaussRat::is_one)
    }

    /// Single term `c·zᵏ`.
    pub fn as_monomial(&self) -> Option<(i64, &GaussRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> GaussRat {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GaussRat {
        self.coeff(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &GaussRat)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `zᵏ`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &GaussRat) -> Self {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// Substitutes `z ↦ z⁻¹`.
    pub fn reflect(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Substitutes `z ↦ zᵏ` for `k ≠ 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power needs a nonzero exponent");
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        // Horner from max to min degree, then rescale by z^min.
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Complex64::new(0.0, 0.0);
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for e in (lo..=hi).rev() {
            acc *= z;
            if let Some(c) = self.terms.get(&e) {
                acc += c.to_complex();
            }
        }
        acc * z.powi(lo as i32)
    }

    /// Dense coefficients from `min_degree` to `max_degree`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<GaussRat>) {
        let Some(lo) = self.min_degree() else {
            return (0, Vec::new());
        };
        let hi = self.max_degree().unwrap_or(lo);
        let mut v = alloc::vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i64, coeffs: &[GaussRat]) -> Self {
        LaurentPoly {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c.clone()))
                .collect(),
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (lo_a, a) = self.to_dense();
        let (lo_b, b) = rhs.to_dense();
        let mut out = alloc::vec![GaussRat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        LaurentPoly::from_dense(lo_a + lo_b, &out)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<GaussRat> for LaurentPoly {
    fn from(c: GaussRat) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Coefficient for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    /// Units of `ℚ(𝕚)[z, z⁻¹]` are exactly the nonzero monomials.
    fn inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        Some(LaurentPoly::monomial(c.inv()?, -e))
    }
}

/// Terms in descending exponent order, e.g. `2i*z^2+8i*z+2i-z^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = split_sign(c);
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (k, true) => write!(f, "z^{k}")?,
                (k, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Pulls a leading minus sign out of a coefficient when it is purely real
/// or purely imaginary; mixed values keep their parenthesised form.
fn split_sign(c: &GaussRat) -> (bool, GaussRat) {
    let negative = if c.im.is_zero() {
        c.re.is_negative()
    } else if c.re.is_zero() {
        c.im.is_negative()
    } else {
        false
    };
    if negative {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn difference_of_squares() {
        let a = LaurentPoly::sin_pair(1);
        let b = LaurentPoly::cos_pair(1);
        assert_eq!(&a * &b, LaurentPoly::sin_pair(2));
    }

    #[test]
    fn additive_inverse() {
        let p = LaurentPoly::from_int_terms([(3, 2), (-1, -5), (0, 7)]);
        assert!((&p + &-&p).is_zero());
    }

    #[test]
    fn absorbing_zero() {
        let p = LaurentPoly::from_int_terms([(1, 1), (0, 1)]);
        assert!((&p * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = LaurentPoly::from_int_terms([(2, 1), (2, -1), (0, 3)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.min_degree(), Some(0));
        assert_eq!(p.max_degree(), Some(0));
    }

    #[test]
    fn degrees_and_units() {
        let p = LaurentPoly::from_int_terms([(-3, 1), (4, 2)]);
        assert_eq!(p.min_degree(), Some(-3));
        assert_eq!(p.max_degree(), Some(4));
        assert!(p.inverse().is_none());
        let m = LaurentPoly::monomial(GaussRat::from_int(2), -3);
        assert_eq!(&m * &m.inverse().unwrap(), LaurentPoly::one());
    }

    #[test]
    fn eval_matches_trig() {
        let t: f64 = 0.37;
        let z = Complex64::new(0.0, core::f64::consts::PI * t).exp();
        let s = LaurentPoly::sin_pair(3).eval(z);
        let expected = Complex64::new(0.0, 2.0 * (3.0 * core::f64::consts::PI * t).sin());
        assert!((s - expected).norm() < 1e-14);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([
            (2, GaussRat::from_ints(0, 2)),
            (1, GaussRat::from_ints(0, 8)),
            (0, GaussRat::from_ints(0, 2)),
            (-1, GaussRat::from_int(-1)),
        ]);
        assert_eq!(p.to_string(), "2i*z^2+8i*z+2i-z^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::sin_pair(1).to_string(), "z-z^-1");
    }
}
