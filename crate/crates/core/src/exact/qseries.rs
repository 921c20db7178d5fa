use alloc::vec::Vec;

use num_complex::Complex64;

use super::Coefficient;
use crate::AlgebraError;

/// A truncated series `q^{p/8} · Σ_{k=0}^{K} a_k q^{k/2}`.
///
/// `coeffs[k]` is the coefficient of `q^{k/2}`; the series says nothing about
/// orders above `K = coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries<C> {
    prefactor_eighths: i64,
    coeffs: Vec<C>,
}

impl<C: Coefficient> QSeries<C> {
    /// Panics if `coeffs` is empty.
    pub fn new(prefactor_eighths: i64, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series needs at least the q^0 coefficient");
        QSeries { prefactor_eighths, coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = alloc::vec![C::zero(); order + 1];
        coeffs[0] = c;
        QSeries { prefactor_eighths: 0, coeffs }
    }

    pub fn one(order: usize) -> Self {
        QSeries::constant(C::one(), order)
    }

    pub fn zero(order: usize) -> Self {
        QSeries::constant(C::zero(), order)
    }

    /// `1 + a·q^{e/2}`, the building block of every product expansion.
    pub fn binomial(a: C, half_exp: usize, order: usize) -> Self {
        let mut s = QSeries::<C>::one(order);
        if half_exp <= order {
            s.coeffs[half_exp] = s.coeffs[half_exp].plus(&a);
        }
        s
    }

    pub fn prefactor_eighths(&self) -> i64 {
        self.prefactor_eighths
    }

    pub fn with_prefactor(mut self, eighths: i64) -> Self {
        self.prefactor_eighths = eighths;
        self
    }

    /// The truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let k = order.min(self.order());
        QSeries { prefactor_eighths: self.prefactor_eighths, coeffs: self.coeffs[..=k].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Coefficientwise sum; the prefactors must already agree.
    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip_with(rhs, C::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip_with(rhs, C::minus)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Result<Self, AlgebraError> {
        if self.prefactor_eighths != rhs.prefactor_eighths {
            return Err(AlgebraError::MisalignedPrefactor {
                left: self.prefactor_eighths,
                right: rhs.prefactor_eighths,
            });
        }
        let k = self.order().min(rhs.order());
        Ok(QSeries {
            prefactor_eighths: self.prefactor_eighths,
            coeffs: (0..=k).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect(),
        })
    }

    /// Cauchy product truncated to the smaller order; prefactors add.
    pub fn mul(&self, rhs: &Self) -> Self {
        let k = self.order().min(rhs.order());
        let mut coeffs = alloc::vec![C::zero(); k + 1];
        for (i, a) in self.coeffs.iter().take(k + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(k + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        QSeries { prefactor_eighths: self.prefactor_eighths + rhs.prefactor_eighths, coeffs }
    }

    /// In-place multiplication by `1 + a·q^{e/2}`; cheaper than [`mul`](Self::mul)
    /// for sparse factors.
    pub fn mul_binomial(&mut self, a: &C, half_exp: usize) {
        if half_exp == 0 {
            let f = C::one().plus(a);
            for c in &mut self.coeffs {
                *c = c.times(&f);
            }
            return;
        }
        for k in (half_exp..self.coeffs.len()).rev() {
            let add = self.coeffs[k - half_exp].times(a);
            self.coeffs[k] = self.coeffs[k].plus(&add);
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        QSeries {
            prefactor_eighths: self.prefactor_eighths,
            coeffs: self.coeffs.iter().map(|c| c.times(s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            prefactor_eighths: self.prefactor_eighths,
            coeffs: self.coeffs.iter().map(C::negated).collect(),
        }
    }

    /// Multiplicative inverse to the same order; the prefactor is negated.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let lead_inv = self.coeffs[0].inverse().ok_or(AlgebraError::NonInvertibleLeading)?;
        let k = self.order();
        let mut out: Vec<C> = Vec::with_capacity(k + 1);
        out.push(lead_inv.clone());
        for n in 1..=k {
            let mut acc = C::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[j].times(&out[n - j]));
            }
            out.push(acc.times(&lead_inv).negated());
        }
        Ok(QSeries { prefactor_eighths: -self.prefactor_eighths, coeffs: out })
    }

    /// `self / rhs`, truncated to the smaller order.
    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&rhs.inverse()?))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries { prefactor_eighths: self.prefactor_eighths, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Sums the series numerically at `τ`, each coefficient evaluated by
    /// `value`. `q^{1/8}` is taken as `e^{πiτ/4}`.
    pub fn eval_with(&self, tau: Complex64, value: impl Fn(&C) -> Complex64) -> Complex64 {
        let i_pi = Complex64::new(0.0, core::f64::consts::PI);
        let q_half = (i_pi * tau).exp();
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * q_half + value(c);
        }
        acc * (i_pi * tau * (self.prefactor_eighths as f64 / 4.0)).exp()
    }
}

impl QSeries<Complex64> {
    pub fn eval(&self, tau: Complex64) -> Complex64 {
        self.eval_with(tau, |c| *c)
    }

    /// Largest coefficientwise distance over the common orders.
    pub fn max_coeff_distance(&self, rhs: &Self) -> f64 {
        self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}
