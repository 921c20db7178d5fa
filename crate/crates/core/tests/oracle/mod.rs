//! Brute-force expansion of isolated fixed-point terms straight from the
//! symmetric/exterior power product formulas
//!
//! ```text
//! (sin πx/π)·θ′/θ(x)   = Π (1−qʳ)² / ((1−qʳy)(1−qʳ/y))
//! θ₁(x)/(cos πx·θ₁(0)) = Π (1+qʳy)(1+qʳ/y) / (1+qʳ)²
//! θ₂(x)/θ₂(0)          = Π (1−q^{r−½}y)(1−q^{r−½}/y) / (1−q^{r−½})²
//! θ₃(x)/θ₃(0)          = Π (1+q^{r−½}y)(1+q^{r−½}/y) / (1+q^{r−½})²
//! ```
//!
//! with `y = z^{2n}`. Every factor is expanded as a geometric or binomial
//! series with integer coefficients; no theta series and no series
//! division are involved. Standalone so other crates' tests can include it.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Laurent polynomial in `z` with integer coefficients.
pub type Poly = BTreeMap<i64, i128>;

/// Truncated series in `q^{1/2}`: entry `k` is the coefficient of `q^{k/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series(pub Vec<Poly>);

fn monomial(c: i128, e: i64) -> Poly {
    let mut p = Poly::new();
    if c != 0 {
        p.insert(e, c);
    }
    p
}

pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (&e, &c) in b {
        let v = out.entry(e).or_insert(0);
        *v = v.checked_add(c).expect("oracle overflow");
        if *v == 0 {
            out.remove(&e);
        }
    }
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            let v = out.entry(ea + eb).or_insert(0);
            *v = v.checked_add(ca.checked_mul(cb).expect("oracle overflow")).expect("oracle overflow");
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_scale(a: &Poly, s: i128) -> Poly {
    a.iter().filter(|_| s != 0).map(|(&e, &c)| (e, c * s)).collect()
}

impl Series {
    pub fn one(order: usize) -> Self {
        let mut v = vec![Poly::new(); order + 1];
        v[0] = monomial(1, 0);
        Series(v)
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![Poly::new(); order + 1];
        for (i, a) in self.0.iter().enumerate().take(order + 1) {
            if a.is_empty() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate().take(order + 1 - i) {
                out[i + j] = poly_add(&out[i + j], &poly_mul(a, b));
            }
        }
        Series(out)
    }

    pub fn add(&self, rhs: &Series) -> Series {
        Series(self.0.iter().zip(&rhs.0).map(|(a, b)| poly_add(a, b)).collect())
    }

    pub fn scale_poly(&self, p: &Poly) -> Series {
        Series(self.0.iter().map(|a| poly_mul(a, p)).collect())
    }

    /// `Σⱼ coef(j)·q^{j·e/2}·z^{j·a}`.
    fn from_powers(order: usize, e: usize, a: i64, coef: impl Fn(i128) -> i128) -> Series {
        let mut v = vec![Poly::new(); order + 1];
        let mut j = 0usize;
        while j * e <= order {
            v[j * e] = monomial(coef(j as i128), j as i64 * a);
            j += 1;
        }
        Series(v)
    }

    /// `1 + s·q^{e/2}·z^a`
    fn linear(order: usize, e: usize, s: i128, a: i64) -> Series {
        let mut v = Series::one(order);
        if e <= order {
            v.0[e] = poly_add(&v.0[e], &monomial(s, a));
        }
        v
    }

    /// `1/(1 − s·q^{e/2}·z^a)`
    fn geometric(order: usize, e: usize, s: i128, a: i64) -> Series {
        Series::from_powers(order, e, a, |j| s.pow(j as u32))
    }

    /// `1/(1 − s·q^{e/2})²`
    fn inverse_square(order: usize, e: usize, s: i128) -> Series {
        Series::from_powers(order, e, 0, |j| (j + 1) * s.pow(j as u32))
    }

    /// `(1 − q^{e/2})²`
    fn square(order: usize, e: usize) -> Series {
        let mut v = Series::one(order);
        for (k, c) in [(e, -2), (2 * e, 1)] {
            if k <= order {
                v.0[k] = monomial(c, 0);
            }
        }
        v
    }
}

/// `(sin πx/π)·θ′/θ(x)` at `y = z^{2n}`.
pub fn s_int(n: i64, order: usize) -> Series {
    let mut acc = Series::one(order);
    let mut e = 2;
    while e <= order {
        acc = acc
            .mul(&Series::square(order, e))
            .mul(&Series::geometric(order, e, 1, 2 * n))
            .mul(&Series::geometric(order, e, 1, -2 * n));
        e += 2;
    }
    acc
}

/// The ratio `R_μ` at `y = z^{2n}`, trigonometric prefactor excluded.
pub fn r_mu(mu: u8, n: i64, order: usize) -> Series {
    let (first, s) = match mu {
        1 => (2, 1),
        2 => (1, -1),
        3 => (1, 1),
        _ => panic!("flavor out of range"),
    };
    let mut acc = Series::one(order);
    let mut e = first;
    while e <= order {
        acc = acc
            .mul(&Series::linear(order, e, s, 2 * n))
            .mul(&Series::linear(order, e, s, -2 * n))
            .mul(&Series::inverse_square(order, e, -s));
        e += 2;
    }
    acc
}

/// `P_μ(n)` with `F_μ(n) = 𝕚·P_μ(n)/(zⁿ − z⁻ⁿ)`.
pub fn tangent_numerator(mu: u8, n: i64, order: usize) -> Series {
    let front = match mu {
        1 => poly_add(&monomial(2, n), &monomial(2, -n)),
        _ => monomial(4, 0),
    };
    s_int(n, order).mul(&r_mu(mu, n, order)).scale_poly(&front)
}

/// `κ_λ^{1/ℓ}·G_λ(m)`: `(zᵐ + z⁻ᵐ)·R₁` for `λ = 1`, `R_λ` otherwise.
pub fn bundle_numerator(lambda: u8, m: i64, order: usize) -> Series {
    let r = r_mu(lambda, m, order);
    if lambda == 1 {
        r.scale_poly(&poly_add(&monomial(1, m), &monomial(1, -m)))
    } else {
        r
    }
}

pub struct Comp {
    pub sign: i64,
    pub tangent: Vec<i64>,
    pub bundle: Vec<i64>,
}

impl Comp {
    pub fn new(sign: i64, tangent: &[i64], bundle: &[i64]) -> Self {
        Comp { sign, tangent: tangent.to_vec(), bundle: bundle.to_vec() }
    }
}

/// Verdict for one q-order: `L_k = 𝕚^d·p/q` or not constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOrder {
    Constant { num: i128, den: i128, i_power: u32 },
    NotConstant,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Component numerator `ε·Σ_μ Πᵢ P_μ(nᵢ)·Πⱼ B_λ(mⱼ)` and denominator `Πᵢ (z^{nᵢ} − z^{−nᵢ})`.
pub fn component(c: &Comp, lambda: u8, order: usize) -> (Series, Poly) {
    let mut sum: Option<Series> = None;
    for mu in 1..=3u8 {
        let mut prod = Series::one(order);
        for &n in &c.tangent {
            prod = prod.mul(&tangent_numerator(mu, n, order));
        }
        sum = Some(match sum {
            None => prod,
            Some(s) => s.add(&prod),
        });
    }
    let mut num = sum.expect("three flavors");
    for &m in &c.bundle {
        num = num.mul(&bundle_numerator(lambda, m, order));
    }
    let num = num.scale_poly(&monomial(c.sign as i128, 0));
    let den = c
        .tangent
        .iter()
        .fold(monomial(1, 0), |acc, &n| poly_mul(&acc, &poly_add(&monomial(1, n), &monomial(-1, -n))));
    (num, den)
}

/// `Constant` iff `total = (p/q)·den` exactly.
pub fn constant_ratio(total: &Poly, den: &Poly, i_power: u32) -> OracleOrder {
    if total.is_empty() {
        return OracleOrder::Constant { num: 0, den: 1, i_power };
    }
    let (&top, &t_lead) = total.iter().next_back().expect("nonzero");
    let (&dtop, &d_lead) = den.iter().next_back().expect("nonzero");
    if top != dtop {
        return OracleOrder::NotConstant;
    }
    let g = gcd(t_lead, d_lead);
    let (mut p, mut q) = (t_lead / g, d_lead / g);
    if q < 0 {
        p = -p;
        q = -q;
    }
    if poly_scale(total, q) == poly_scale(den, p) {
        OracleOrder::Constant { num: p, den: q, i_power }
    } else {
        OracleOrder::NotConstant
    }
}

/// Decides per order whether `Σ_α N_α/D_α` is constant in `z`, by clearing
/// all denominators and comparing against `c·Π D_α`.
pub fn rigidity(d: usize, comps: &[Comp], lambda: u8, order: usize) -> Vec<OracleOrder> {
    let parts: Vec<(Series, Poly)> = comps.iter().map(|c| component(c, lambda, order)).collect();
    let total_den = parts.iter().fold(monomial(1, 0), |acc, (_, den)| poly_mul(&acc, den));
    (0..=order)
        .map(|k| {
            let mut total = Poly::new();
            for (a, (num, _)) in parts.iter().enumerate() {
                let mut term = num.0[k].clone();
                for (b, (_, den)) in parts.iter().enumerate() {
                    if a != b {
                        term = poly_mul(&term, den);
                    }
                }
                total = poly_add(&total, &term);
            }
            constant_ratio(&total, &total_den, (d % 4) as u32)
        })
        .collect()
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn order_zero_numerators() {
        let p2 = tangent_numerator(2, 1, 0);
        assert_eq!(p2.0[0], monomial(4, 0));
        let p1 = tangent_numerator(1, 3, 0);
        assert_eq!(p1.0[0], poly_add(&monomial(2, 3), &monomial(2, -3)));
    }

    #[test]
    fn constant_extraction() {
        let den = poly_add(&monomial(1, 2), &monomial(-1, -2));
        let total = poly_scale(&den, -6);
        assert_eq!(constant_ratio(&total, &poly_scale(&den, 4), 1), OracleOrder::Constant { num: -3, den: 2, i_power: 1 });
        let skewed = poly_add(&total, &monomial(1, 0));
        assert_eq!(constant_ratio(&skewed, &den, 0), OracleOrder::NotConstant);
        assert_eq!(constant_ratio(&monomial(1, 1), &den, 0), OracleOrder::NotConstant);
    }

    #[test]
    fn reciprocal_factors() {
        let g = Series::geometric(6, 2, 1, 3).mul(&Series::linear(6, 2, -1, 3));
        assert_eq!(g, Series::one(6));
        let s = Series::inverse_square(6, 1, 1).mul(&Series::square(6, 1));
        assert_eq!(s, Series::one(6));
    }
}
