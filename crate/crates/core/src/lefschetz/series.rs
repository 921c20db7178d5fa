use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{validate_fixture, ManifoldFixture};
use crate::exact::{GaussRat, LaurentPoly, QSeries, RatFun};
use crate::theta::{bundle_factor, local_factor, Flavor, LocalFactor};
use crate::FixtureError;

fn kappa_exact(lambda: Flavor, l: usize) -> GaussRat {
    match lambda {
        Flavor::One => GaussRat::new(BigRational::from_integer(BigInt::one() << l), BigRational::zero()),
        _ => GaussRat::one(),
    }
}

/// Exact `L_λ` to order `q^{K/2}`, one canonical rational function per order.
///
/// Each component contributes `(Σ_μ Πᵢ Nᵢ^μ)·Πⱼ G_λ / Πᵢ (z^{nᵢ} − z^{−nᵢ})`
/// where `Nᵢ^μ` is the numerator series of `F_μ(nᵢ)`.
pub fn lefschetz_qexpansion(lambda: Flavor, f: &ManifoldFixture, order: usize) -> Result<QSeries<RatFun>, FixtureError> {
    let f = validate_fixture(f)?;
    let mut tangent: BTreeMap<(u8, i64), LocalFactor> = BTreeMap::new();
    let mut bundle: BTreeMap<i64, QSeries<LaurentPoly>> = BTreeMap::new();
    let kappa = LaurentPoly::constant(kappa_exact(lambda, f.l));

    let mut total = alloc::vec![RatFun::zero(); order + 1];
    for comp in &f.components {
        let mut den = LaurentPoly::one();
        let mut sum = QSeries::<LaurentPoly>::zero(order);
        for mu in Flavor::ALL {
            let mut prod = QSeries::<LaurentPoly>::one(order);
            for &n in &comp.tangent_weights {
                let lf = tangent
                    .entry((mu.index(), n))
                    .or_insert_with(|| local_factor(mu, n, order).expect("validated weights are nonzero"));
                prod = prod.mul(&lf.numerator);
            }
            sum = sum.add(&prod).expect("prefactors are zero");
        }
        for &n in &comp.tangent_weights {
            den = &den * &LaurentPoly::sin_pair(n);
        }
        for &m in &comp.bundle_weights {
            let g = bundle.entry(m).or_insert_with(|| bundle_factor(lambda, m, order));
            sum = sum.mul(g);
        }
        let sign = LaurentPoly::constant(GaussRat::from_int(comp.sign));
        let sum = sum.scale(&(&kappa * &sign));
        for (k, num) in sum.coeffs().iter().enumerate() {
            if num.is_zero() {
                continue;
            }
            let term = RatFun::new(num.clone(), den.clone()).expect("nonzero denominator");
            total[k] = total[k].add(&term);
        }
    }
    Ok(QSeries::new(0, total))
}

/// Verdict for one q-order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderVerdict {
    pub k: usize,
    pub coefficient: RatFun,
    pub is_laurent: bool,
    pub is_constant: bool,
    pub constant_value: Option<GaussRat>,
    /// Whether the constant is a rational integer; `false` when not constant.
    pub constant_is_integer: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub orders: Vec<OrderVerdict>,
}

impl RigidityReport {
    pub fn all_constant(&self) -> bool {
        self.orders.iter().all(|o| o.is_constant)
    }

    pub fn all_laurent(&self) -> bool {
        self.orders.iter().all(|o| o.is_laurent)
    }

    /// First order that is not constant, if any.
    pub fn first_failure(&self) -> Option<&OrderVerdict> {
        self.orders.iter().find(|o| !o.is_constant)
    }
}

/// Per-order Laurent and constancy tests on a canonical series.
pub fn rigidity_check(series: &QSeries<RatFun>) -> RigidityReport {
    let orders = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let is_laurent = r.is_laurent_polynomial();
            let constant_value = r.as_constant();
            OrderVerdict {
                k,
                coefficient: r.clone(),
                is_laurent,
                is_constant: constant_value.is_some(),
                constant_is_integer: constant_value.as_ref().is_some_and(GaussRat::is_rational_integer),
                constant_value,
            }
        })
        .collect();
    RigidityReport { orders }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::FixedPointComponent;
    use alloc::string::ToString;
    use alloc::vec;

    fn fixture(d: usize, l: usize, comps: Vec<FixedPointComponent>) -> ManifoldFixture {
        ManifoldFixture { name: "f".into(), d, l, components: comps }
    }

    fn s2() -> ManifoldFixture {
        fixture(1, 0, vec![FixedPointComponent::new(1, vec![1], vec![]), FixedPointComponent::new(1, vec![-1], vec![])])
    }

    fn onepoint() -> ManifoldFixture {
        fixture(1, 0, vec![FixedPointComponent::new(1, vec![1], vec![])])
    }

    #[test]
    fn zero_series_is_constant_zero() {
        let report = rigidity_check(&QSeries::<RatFun>::zero(3));
        assert!(report.all_constant());
        for o in &report.orders {
            assert_eq!(o.constant_value, Some(GaussRat::zero()));
            assert!(o.constant_is_integer);
        }
    }

    #[test]
    fn s2_vanishes() {
        for lambda in Flavor::ALL {
            let s = lefschetz_qexpansion(lambda, &s2(), 6).unwrap();
            assert!(s.is_zero());
            assert!(rigidity_check(&s).all_constant());
        }
    }

    #[test]
    fn onepoint_leading_coefficient() {
        let s = lefschetz_qexpansion(Flavor::Two, &onepoint(), 2).unwrap();
        // 2i(z+z⁻¹+4)/(z−z⁻¹)
        let num = LaurentPoly::from_terms([(1, GaussRat::from_ints(0, 2)), (0, GaussRat::from_ints(0, 8)), (-1, GaussRat::from_ints(0, 2))]);
        let expected = RatFun::new(num, LaurentPoly::sin_pair(1)).unwrap();
        assert_eq!(s.coeff(0), &expected);
        let report = rigidity_check(&s);
        assert!(!report.orders[0].is_laurent);
        assert_eq!(report.first_failure().unwrap().k, 0);
        assert_eq!(s.coeff(0).to_string(), "(-2i*z^2-8i*z-2i)/(-z^2+1)");
    }

    #[test]
    fn flavors_agree_without_bundle() {
        let f = fixture(2, 0, vec![FixedPointComponent::new(1, vec![1, 2], vec![]), FixedPointComponent::new(-1, vec![1, -3], vec![])]);
        let one = lefschetz_qexpansion(Flavor::One, &f, 4).unwrap();
        assert_eq!(one, lefschetz_qexpansion(Flavor::Two, &f, 4).unwrap());
        assert_eq!(one, lefschetz_qexpansion(Flavor::Three, &f, 4).unwrap());
    }

    #[test]
    fn sign_and_weight_flip_is_invisible() {
        let f = fixture(2, 1, vec![FixedPointComponent::new(1, vec![1, 2], vec![1]), FixedPointComponent::new(1, vec![2, -3], vec![0])]);
        let mut g = f.clone();
        g.components[1].tangent_weights[0] = -2;
        g.components[1].sign = -1;
        for lambda in Flavor::ALL {
            assert_eq!(lefschetz_qexpansion(lambda, &f, 3).unwrap(), lefschetz_qexpansion(lambda, &g, 3).unwrap());
        }
    }

    #[test]
    fn invalid_fixture_is_rejected() {
        let mut f = s2();
        f.components[0].tangent_weights[0] = 0;
        assert!(lefschetz_qexpansion(Flavor::One, &f, 1).is_err());
    }
}
