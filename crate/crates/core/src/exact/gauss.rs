use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Coefficient;
use crate::AlgebraError;

/// An exact Gaussian rational `re + im·𝕚`.
///
/// Both parts are kept in lowest terms with positive denominators, which
/// `BigRational` guarantees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// `a op b`, with division by zero reported rather than panicking.
pub fn scalar_arith(a: &GaussRat, b: &GaussRat, op: ScalarOp) -> Result<GaussRat, AlgebraError> {
    Ok(match op {
        ScalarOp::Add => a + b,
        ScalarOp::Sub => a - b,
        ScalarOp::Mul => a * b,
        ScalarOp::Div => a.checked_div(b)?,
    })
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// `re + im·𝕚` with integer parts.
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// `num/den` as a real Gaussian rational. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        GaussRat {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat::from_ints(0, 1)
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for rational integers (imaginary part zero, integral real part).
    pub fn is_rational_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    /// `|a|²`, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &GaussRat) -> Result<GaussRat, AlgebraError> {
        let inv = rhs.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

fn rat_to_f64(r: &BigRational) -> f64 {
    if let Some(x) = r.to_f64() {
        return x;
    }
    // Huge numerators and denominators: scale both down before dividing.
    let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
    n / d
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRat { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        &self + &rhs
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        &self - &rhs
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        &self * &rhs
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

impl Coefficient for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
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
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

fn fmt_rat(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats as `a`, `bi`, or `(a+bi)`; fractions as `p/q`.
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rat(&self.re, f),
            (true, false) => {
                fmt_rat(&self.im, f)?;
                f.write_str("i")
            }
            (false, false) => {
                f.write_str("(")?;
                fmt_rat(&self.re, f)?;
                f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
                fmt_rat(&self.im.abs(), f)?;
                f.write_str("i)")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussRat {
        GaussRat::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    #[test]
    fn conjugate_sum() {
        let a = g((1, 2), (1, 1));
        let b = g((1, 2), (-1, 1));
        assert_eq!(scalar_arith(&a, &b, ScalarOp::Add).unwrap(), GaussRat::one());
    }

    #[test]
    fn i_squared() {
        let i = GaussRat::i();
        assert_eq!(scalar_arith(&i, &i, ScalarOp::Mul).unwrap(), GaussRat::from_int(-1));
    }

    #[test]
    fn division_by_conjugate() {
        let a = GaussRat::from_ints(1, 1);
        let b = GaussRat::from_ints(1, -1);
        assert_eq!(scalar_arith(&a, &b, ScalarOp::Div).unwrap(), GaussRat::i());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = GaussRat::from_ints(1, 1);
        assert_eq!(
            scalar_arith(&a, &GaussRat::zero(), ScalarOp::Div),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form() {
        let a = g((2, 4), (-3, -6));
        assert_eq!(a.re, BigRational::new(1.into(), 2.into()));
        assert_eq!(*a.im.denom(), BigInt::from(2));
        assert_eq!(a.to_string(), "(1/2+1/2i)");
    }

    #[test]
    fn display() {
        assert_eq!(GaussRat::from_ints(0, -2).to_string(), "-2i");
        assert_eq!(GaussRat::ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(GaussRat::from_ints(1, -1).to_string(), "(1-1i)");
    }
}
