use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use super::{Coefficient, GaussRat, LaurentPoly};
use crate::AlgebraError;

/// A rational function `num/den` in `z` over `ℚ(𝕚)`, kept in canonical form.
///
/// Canonical form: `gcd(num, den) = 1` in `ℚ(𝕚)[z, z⁻¹]`, every monomial unit
/// is moved into `num`, and `den` is an ordinary polynomial whose `z⁰`
/// coefficient is `1`. Two rational functions are equal iff their canonical
/// forms are identical, so derived `PartialEq` is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    /// Canonicalizes `num/den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let (lo_n, n) = num.to_dense();
        let (lo_d, d) = den.to_dense();
        let g = poly_gcd(&n, &d);
        let (n, d) = if g.len() > 1 { (poly_div_exact(&n, &g), poly_div_exact(&d, &g)) } else { (n, d) };
        // d[0] != 0: d had a nonzero constant term and so does g.
        let lead = d[0].inv().expect("canonical denominator has a nonzero constant term");
        let n: Vec<GaussRat> = n.iter().map(|c| c * &lead).collect();
        let d: Vec<GaussRat> = d.iter().map(|c| c * &lead).collect();
        Ok(RatFun {
            num: LaurentPoly::from_dense(lo_n - lo_d, &n),
            den: LaurentPoly::from_dense(0, &d),
        })
    }

    pub fn zero() -> Self {
        RatFun { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFun::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFun { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: GaussRat) -> Self {
        RatFun::from_laurent(LaurentPoly::constant(c))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the canonical denominator is `1`.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial itself, when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent_polynomial().then_some(&self.num)
    }

    /// The constant value, when this is a Laurent polynomial supported at `z⁰`.
    pub fn as_constant(&self) -> Option<GaussRat> {
        let p = self.as_laurent()?;
        p.is_constant().then(|| p.constant_term())
    }

    pub fn add(&self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &RatFun) -> RatFun {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_laurent(&self.num * &rhs.num);
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }

    pub fn inv(&self) -> Option<RatFun> {
        if self.is_zero() {
            return None;
        }
        Some(RatFun::new(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun, AlgebraError> {
        Ok(self.mul(&rhs.inv().ok_or(AlgebraError::DivisionByZero)?))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_laurent(p)
    }
}

impl Coefficient for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

/// `num` alone when the denominator is 1, otherwise `(num)/(den)`.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// Dense polynomials over ℚ(𝕚): index = degree, no trailing zeros.

fn trim(p: &mut Vec<GaussRat>) {
    while p.last().is_some_and(GaussRat::is_zero) {
        p.pop();
    }
}

/// Remainder of `a` modulo `b` (`b` nonzero, trimmed).
fn poly_rem(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut r: Vec<GaussRat> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("trimmed divisor");
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = &r[r.len() - 1] * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&factor * c);
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn make_monic(p: &[GaussRat]) -> Vec<GaussRat> {
    let inv = p.last().and_then(GaussRat::inv).expect("nonzero polynomial");
    p.iter().map(|c| c * &inv).collect()
}

/// Monic gcd by the Euclidean algorithm.
fn poly_gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        core::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return alloc::vec![GaussRat::one()];
        }
        let r = poly_rem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { make_monic(&r) };
    }
    make_monic(&x)
}

/// `a / b` where `b` is known to divide `a`.
fn poly_div_exact(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut r: Vec<GaussRat> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("trimmed divisor");
    let mut q = alloc::vec![GaussRat::zero(); r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = &r[r.len() - 1] * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&factor * c);
        }
        q[shift] = factor;
        r.pop();
    }
    debug_assert!(r.iter().all(GaussRat::is_zero), "inexact polynomial division");
    q
}
