//! Exact numbers `p + q·√d` with rational `p`, `q` and a square-free radicand `d`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `Q[√d]`.
///
/// The representation is normalized: whenever the irrational part is zero the
/// radicand is stored as 0, so structural equality coincides with numeric
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    rational: BigRational,
    irrational: BigRational,
    radicand: u64,
}

/// Returns true when `d` is 0 or a square-free integer greater than 1.
pub fn is_valid_radicand(d: u64) -> bool {
    if d == 0 {
        return true;
    }
    if d == 1 {
        return false;
    }
    let mut n = d;
    let mut f = 2u64;
    while f.saturating_mul(f) <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return false;
            }
        }
        f += 1;
    }
    true
}

impl QuadExt {
    pub fn new(rational: BigRational, irrational: BigRational, radicand: u64) -> Result<Self> {
        if !is_valid_radicand(radicand) {
            return Err(Error::InvalidRadicand(radicand));
        }
        if radicand == 0 && !irrational.is_zero() {
            return Err(Error::InvalidRadicand(0));
        }
        Ok(Self::normalized(rational, irrational, radicand))
    }

    fn normalized(rational: BigRational, irrational: BigRational, radicand: u64) -> Self {
        if irrational.is_zero() {
            QuadExt {
                rational,
                irrational,
                radicand: 0,
            }
        } else {
            QuadExt {
                rational,
                irrational,
                radicand,
            }
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        QuadExt {
            rational: r,
            irrational: BigRational::zero(),
            radicand: 0,
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// `q·√d`.
    pub fn sqrt_multiple(q: BigRational, radicand: u64) -> Result<Self> {
        Self::new(BigRational::zero(), q, radicand)
    }

    /// `√d`.
    pub fn sqrt(radicand: u64) -> Result<Self> {
        Self::sqrt_multiple(BigRational::one(), radicand)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.irrational
    }

    /// Radicand of the irrational part; 0 when the value is rational.
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.irrational.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.rational.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.rational.to_integer())
    }

    /// Exact sign, decided by comparing `p²` with `d·q²` when the parts disagree.
    pub fn signum(&self) -> Ordering {
        let ps = sign_of(&self.rational);
        let qs = sign_of(&self.irrational);
        match (ps, qs) {
            (p, Ordering::Equal) => p,
            (Ordering::Equal, q) => q,
            (p, q) if p == q => p,
            (p, q) => {
                let p2 = &self.rational * &self.rational;
                let dq2 = &self.irrational
                    * &self.irrational
                    * BigRational::from_integer(BigInt::from(self.radicand));
                // p² = d·q² would make d a rational square, which normalization rules out.
                if p2 > dq2 {
                    p
                } else {
                    q
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    fn joint_radicand(&self, other: &Self) -> u64 {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("{}", Error::MixedRadicands(d, e)),
        }
    }

    /// Radicand shared by both operands, or an error if they live in different fields.
    pub fn compatible_radicand(&self, other: &Self) -> Result<u64> {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::MixedRadicands(d, e)),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::normalized(&self.rational * k, &self.irrational * k, self.radicand)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Floating-point approximation, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let p = self.rational.to_f64().unwrap_or(f64::NAN);
        let q = self.irrational.to_f64().unwrap_or(f64::NAN);
        p + q * (self.radicand as f64).sqrt()
    }
}

fn sign_of(r: &BigRational) -> Ordering {
    if r.is_positive() {
        Ordering::Greater
    } else if r.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        let d = self.joint_radicand(rhs);
        QuadExt::normalized(
            &self.rational + &rhs.rational,
            &self.irrational + &rhs.irrational,
            d,
        )
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        &self + &rhs
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        let d = self.joint_radicand(rhs);
        QuadExt::normalized(
            &self.rational - &rhs.rational,
            &self.irrational - &rhs.irrational,
            d,
        )
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        &self - &rhs
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::normalized(-self.rational, -self.irrational, self.radicand)
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let d = self.joint_radicand(rhs);
        let dr = BigRational::from_integer(BigInt::from(d));
        let p = &self.rational * &rhs.rational + &self.irrational * &rhs.irrational * dr;
        let q = &self.rational * &rhs.irrational + &self.irrational * &rhs.rational;
        QuadExt::normalized(p, q, d)
    }
}

impl Mul<&BigInt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &BigInt) -> QuadExt {
        self.scale_int(rhs)
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by numeric value.
///
/// Panics when both operands carry different non-zero radicands.
impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl From<BigInt> for QuadExt {
    fn from(n: BigInt) -> Self {
        QuadExt::from_integer(n)
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::from_integer(n)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats as `p+q*sqrt(d)`, omitting zero parts and unit coefficients.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fmt_rational(&self.rational));
        }
        let q = &self.irrational;
        let mut out = String::new();
        if !self.rational.is_zero() {
            out.push_str(&fmt_rational(&self.rational));
            if q.is_positive() {
                out.push('+');
            }
        }
        if q.is_one() {
        } else if *q == -BigRational::one() {
            out.push('-');
        } else {
            out.push_str(&fmt_rational(q));
            out.push('*');
        }
        out.push_str(&format!("sqrt({})", self.radicand));
        f.write_str(&out)
    }
}
