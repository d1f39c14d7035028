use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::point::LatticePoint;
use super::quad::QuadExt;
use crate::error::{Error, Result};

/// A linear form `L(x, y) = a·x + b·y` with coefficients in `Q[√d]`.
///
/// Forms with rational coefficients are rescaled by a positive factor to
/// coprime integers at construction; positive rescaling does not change which
/// pairs the form chooses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GuidingForm {
    a: QuadExt,
    b: QuadExt,
}

impl GuidingForm {
    pub fn new(a: QuadExt, b: QuadExt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroForm);
        }
        a.compatible_radicand(&b)?;
        if a.is_rational() && b.is_rational() {
            let (p, q) = clear_to_coprime(a.rational_part(), b.rational_part());
            return Ok(GuidingForm {
                a: QuadExt::from_integer(p),
                b: QuadExt::from_integer(q),
            });
        }
        Ok(GuidingForm { a, b })
    }

    pub fn integer(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        Self::new(QuadExt::from_integer(a), QuadExt::from_integer(b))
    }

    pub fn rational(a: BigRational, b: BigRational) -> Result<Self> {
        Self::new(QuadExt::from_rational(a), QuadExt::from_rational(b))
    }

    /// `L(x, y) = y`.
    pub fn vertical() -> Self {
        GuidingForm {
            a: QuadExt::zero(),
            b: QuadExt::from_integer(1),
        }
    }

    pub fn a(&self) -> &QuadExt {
        &self.a
    }

    pub fn b(&self) -> &QuadExt {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.a.radicand().max(self.b.radicand())
    }

    pub fn is_vertical(&self) -> bool {
        self.a.is_zero() && self.b == QuadExt::from_integer(1)
    }

    /// The coprime integer coefficients, when the form has no irrational part.
    pub fn integer_coefficients(&self) -> Option<(BigInt, BigInt)> {
        Some((self.a.to_integer()?, self.b.to_integer()?))
    }

    pub fn eval(&self, g: &LatticePoint) -> QuadExt {
        &(&self.a * &g.x) + &(&self.b * &g.y)
    }
}

fn clear_to_coprime(a: &BigRational, b: &BigRational) -> (BigInt, BigInt) {
    let den = a.denom().lcm(b.denom());
    let p = a.numer() * (&den / a.denom());
    let q = b.numer() * (&den / b.denom());
    let g = p.gcd(&q);
    (p / &g, q / &g)
}

/// `L(g)`, the L-value of `g`.
pub fn eval_form(l: &GuidingForm, g: &LatticePoint) -> QuadExt {
    l.eval(g)
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: &QuadExt, var: &str, first: bool) -> fmt::Result {
    if c.is_zero() {
        return Ok(());
    }
    if !first {
        f.write_str(if c.is_negative() && c.is_rational() {
            " - "
        } else {
            " + "
        })?;
    }
    let shown = if !first && c.is_negative() && c.is_rational() {
        c.abs()
    } else {
        c.clone()
    };
    if shown.is_rational() && shown.rational_part().is_one() {
    } else if shown.is_rational() && *shown.rational_part() == -BigRational::one() {
        f.write_str("-")?;
    } else if shown.is_rational() || shown.rational_part().is_zero() {
        write!(f, "{shown}*")?;
    } else {
        write!(f, "({shown})*")?;
    }
    f.write_str(var)
}

impl fmt::Display for GuidingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_term(f, &self.a, "x", true)?;
        fmt_term(f, &self.b, "y", self.a.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt3() -> QuadExt {
        QuadExt::sqrt_multiple(BigRational::one(), 3).unwrap()
    }

    #[test]
    fn integer_forms_are_made_coprime() {
        let l = GuidingForm::integer(4, -6).unwrap();
        assert_eq!(l.integer_coefficients(), Some((2.into(), (-3).into())));
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let l = GuidingForm::rational(half, third).unwrap();
        assert_eq!(l.integer_coefficients(), Some((3.into(), 2.into())));
        assert_eq!(GuidingForm::integer(0, 0), Err(Error::ZeroForm));
    }

    #[test]
    fn eval_examples() {
        let y = GuidingForm::vertical();
        assert_eq!(y.eval(&LatticePoint::new(2, 1)), QuadExt::from_integer(1));

        let l2 = GuidingForm::new(sqrt3(), QuadExt::from_integer(1)).unwrap();
        let at = |x: i64, yy: i64| l2.eval(&LatticePoint::new(x, yy));
        assert_eq!(at(0, 2), QuadExt::from_integer(2));
        // sqrt(3) + 1 > 2, and gamma_2 = (2,1) has the larger value 2*sqrt(3) + 1
        assert!(at(0, 2) < at(1, 1));
        assert!(at(0, 2) < at(2, 1));
        assert!(at(1, 0) < at(0, 2));
        assert!(at(0, 0).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(GuidingForm::vertical().to_string(), "y");
        assert_eq!(GuidingForm::integer(1, -2).unwrap().to_string(), "x - 2*y");
        let l2 = GuidingForm::new(sqrt3(), QuadExt::from_integer(1)).unwrap();
        assert_eq!(l2.to_string(), "sqrt(3)*x + y");
    }
}
