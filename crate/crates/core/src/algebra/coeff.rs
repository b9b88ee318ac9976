//! Scalar coefficients for the observable algebra.
//!
//! Coefficients stay exact (Gaussian rationals over 128-bit integers) as long
//! as the inputs are exact — integers, fractions, finite decimals and the
//! imaginary unit all parse to the exact arm. Anything built from a raw
//! float lives in the approximate arm, and arithmetic mixing the two
//! promotes to approximate. Equality between exact values is exact; as soon
//! as one side is approximate it is absolute within [`crate::tol::COEFF_EQ`].

use crate::tol;
use num_complex::Complex64;
use num_rational::Ratio;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

type Rat = Ratio<i128>;

/// An exact complex number with rational real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussianRational {
    pub const fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(Rat::from_integer(n as i128), Rat::from_integer(0))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rat::from_integer(0), Rat::from_integer(1))
    }

    pub fn is_zero(&self) -> bool {
        self.re == Rat::from_integer(0) && self.im == Rat::from_integer(0)
    }

    pub fn to_complex(self) -> Complex64 {
        let part = |r: Rat| *r.numer() as f64 / *r.denom() as f64;
        Complex64::new(part(self.re), part(self.im))
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

fn fmt_rat(r: Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if *r.denom() == 1 {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Rat::from_integer(0);
        match (self.re == zero, self.im == zero) {
            (_, true) => fmt_rat(self.re, f),
            (true, false) => {
                if self.im == Rat::from_integer(1) {
                    write!(f, "i")
                } else if self.im == Rat::from_integer(-1) {
                    write!(f, "-i")
                } else {
                    fmt_rat(self.im, f)?;
                    write!(f, "i")
                }
            }
            (false, false) => {
                write!(f, "(")?;
                fmt_rat(self.re, f)?;
                if self.im > zero {
                    write!(f, " + ")?;
                    fmt_rat(self.im, f)?;
                } else {
                    write!(f, " - ")?;
                    fmt_rat(-self.im, f)?;
                }
                write!(f, "i)")
            }
        }
    }
}

/// A coefficient: exact Gaussian rational, or double-precision complex.
#[derive(Debug, Clone, Copy)]
pub enum Coeff {
    Exact(GaussianRational),
    Approx(Complex64),
}

impl Coeff {
    pub fn one() -> Self {
        Coeff::Exact(GaussianRational::one())
    }

    pub fn zero() -> Self {
        Coeff::Exact(GaussianRational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        Coeff::Exact(GaussianRational::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Exact(g) => g.is_zero(),
            Coeff::Approx(c) => c.re == 0.0 && c.im == 0.0,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Coeff::Exact(g) => g.to_complex(),
            Coeff::Approx(c) => *c,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Coeff::Exact(_))
    }
}

impl From<Complex64> for Coeff {
    fn from(c: Complex64) -> Self {
        Coeff::Approx(c)
    }
}

impl From<GaussianRational> for Coeff {
    fn from(g: GaussianRational) -> Self {
        Coeff::Exact(g)
    }
}

impl Add for Coeff {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a + b),
            (a, b) => Coeff::Approx(a.to_complex() + b.to_complex()),
        }
    }
}

impl Sub for Coeff {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Coeff {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a * b),
            (a, b) => Coeff::Approx(a.to_complex() * b.to_complex()),
        }
    }
}

impl Neg for Coeff {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            Coeff::Exact(g) => Coeff::Exact(-g),
            Coeff::Approx(c) => Coeff::Approx(-c),
        }
    }
}

impl PartialEq for Coeff {
    /// Exact when both sides are exact, otherwise absolute within
    /// [`tol::COEFF_EQ`]. Not transitive across the exact/approx boundary.
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coeff::Exact(a), Coeff::Exact(b)) => a == b,
            (a, b) => (a.to_complex() - b.to_complex()).norm() <= tol::COEFF_EQ,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Exact(g) => write!(f, "{g}"),
            Coeff::Approx(c) => {
                if c.im == 0.0 {
                    write!(f, "{}", c.re)
                } else if c.re == 0.0 {
                    write!(f, "{}i", c.im)
                } else if c.im > 0.0 {
                    write!(f, "({} + {}i)", c.re, c.im)
                } else {
                    write!(f, "({} - {}i)", c.re, -c.im)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_product() {
        // (1 + 2i)(3 - i) = 5 + 5i
        let a = GaussianRational::new(Rat::from_integer(1), Rat::from_integer(2));
        let b = GaussianRational::new(Rat::from_integer(3), Rat::from_integer(-1));
        let p = a * b;
        assert_eq!(p, GaussianRational::new(Rat::from_integer(5), Rat::from_integer(5)));
    }

    #[test]
    fn exact_equality_is_exact() {
        let third = Coeff::Exact(GaussianRational::new(Rat::new(1, 3), Rat::from_integer(0)));
        let almost = Coeff::Approx(Complex64::new(1.0 / 3.0, 0.0));
        assert_eq!(third, third);
        // Mixed comparison falls back to the tolerance.
        assert_eq!(third, almost);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Coeff::from_integer(-3).to_string(), "-3");
        let half = GaussianRational::new(Rat::new(1, 2), Rat::from_integer(0));
        assert_eq!(Coeff::Exact(half).to_string(), "1/2");
        assert_eq!(Coeff::Exact(GaussianRational::i()).to_string(), "i");
        let mixed = GaussianRational::new(Rat::new(1, 2), Rat::new(-3, 4));
        assert_eq!(Coeff::Exact(mixed).to_string(), "(1/2 - 3/4i)");
    }
}
