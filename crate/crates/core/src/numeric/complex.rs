use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_base::SquareRoot;
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;

use crate::exactmath::Rational;

/// Binary floating point with a per-value working precision.
pub type Real = FBig<HalfEven, 2>;

/// `value` rounded to `precision` bits.
pub fn real_from_int(v: i64, precision: usize) -> Real {
    Real::from(v).with_precision(precision).value()
}

pub fn real_from_f64(v: f64, precision: usize) -> Real {
    Real::try_from(v).expect("finite").with_precision(precision).value()
}

pub fn real_from_rational(q: &Rational, precision: usize) -> Real {
    let conv = |b: &num_bigint::BigInt| -> IBig { b.to_string().parse().expect("decimal integer") };
    let n = Real::from(conv(q.numer())).with_precision(precision).value();
    let d = Real::from(conv(q.denom())).with_precision(precision).value();
    n / d
}

/// `2^exp` at the given precision.
pub fn pow2(exp: isize, precision: usize) -> Real {
    Real::from_parts(IBig::from(1), exp).with_precision(precision).value()
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

/// Complex number over [`Real`].
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxComplex {
    pub re: Real,
    pub im: Real,
}

impl ApproxComplex {
    pub fn new(re: Real, im: Real) -> Self {
        Self { re, im }
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_real(real_from_int(0, precision), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::from_real(real_from_int(1, precision), precision)
    }

    pub fn from_real(re: Real, precision: usize) -> Self {
        Self {
            re,
            im: real_from_int(0, precision),
        }
    }

    pub fn from_rational(q: &Rational, precision: usize) -> Self {
        Self::from_real(real_from_rational(q, precision), precision)
    }

    pub fn from_f64s(re: f64, im: f64, precision: usize) -> Self {
        Self {
            re: real_from_f64(re, precision),
            im: real_from_f64(im, precision),
        }
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn abs_f64(&self) -> f64 {
        to_f64(&self.abs())
    }

    pub fn arg_f64(&self) -> f64 {
        to_f64(&self.im).atan2(to_f64(&self.re))
    }

    pub fn re_f64(&self) -> f64 {
        to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        to_f64(&self.im)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }

    /// Integer power by binary powering; negative exponents invert first.
    pub fn powi(&self, k: i64) -> Self {
        let prec = self.precision();
        let base = if k < 0 { self.recip() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(prec);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re_f64(), self.im_f64());
        if im == 0.0 {
            write!(f, "{re}")
        } else if im < 0.0 {
            write!(f, "{re} - {}i", -im)
        } else {
            write!(f, "{re} + {im}i")
        }
    }
}

impl Add<&ApproxComplex> for &ApproxComplex {
    type Output = ApproxComplex;
    fn add(self, rhs: &ApproxComplex) -> ApproxComplex {
        ApproxComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&ApproxComplex> for &ApproxComplex {
    type Output = ApproxComplex;
    fn sub(self, rhs: &ApproxComplex) -> ApproxComplex {
        ApproxComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&ApproxComplex> for &ApproxComplex {
    type Output = ApproxComplex;
    fn mul(self, rhs: &ApproxComplex) -> ApproxComplex {
        ApproxComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&ApproxComplex> for &ApproxComplex {
    type Output = ApproxComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ApproxComplex) -> ApproxComplex {
        self * &rhs.recip()
    }
}

impl Neg for &ApproxComplex {
    type Output = ApproxComplex;
    fn neg(self) -> ApproxComplex {
        ApproxComplex::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = 256;
        let i = ApproxComplex::from_f64s(0.0, 1.0, p);
        let minus_one = &i * &i;
        assert_eq!(minus_one.re_f64(), -1.0);
        assert_eq!(minus_one.im_f64(), 0.0);
        assert_eq!(i.powi(4).re_f64(), 1.0);
        assert_eq!(i.powi(-1).im_f64(), -1.0);
        let z = ApproxComplex::from_f64s(3.0, 4.0, p);
        assert_eq!(z.abs_f64(), 5.0);
        let back = &(&z / &i) * &i;
        assert!((&back - &z).abs_f64() < 1e-70);
    }

    #[test]
    fn rational_conversion_keeps_precision() {
        let third: Rational = "1/3".parse().unwrap();
        let x = real_from_rational(&third, 256);
        let three = real_from_int(3, 256);
        let err = &x * &three - real_from_int(1, 256);
        assert!(to_f64(&err).abs() < 1e-70);
        assert_eq!(to_f64(&pow2(-128, 256)), 2f64.powi(-128));
    }
}
