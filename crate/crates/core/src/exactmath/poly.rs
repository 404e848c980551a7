use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, rational_from_i64, ExactError, Rational};

/// Dense univariate polynomial with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient is
/// always nonzero, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().copied().map(rational_from_i64).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Used where only an upper
    /// bound on the degree matters.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&rational_from_i64(x))
    }

    /// Returns `q` with `q(x) = p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Polynomial {
        // Horner in the ring: q = (...(a_d (x+c) + a_{d-1})(x+c) + ...) + a_0
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // out <- out * (x + c) + a
            let mut next = vec![Rational::zero(); out.len() + 1];
            for (i, o) in out.iter().enumerate() {
                next[i + 1] += o;
                next[i] += o * c;
            }
            next[0] += a;
            out = next;
        }
        Polynomial::from_coeffs(out)
    }

    pub fn shift_i64(&self, c: i64) -> Polynomial {
        self.shift(&rational_from_i64(c))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * rational_from_i64(i as i64))
                .collect(),
        )
    }

    /// Scales to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), ExactError> {
        let dd = divisor.degree().ok_or(ExactError::ZeroPolynomial)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&sd| sd >= dd) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * b;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Monic gcd by the Euclidean algorithm, normalizing each remainder to
    /// monic before the next step. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    /// True iff `gcd(p, p')` is constant, i.e. `p` has no repeated roots.
    pub fn is_squarefree(&self) -> Result<bool, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Renders in the variable `var`, highest degree first, e.g. `2n^2 - 1/2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = abs.to_string();
            let unit = abs.is_one();
            match i {
                0 => out.push_str(&mag),
                _ => {
                    if !unit {
                        if abs.is_integer() {
                            out.push_str(&mag);
                        } else {
                            out.push_str(&format!("({mag})"));
                        }
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Polynomial::from_i64s(&[-1, 1]).eval_i64(1), q(0, 1));
        assert_eq!(Polynomial::zero().eval(&q(7, 3)), q(0, 1));
        let p = Polynomial::from_coeffs(vec![q(1, 2), q(0, 1), q(2, 1)]);
        assert_eq!(p.eval(&q(3, 2)), q(5, 1));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Polynomial::x().shift_i64(-1), Polynomial::from_i64s(&[-1, 1]));
        assert_eq!(Polynomial::from_i64s(&[0, 0, 1]).shift_i64(1), Polynomial::from_i64s(&[1, 2, 1]));
        let p = Polynomial::from_i64s(&[-1, 1]).shift_i64(-1);
        assert_eq!(p, Polynomial::from_i64s(&[-2, 1]));
        for x in 0..=5 {
            assert_eq!(p.eval_i64(x), rational_from_i64(x - 2));
        }
        assert!(Polynomial::zero().shift_i64(3).is_zero());
    }

    #[test]
    fn squarefree_examples() {
        assert!(Polynomial::from_i64s(&[-1, -1, 1]).is_squarefree().unwrap());
        assert!(!Polynomial::from_i64s(&[1, -2, 1]).is_squarefree().unwrap());
        assert!(Polynomial::from_i64s(&[-1, -1, 0, 1]).is_squarefree().unwrap());
        assert_eq!(Polynomial::zero().is_squarefree(), Err(ExactError::ZeroPolynomial));
        // nonzero constants are trivially squarefree
        assert!(Polynomial::from_i64s(&[3]).is_squarefree().unwrap());
        // (x-1)^2 (x+2)
        let p = &Polynomial::from_i64s(&[1, -2, 1]) * &Polynomial::from_i64s(&[2, 1]);
        assert!(!p.is_squarefree().unwrap());
    }

    #[test]
    fn gcd_and_division() {
        let a = &Polynomial::from_i64s(&[-1, 1]) * &Polynomial::from_i64s(&[2, 1]);
        let b = &Polynomial::from_i64s(&[-1, 1]) * &Polynomial::from_i64s(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), Polynomial::from_i64s(&[-1, 1]));
        let (qt, r) = b.div_rem(&a).unwrap();
        assert_eq!(&(&qt * &a) + &r, b);
        assert!(r.degree().unwrap_or(0) < a.degree().unwrap());
        assert!(a.div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn degree_and_canonical_form() {
        assert_eq!(Polynomial::from_i64s(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(Polynomial::from_i64s(&[0, 0]).degree(), None);
        let p = Polynomial::from_i64s(&[1, 2]);
        let r = Polynomial::from_i64s(&[0, 3, 1]);
        assert_eq!((&p * &r).degree(), Some(3));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_i64s(&[-1, 1]).display_in("n"), "n - 1");
        assert_eq!(Polynomial::from_i64s(&[2]).to_string(), "2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let p = Polynomial::from_coeffs(vec![q(-1, 2), q(0, 1), q(-3, 4)]);
        assert_eq!(p.to_string(), "-(3/4)x^2 - 1/2");
    }

    #[test]
    fn serde_as_string_arrays() {
        let p = Polynomial::from_coeffs(vec![q(1, 2), q(0, 1), q(-2, 1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2","0","-2"]"#);
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Polynomial>(r#"["1/0"]"#).is_err());
    }
}
