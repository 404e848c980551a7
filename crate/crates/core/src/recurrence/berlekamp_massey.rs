//! Berlekamp–Massey over the rationals.
//!
//! Given `s_0, ..., s_{N-1}`, finds the shortest connection polynomial
//! `C(x) = 1 + c_1 x + ... + c_L x^L` with `s_i + c_1 s_{i-1} + ... + c_L s_{i-L} = 0`
//! for every `L <= i < N`. If the sequence has a generator of degree `<= N/2`,
//! the returned `L` is its minimal degree.

use num_traits::{One, Zero};

use crate::exactmath::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearComplexity {
    /// Connection polynomial coefficients, `connection[0] = 1`.
    pub connection: Vec<Rational>,
    pub length: usize,
}

pub fn berlekamp_massey(seq: &[Rational]) -> LinearComplexity {
    let mut c = vec![Rational::one()];
    let mut b = vec![Rational::one()];
    let mut length = 0usize;
    let mut gap = 1usize;
    let mut last_discrepancy = Rational::one();

    for n in 0..seq.len() {
        let mut d = seq[n].clone();
        for i in 1..=length {
            if let Some(ci) = c.get(i) {
                d += ci * &seq[n - i];
            }
        }
        if d.is_zero() {
            gap += 1;
            continue;
        }
        let coef = &d / &last_discrepancy;
        let previous = c.clone();
        if c.len() < b.len() + gap {
            c.resize(b.len() + gap, Rational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + gap] -= &coef * bi;
        }
        if 2 * length <= n {
            length = n + 1 - length;
            b = previous;
            last_discrepancy = d;
            gap = 1;
        } else {
            gap += 1;
        }
    }
    c.truncate(length + 1);
    c.resize(length + 1, Rational::zero());
    LinearComplexity { connection: c, length }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational_from_i64 as q;

    fn seq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn fibonacci_has_length_two() {
        let r = berlekamp_massey(&seq(&[1, 1, 2, 3, 5, 8]));
        assert_eq!(r.length, 2);
        assert_eq!(r.connection, seq(&[1, -1, -1]));
    }

    #[test]
    fn geometric_has_length_one() {
        let r = berlekamp_massey(&seq(&[1, 2, 4, 8]));
        assert_eq!(r.length, 1);
        assert_eq!(r.connection, seq(&[1, -2]));
    }

    #[test]
    fn zero_sequence_has_length_zero() {
        assert_eq!(berlekamp_massey(&seq(&[0, 0, 0, 0])).length, 0);
    }

    #[test]
    fn leading_zeros() {
        // 0, 0, 1, 0, 0, 1: satisfies s_i = s_{i-3}; minimal length 3
        assert_eq!(berlekamp_massey(&seq(&[0, 0, 1, 0, 0, 1])).length, 3);
    }

    #[test]
    fn connection_annihilates_the_input() {
        let s = seq(&[1, 1, 2, 4, 7, 13, 24, 44]);
        let r = berlekamp_massey(&s);
        assert_eq!(r.length, 3);
        for i in r.length..s.len() {
            let acc = (0..=r.length).fold(Rational::zero(), |acc, j| acc + &r.connection[j] * &s[i - j]);
            assert!(acc.is_zero());
        }
    }
}
