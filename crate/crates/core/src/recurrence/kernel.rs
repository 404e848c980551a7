//! Ring-generic stepping and companion powering.
//!
//! Instantiated over `Rational` in general and over `BigInt` when the data is
//! integral: `BigRational` normalizes by a gcd after every operation, which
//! dominates the cost once terms have thousands of digits.

use std::collections::VecDeque;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactmath::Rational;

pub(crate) trait Ring: Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
where
    for<'a> &'a Self: Mul<&'a Self, Output = Self>,
{
}

impl Ring for BigInt {}
impl Ring for Rational {}

/// `Some` iff every entry is an integer.
pub(crate) fn integers(xs: &[Rational]) -> Option<Vec<BigInt>> {
    xs.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

/// `numer / denom` in lowest terms. Reduces via `numer mod denom` first so a
/// huge numerator over a small denominator stays cheap.
pub(crate) fn fraction(numer: BigInt, denom: BigInt) -> Rational {
    if denom.is_one() {
        return Rational::from_integer(numer);
    }
    let g = numer.mod_floor(&denom).gcd(&denom);
    let (mut n, mut d) = (numer / &g, denom / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    Rational::new_raw(n, d)
}

/// `sum_i c_i w_i`.
pub(crate) fn dot<T: Ring>(c: &[T], w: impl IntoIterator<Item = impl std::borrow::Borrow<T>>) -> T
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    c.iter()
        .zip(w)
        .fold(T::zero(), |acc, (ci, wi)| acc + ci * wi.borrow())
}

/// Slides `window` (oldest first) `steps` times with `next = sum_i c_i w_i`.
pub(crate) fn step_forward<T: Ring>(c: &[T], window: &mut VecDeque<T>, steps: u64)
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    for _ in 0..steps {
        let next = dot(c, window.iter());
        window.pop_front();
        window.push_back(next);
    }
}

/// Slides `window` backwards: `s_j = (s_{j+m} - a_m s_{j+m-1} - ... - a_2 s_{j+1}) * inv_a1`.
pub(crate) fn step_backward<T: Ring>(a: &[T], inv_a1: &T, window: &mut VecDeque<T>, steps: u64)
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let m = a.len();
    for _ in 0..steps {
        let mut acc = window[m - 1].clone();
        for i in 1..m {
            acc = acc - &a[i] * &window[i - 1];
        }
        window.pop_back();
        window.push_front(&acc * inv_a1);
    }
}

type Square<T> = Vec<Vec<T>>;

fn mat_mul<T: Ring>(x: &Square<T>, y: &Square<T>) -> Square<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let m = x.len();
    (0..m)
        .map(|i| (0..m).map(|j| dot(&x[i], (0..m).map(|k| &y[k][j]))).collect())
        .collect()
}

fn mat_vec<T: Ring>(x: &Square<T>, v: &[T]) -> Vec<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    x.iter().map(|row| dot(row, v.iter())).collect()
}

/// `base^e * state` by binary powering.
pub(crate) fn power_apply<T: Ring>(base: Square<T>, mut e: u64, mut state: Vec<T>) -> Vec<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let mut pow = base;
    while e > 0 {
        if e & 1 == 1 {
            state = mat_vec(&pow, &state);
        }
        e >>= 1;
        if e > 0 {
            pow = mat_mul(&pow, &pow);
        }
    }
    state
}

/// Companion matrix for `next = sum_i a_i w_i` (rows 0-based).
pub(crate) fn companion<T: Ring>(a: &[T]) -> Square<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let m = a.len();
    let mut c = vec![vec![T::zero(); m]; m];
    for i in 0..m - 1 {
        c[i][i + 1] = T::one();
    }
    c[m - 1] = a.to_vec();
    c
}

/// Inverse companion, given `1/a_1`.
pub(crate) fn inverse_companion<T: Ring>(a: &[T], inv_a1: &T) -> Square<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let m = a.len();
    let mut c = vec![vec![T::zero(); m]; m];
    for j in 1..m {
        c[0][j - 1] = T::zero() - &a[j] * inv_a1;
    }
    c[0][m - 1] = inv_a1.clone();
    for i in 1..m {
        c[i][i - 1] = T::one();
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_and_rational_paths_agree() {
        let a = [BigInt::from(1), BigInt::from(1)];
        let c = companion(&a);
        let s = power_apply(c, 9, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(s[0], BigInt::from(55));

        let ar: Vec<Rational> = a.iter().cloned().map(Rational::from_integer).collect();
        let mut w: VecDeque<Rational> = [1, 1].map(|x| Rational::from_integer(x.into())).into();
        step_forward(&ar, &mut w, 8);
        assert_eq!(w[1], Rational::from_integer(55.into()));
        step_backward(&ar, &Rational::one(), &mut w, 11);
        assert_eq!(w[0], Rational::from_integer((-1).into()));
    }

    #[test]
    fn fraction_reduces() {
        let r = fraction(BigInt::from(-6), BigInt::from(4));
        assert_eq!(r, "-3/2".parse().unwrap());
        assert_eq!(fraction(BigInt::from(6), BigInt::from(-3)), Rational::from_integer((-2).into()));
    }

    #[test]
    fn integers_detects_fractions() {
        let half: Rational = "1/2".parse().unwrap();
        assert!(integers(&[Rational::one(), half]).is_none());
        assert_eq!(integers(&[Rational::one()]), Some(vec![BigInt::one()]));
    }
}
