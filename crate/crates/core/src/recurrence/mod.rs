//! Homogeneous linear recurrences
//! `s_{k+m} = a_m s_{k+m-1} + ... + a_2 s_{k+1} + a_1 s_k`, indexed over all
//! integers.
//!
//! A [`Recurrence`] is only constructed through [`Recurrence::validate`],
//! which enforces the conditions the summation identities rely on: `a_1 != 0`,
//! a nonzero initial window, a squarefree characteristic polynomial, and
//! minimal order exactly `m`.

mod berlekamp_massey;
pub(crate) mod kernel;
mod newton;
mod symmetrics;

pub use berlekamp_massey::{berlekamp_massey, LinearComplexity};
pub use newton::{elementary_from_power_sums, power_sums_from_elementary};
pub use symmetrics::{ShiftValidity, StepSymmetrics};

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{parse_rational, Matrix, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("recurrence order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("expected {order} coefficients and {order} initial terms, got {coefficients} and {initial}")]
    LengthMismatch {
        order: usize,
        coefficients: usize,
        initial: usize,
    },
    #[error("coefficient a_1 must be nonzero")]
    ZeroA1,
    #[error("initial terms s_1..s_m are all zero")]
    AllInitialZero,
    #[error("characteristic polynomial has repeated roots")]
    RepeatedRoots,
    #[error("sequence is not of minimal order {order}: it satisfies a recurrence of order {found}")]
    NotMinimal { order: usize, found: usize },
    #[error("shift h must be nonzero")]
    ZeroShift,
}

/// A validated recurrence of order `m >= 2`.
///
/// `coefficients[i]` is `a_{i+1}`, so `coefficients[0] = a_1` multiplies the
/// most-lagged term. `initial[i]` is `s_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    coefficients: Vec<Rational>,
    initial: Vec<Rational>,
}

/// Wire form: `{"order": m, "coefficients": ["a1", ...], "initial": ["s1", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceRecord {
    pub order: usize,
    pub coefficients: Vec<String>,
    pub initial: Vec<String>,
}

impl Recurrence {
    /// Checks, in this order: order and lengths, `a_1 != 0`, initial window
    /// not all zero, squarefree characteristic polynomial, and
    /// Berlekamp–Massey length `m` on `s_1..s_{2m}`.
    pub fn validate(
        order: usize,
        coefficients: Vec<Rational>,
        initial: Vec<Rational>,
    ) -> Result<Self, RecurrenceError> {
        if order < 2 {
            return Err(RecurrenceError::OrderTooSmall(order));
        }
        if coefficients.len() != order || initial.len() != order {
            return Err(RecurrenceError::LengthMismatch {
                order,
                coefficients: coefficients.len(),
                initial: initial.len(),
            });
        }
        if coefficients[0].is_zero() {
            return Err(RecurrenceError::ZeroA1);
        }
        if initial.iter().all(Zero::is_zero) {
            return Err(RecurrenceError::AllInitialZero);
        }
        let rec = Self::from_parts(coefficients, initial);
        let squarefree = rec
            .characteristic_polynomial()
            .is_squarefree()
            .expect("characteristic polynomial is monic");
        if !squarefree {
            return Err(RecurrenceError::RepeatedRoots);
        }
        let window: Vec<Rational> = (1..=2 * order as i64).map(|k| rec.term(k)).collect();
        let found = berlekamp_massey(&window).length;
        if found != order {
            return Err(RecurrenceError::NotMinimal { order, found });
        }
        Ok(rec)
    }

    pub fn new(coefficients: Vec<Rational>, initial: Vec<Rational>) -> Result<Self, RecurrenceError> {
        Self::validate(coefficients.len(), coefficients, initial)
    }

    pub fn from_i64s(coefficients: &[i64], initial: &[i64]) -> Result<Self, RecurrenceError> {
        let conv = |xs: &[i64]| xs.iter().map(|&x| crate::exactmath::rational_from_i64(x)).collect();
        Self::new(conv(coefficients), conv(initial))
    }

    /// Unvalidated construction, for auxiliary sequences (power sums) that
    /// share the recurrence but are not user inputs.
    pub(crate) fn from_parts(coefficients: Vec<Rational>, initial: Vec<Rational>) -> Self {
        debug_assert_eq!(coefficients.len(), initial.len());
        Self {
            coefficients,
            initial,
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    /// `x^m - a_m x^{m-1} - ... - a_2 x - a_1`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let mut c: Vec<Rational> = self.coefficients.iter().map(|a| -a).collect();
        c.push(Rational::one());
        Polynomial::from_coeffs(c)
    }

    /// `s_k` by stepping the recurrence forward (k > m) or backward (k < 1).
    pub fn term(&self, k: i64) -> Rational {
        let m = self.order() as i64;
        if (1..=m).contains(&k) {
            return self.initial[(k - 1) as usize].clone();
        }
        if let Some((a, s)) = self.integral(k < 1) {
            let mut w: VecDeque<BigInt> = s.into();
            if k > m {
                kernel::step_forward(&a, &mut w, (k - m) as u64);
                return Rational::from_integer(w.pop_back().expect("order >= 2"));
            }
            let inv = a[0].clone();
            kernel::step_backward(&a, &inv, &mut w, (1 - k) as u64);
            return Rational::from_integer(w.pop_front().expect("order >= 2"));
        }
        let a = &self.coefficients;
        let mut w: VecDeque<Rational> = self.initial.clone().into();
        if k > m {
            kernel::step_forward(a, &mut w, (k - m) as u64);
            w.pop_back().expect("order >= 2")
        } else {
            kernel::step_backward(a, &a[0].recip(), &mut w, (1 - k) as u64);
            w.pop_front().expect("order >= 2")
        }
    }

    /// Integer copies of `(a, s)` when both are integral; `backward` also
    /// requires `a_1 = +-1` so that `1/a_1 = a_1` stays integral.
    fn integral(&self, backward: bool) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
        let a = kernel::integers(&self.coefficients)?;
        if backward && !(a[0].is_one() || (-&a[0]).is_one()) {
            return None;
        }
        Some((a, kernel::integers(&self.initial)?))
    }

    /// One-step companion matrix `C` with `C (s_j, ..., s_{j+m-1}) = (s_{j+1}, ..., s_{j+m})`.
    pub fn companion(&self) -> Matrix {
        let m = self.order();
        let mut c = Matrix::zeros(m, m);
        for i in 1..m {
            c.set(i, i + 1, Rational::one());
        }
        for (j, a) in self.coefficients.iter().enumerate() {
            c.set(m, j + 1, a.clone());
        }
        c
    }

    /// Inverse of [`Recurrence::companion`]; exists because `a_1 != 0`.
    pub fn inverse_companion(&self) -> Matrix {
        let m = self.order();
        let a = &self.coefficients;
        let inv_a1 = a[0].recip();
        let mut c = Matrix::zeros(m, m);
        for (j, aj) in a.iter().enumerate().skip(1) {
            c.set(1, j, -(aj * &inv_a1));
        }
        c.set(1, m, inv_a1);
        for i in 2..=m {
            c.set(i, i - 1, Rational::one());
        }
        c
    }

    /// `s_k` by binary powering of the companion matrix (or its inverse for
    /// steps to the left of the initial window). Equal to [`Recurrence::term`].
    pub fn term_fast(&self, k: i64) -> Rational {
        let m = self.order() as i64;
        if (1..=m).contains(&k) {
            return self.initial[(k - 1) as usize].clone();
        }
        let steps = k - 1;
        let e = steps.unsigned_abs();
        if let Some((a, s)) = self.integral(steps < 0) {
            let base = if steps > 0 {
                kernel::companion(&a)
            } else {
                kernel::inverse_companion(&a, &a[0])
            };
            let mut state = kernel::power_apply(base, e, s);
            return Rational::from_integer(state.swap_remove(0));
        }
        let a = &self.coefficients;
        let base = if steps > 0 {
            kernel::companion(a)
        } else {
            kernel::inverse_companion(a, &a[0].recip())
        };
        kernel::power_apply(base, e, self.initial.clone()).swap_remove(0)
    }

    /// `s_lo, ..., s_{lo+len-1}` over the integers, when the data allows
    /// it: one binary powering to reach `s_lo`, then plain forward steps.
    pub(crate) fn span_int(&self, lo: i64, len: usize) -> Option<Vec<BigInt>> {
        let (a, s) = self.integral(lo < 1)?;
        let steps = lo - 1;
        let base = if steps >= 0 {
            kernel::companion(&a)
        } else {
            kernel::inverse_companion(&a, &a[0])
        };
        let mut w: VecDeque<BigInt> = kernel::power_apply(base, steps.unsigned_abs(), s).into();
        let mut out = Vec::with_capacity(len);
        while out.len() < len {
            out.push(w[0].clone());
            kernel::step_forward(&a, &mut w, 1);
        }
        Some(out)
    }

    pub fn to_record(&self) -> RecurrenceRecord {
        RecurrenceRecord {
            order: self.order(),
            coefficients: self.coefficients.iter().map(ToString::to_string).collect(),
            initial: self.initial.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Errors from turning a [`RecurrenceRecord`] into a [`Recurrence`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("field {field}: {message}")]
    Field { field: &'static str, message: String },
    #[error(transparent)]
    Invalid(#[from] RecurrenceError),
}

impl TryFrom<&RecurrenceRecord> for Recurrence {
    type Error = RecordError;

    fn try_from(rec: &RecurrenceRecord) -> Result<Self, RecordError> {
        let parse = |field: &'static str, xs: &[String]| {
            xs.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| RecordError::Field {
                    field,
                    message: e.to_string(),
                })
        };
        let a = parse("coefficients", &rec.coefficients)?;
        let s = parse("initial", &rec.initial)?;
        Ok(Recurrence::validate(rec.order, a, s)?)
    }
}
