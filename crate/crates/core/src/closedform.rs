//! Closed forms for `sum_{k=1}^n P(k) s_{hk+r}`.
//!
//! For a valid shift the sum equals
//! `P_1(n) s_{(n+1)h+r} + ... + P_m(n) s_{(n+m)h+r} + P_{m+1}(n)` for every
//! `n >= 1`, with a unique polynomial tuple `(P_1, ..., P_{m+1})`. The tuple
//! for `P = x^d` comes from a `(d+1) x (d+1)` upper-triangular system in the
//! step symmetrics `e_i(h)`; general weights are linear combinations of those.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{binomial, rational_from_i64, ExactError, Matrix, Polynomial, Rational};
use crate::recurrence::{kernel, RecordError, Recurrence, RecurrenceError, RecurrenceRecord, StepSymmetrics};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDefect {
    ZeroShift,
    PowersNotDistinct,
    PowerEqualsOne,
}

impl fmt::Display for ShiftDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShiftDefect::ZeroShift => "h must be nonzero",
            ShiftDefect::PowersNotDistinct => "h-th powers of roots are not distinct",
            ShiftDefect::PowerEqualsOne => "h-th powers of roots equal 1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("invalid shift h = {h}: {defect}")]
    InvalidShift { h: i64, defect: ShiftDefect },
    #[error("tuple must have {expected} components, got {got}")]
    TupleLength { expected: usize, got: usize },
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The pair `(h, r)` indexing the summed subsequence `s_{hk+r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftParams {
    pub h: i64,
    pub r: i64,
}

impl ShiftParams {
    pub fn new(h: i64, r: i64) -> Self {
        Self { h, r }
    }

    /// Runs the shift check against `rec` and returns `e_i(h)` on success.
    pub fn validate_for(&self, rec: &Recurrence) -> Result<StepSymmetrics, ClosedFormError> {
        let invalid = |defect| ClosedFormError::InvalidShift { h: self.h, defect };
        let validity = rec.check_shift(self.h).map_err(|e| match e {
            RecurrenceError::ZeroShift => invalid(ShiftDefect::ZeroShift),
            other => unreachable!("check_shift only rejects h = 0, got {other}"),
        })?;
        if !validity.no_power_is_one {
            return Err(invalid(ShiftDefect::PowerEqualsOne));
        }
        if !validity.distinct_powers {
            return Err(invalid(ShiftDefect::PowersNotDistinct));
        }
        Ok(rec.step_symmetrics(self.h))
    }
}

/// Solution `delta_0..delta_d` of the triangular system for degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVector {
    pub degree: usize,
    pub delta: Vec<Rational>,
}

impl DeltaVector {
    /// `delta_d x^d + ... + delta_0`, which is `P_m` for the weight `x^d`.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.delta.clone())
    }
}

/// The `(d+1) x (d+1)` matrix with entries (1-based)
///
/// - `C(j-1, i-1) * sum_t e_t(l) (m+1-t)^{j-i}` for `i < j`,
/// - `-1 + sum_t e_t(l)` on the diagonal,
/// - `0` below it.
pub fn build_matrix(d: usize, sym: &StepSymmetrics) -> Result<Matrix, ClosedFormError> {
    let diag = sym.diagonal_value();
    if diag.is_zero() {
        return Err(ClosedFormError::InvalidShift {
            h: sym.step(),
            defect: ShiftDefect::PowerEqualsOne,
        });
    }
    let m = sym.order();
    // weighted[p] = sum_t e_t (m+1-t)^p
    let weighted: Vec<Rational> = (0..=d)
        .map(|p| {
            (1..=m).fold(Rational::zero(), |acc, t| {
                acc + sym.e(t) * rational_from_i64((m + 1 - t) as i64).pow(p as i32)
            })
        })
        .collect();
    let mut mat = Matrix::zeros(d + 1, d + 1);
    for i in 1..=d + 1 {
        mat.set(i, i, diag.clone());
        for j in i + 1..=d + 1 {
            mat.set(i, j, binomial(j - 1, i - 1) * &weighted[j - i]);
        }
    }
    Ok(mat)
}

/// Right side `(C(d,0) m^d, C(d,1) m^{d-1}, ..., C(d,d) m^0)`.
fn delta_rhs(d: usize, m: usize) -> Vec<Rational> {
    (0..=d)
        .map(|i| binomial(d, i) * rational_from_i64(m as i64).pow((d - i) as i32))
        .collect()
}

pub fn solve_deltas(d: usize, sym: &StepSymmetrics) -> Result<DeltaVector, ClosedFormError> {
    let mat = build_matrix(d, sym)?;
    let delta = mat.upper_tri_solve(&delta_rhs(d, sym.order()))?;
    Ok(DeltaVector { degree: d, delta })
}

/// Tuple components `P_1..P_{m+1}` for the weight `x^d`.
fn monomial_components(
    rec: &Recurrence,
    sym: &StepSymmetrics,
    d: usize,
    shift: ShiftParams,
) -> Result<Vec<Polynomial>, ClosedFormError> {
    let m = rec.order();
    let pm = solve_deltas(d, sym)?.polynomial();
    let mut tuple: Vec<Polynomial> = Vec::with_capacity(m + 1);
    for k in 1..m {
        // P_k(x) = P_m(x - m + k) - sum_{t=k+1}^{m} e_t P_m(x + k + 1 - t)
        let mut pk = pm.shift_i64(k as i64 - m as i64);
        for t in k + 1..=m {
            pk = pk - pm.shift_i64(k as i64 + 1 - t as i64).scale(sym.e(t));
        }
        tuple.push(pk);
    }
    tuple.push(pm);
    // P_{m+1} = s_{h+r} - sum_{t=1}^{m} P_t(1) s_{(t+1)h+r}
    let (h, r) = (shift.h, shift.r);
    let one = rational_from_i64(1);
    let mut tail = rec.term_fast(h + r);
    for (t, p) in tuple.iter().enumerate() {
        let idx = (t as i64 + 2) * h + r;
        tail -= p.eval(&one) * rec.term_fast(idx);
    }
    tuple.push(Polynomial::constant(tail));
    Ok(tuple)
}

/// A weight, a shift, and the tuple that expresses the weighted sum in
/// shifted terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    recurrence: Recurrence,
    shift: ShiftParams,
    weight: Polynomial,
    tuple: Vec<Polynomial>,
}

impl ClosedForm {
    /// Assembles a closed form without deriving or checking the tuple. Use
    /// [`crate::verify::verify_identity`] to certify it.
    pub fn from_parts(
        recurrence: Recurrence,
        shift: ShiftParams,
        weight: Polynomial,
        tuple: Vec<Polynomial>,
    ) -> Result<Self, ClosedFormError> {
        let expected = recurrence.order() + 1;
        if tuple.len() != expected {
            return Err(ClosedFormError::TupleLength {
                expected,
                got: tuple.len(),
            });
        }
        Ok(Self {
            recurrence,
            shift,
            weight,
            tuple,
        })
    }

    pub fn recurrence(&self) -> &Recurrence {
        &self.recurrence
    }

    pub fn shift(&self) -> ShiftParams {
        self.shift
    }

    pub fn weight(&self) -> &Polynomial {
        &self.weight
    }

    pub fn tuple(&self) -> &[Polynomial] {
        &self.tuple
    }

    /// `P_k`, 1-based, `k` in `1..=m+1`.
    pub fn component(&self, k: usize) -> &Polynomial {
        &self.tuple[k - 1]
    }

    /// Copy with `P_k` replaced.
    pub fn with_component(&self, k: usize, p: Polynomial) -> ClosedForm {
        let mut out = self.clone();
        out.tuple[k - 1] = p;
        out
    }

    pub fn with_tuple(&self, tuple: Vec<Polynomial>) -> Result<ClosedForm, ClosedFormError> {
        ClosedForm::from_parts(self.recurrence.clone(), self.shift, self.weight.clone(), tuple)
    }

    /// Highest degree among the tuple components (zero components count as 0).
    pub fn tuple_degree(&self) -> usize {
        self.tuple.iter().map(Polynomial::degree_or_zero).max().unwrap_or(0)
    }

    /// `sum_{k=1}^m P_k(n) s_{(n+k)h+r} + P_{m+1}(n)` using fast term access.
    pub fn eval_rhs(&self, n: i64) -> Rational {
        let (h, r) = (self.shift.h, self.shift.r);
        let m = self.recurrence.order();
        let nn = rational_from_i64(n);
        let coeffs: Vec<Rational> = self.tuple.iter().map(|p| p.eval(&nn)).collect();
        let index = |k: usize| (n + k as i64) * h + r;
        let lo = index(1).min(index(m));
        let span = (m - 1) * h.unsigned_abs() as usize + 1;
        if let Some(terms) = self.recurrence.span_int(lo, span) {
            // integer combination over the common denominator of the P_k(n)
            let denom = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
            let scaled = |c: &Rational| (c * Rational::from_integer(denom.clone())).to_integer();
            let mut acc = scaled(&coeffs[m]);
            for (k, c) in (1..=m).zip(&coeffs) {
                if !c.is_zero() {
                    acc += scaled(c) * &terms[(index(k) - lo) as usize];
                }
            }
            return kernel::fraction(acc, denom);
        }
        let mut acc = coeffs[m].clone();
        for (k, c) in (1..=m).zip(&coeffs) {
            if !c.is_zero() {
                acc += c * self.recurrence.term_fast(index(k));
            }
        }
        acc
    }

    pub fn to_record(&self) -> ClosedFormRecord {
        ClosedFormRecord {
            schema: SCHEMA_VERSION,
            recurrence: self.recurrence.to_record(),
            shift: self.shift,
            weight: self.weight.clone(),
            tuple: self.tuple.clone(),
        }
    }
}

/// Closed form for the weight `x^d`.
pub fn monomial_tuple(rec: &Recurrence, d: usize, shift: ShiftParams) -> Result<ClosedForm, ClosedFormError> {
    let sym = shift.validate_for(rec)?;
    let tuple = monomial_components(rec, &sym, d, shift)?;
    ClosedForm::from_parts(
        rec.clone(),
        shift,
        Polynomial::monomial(rational_from_i64(1), d),
        tuple,
    )
}

/// Closed form for an arbitrary weight, as the coefficient-weighted sum of
/// the monomial tuples. The zero weight gives the zero tuple.
pub fn general_tuple(rec: &Recurrence, weight: &Polynomial, shift: ShiftParams) -> Result<ClosedForm, ClosedFormError> {
    let sym = shift.validate_for(rec)?;
    let m = rec.order();
    let mut tuple = vec![Polynomial::zero(); m + 1];
    for (d, c) in weight.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = monomial_components(rec, &sym, d, shift)?;
        for (acc, p) in tuple.iter_mut().zip(&mono) {
            *acc = &*acc + &p.scale(c);
        }
    }
    ClosedForm::from_parts(rec.clone(), shift, weight.clone(), tuple)
}

pub const SCHEMA_VERSION: u32 = 1;

/// JSON form of a [`ClosedForm`]; coefficient arrays are ascending rational
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormRecord {
    pub schema: u32,
    pub recurrence: RecurrenceRecord,
    pub shift: ShiftParams,
    pub weight: Polynomial,
    pub tuple: Vec<Polynomial>,
}

impl TryFrom<&ClosedFormRecord> for ClosedForm {
    type Error = ClosedFormError;

    fn try_from(rec: &ClosedFormRecord) -> Result<Self, ClosedFormError> {
        let recurrence = Recurrence::try_from(&rec.recurrence)?;
        ClosedForm::from_parts(recurrence, rec.shift, rec.weight.clone(), rec.tuple.clone())
    }
}
