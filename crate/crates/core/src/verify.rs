//! Brute-force oracle and certification for closed forms.
//!
//! The difference between the weighted sum and any candidate right side is a
//! combination `sum_k g_k(n) s_{(n+k)h+r} + g_{m+1}(n)`: an exponential
//! polynomial in `n` with at most `m+1` distinct bases and coefficients of
//! degree at most `D`. Such a function that vanishes at `(m+1)(D+1)`
//! consecutive integers vanishes identically, so checking `n = 1..bound`
//! exactly certifies the identity for all `n`.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closedform::{ClosedForm, ShiftParams};
use crate::exactmath::{Polynomial, Rational};
use crate::recurrence::{kernel, Recurrence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("perturbation tuple must have {expected} components, got {got}")]
    PerturbationLength { expected: usize, got: usize },
    #[error("perturbation tuple is all zero")]
    ZeroPerturbation,
    /// The perturbed tuple matched at every `n` up to the kernel bound. This
    /// would contradict uniqueness of the closed form and means a bug.
    #[error("no violation found for a nonzero perturbation within n = 1..{bound}")]
    NoWitnessFound { bound: u64 },
}

enum Window {
    Int { e: Vec<BigInt>, w: VecDeque<BigInt> },
    Rat { e: Vec<Rational>, w: VecDeque<Rational> },
}

/// Iterates `s_{h+r}, s_{2h+r}, ...` with a rolling window over the step-`h`
/// recurrence, so each term costs `O(m)` operations regardless of `|h|`.
/// Integral data runs on `BigInt`.
pub struct ProgressionTerms(Window);

impl ProgressionTerms {
    pub fn new(rec: &Recurrence, shift: ShiftParams) -> Self {
        let m = rec.order() as i64;
        let e = rec.step_symmetrics(shift.h).values().to_vec();
        let w: Vec<Rational> = (1..=m).map(|k| rec.term(shift.h * k + shift.r)).collect();
        match (kernel::integers(&e), kernel::integers(&w)) {
            (Some(e), Some(w)) => Self(Window::Int { e, w: w.into() }),
            _ => Self(Window::Rat { e, w: w.into() }),
        }
    }
}

fn advance<T: kernel::Ring>(e: &[T], w: &mut VecDeque<T>) -> T
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let next = kernel::dot(e, w.iter());
    w.push_back(next);
    w.pop_front().expect("order >= 2")
}

impl Iterator for ProgressionTerms {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        Some(match &mut self.0 {
            Window::Int { e, w } => Rational::from_integer(advance(e, w)),
            Window::Rat { e, w } => advance(e, w),
        })
    }
}

enum SumState {
    /// `acc / denom` with the weight scaled to integer coefficients.
    Int {
        e: Vec<BigInt>,
        w: VecDeque<BigInt>,
        weight: Vec<BigInt>,
        denom: BigInt,
        acc: BigInt,
    },
    Rat {
        terms: ProgressionTerms,
        weight: Polynomial,
        acc: Rational,
    },
}

/// Running sums `sum_{k=1}^{n} P(k) s_{hk+r}` for `n = 1, 2, ...`.
pub struct PartialSums {
    k: i64,
    state: SumState,
}

impl PartialSums {
    pub fn new(rec: &Recurrence, weight: &Polynomial, shift: ShiftParams) -> Self {
        let terms = ProgressionTerms::new(rec, shift);
        let state = match terms.0 {
            Window::Int { e, w } => {
                let denom = weight
                    .coeffs()
                    .iter()
                    .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
                let scaled: Vec<Rational> = weight
                    .coeffs()
                    .iter()
                    .map(|c| c * Rational::from_integer(denom.clone()))
                    .collect();
                SumState::Int {
                    e,
                    w,
                    weight: kernel::integers(&scaled).expect("cleared denominators"),
                    denom,
                    acc: BigInt::zero(),
                }
            }
            window => SumState::Rat {
                terms: ProgressionTerms(window),
                weight: weight.clone(),
                acc: Rational::zero(),
            },
        };
        Self { k: 0, state }
    }

    /// Adds the next term without materializing the sum.
    fn step(&mut self) {
        self.k += 1;
        let k = self.k;
        match &mut self.state {
            SumState::Int {
                e, w, weight, acc, ..
            } => {
                let s = advance(e, w);
                let kk = BigInt::from(k);
                let pk = weight.iter().rev().fold(BigInt::zero(), |v, c| v * &kk + c);
                if !pk.is_zero() {
                    *acc += pk * s;
                }
            }
            SumState::Rat { terms, weight, acc } => {
                let s = terms.next().expect("progression is infinite");
                let pk = weight.eval_i64(k);
                if !pk.is_zero() {
                    *acc += pk * s;
                }
            }
        }
    }

    fn current(&self) -> Rational {
        match &self.state {
            SumState::Int { acc, denom, .. } => kernel::fraction(acc.clone(), denom.clone()),
            SumState::Rat { acc, .. } => acc.clone(),
        }
    }
}

impl Iterator for PartialSums {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        self.step();
        Some(self.current())
    }
}

pub fn partial_sums(rec: &Recurrence, weight: &Polynomial, shift: ShiftParams) -> PartialSums {
    PartialSums::new(rec, weight, shift)
}

/// `sum_{k=1}^{n} P(k) s_{hk+r}` by direct iteration.
pub fn naive_sum(rec: &Recurrence, weight: &Polynomial, shift: ShiftParams, n: u64) -> Rational {
    let mut sums = PartialSums::new(rec, weight, shift);
    for _ in 0..n {
        sums.step();
    }
    sums.current()
}

/// Number of consecutive `n` that certify a tuple of degree at most `max_degree`.
pub fn kernel_bound(order: usize, max_degree: usize) -> u64 {
    ((order + 1) * (max_degree + 1)) as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationStatus {
    Certified,
    CounterExample { n: u64, lhs: Rational, rhs: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Inclusive range of `n` that was compared (stops at the first mismatch).
    pub checked: std::ops::RangeInclusive<u64>,
    pub status: VerificationStatus,
    pub bound_used: u64,
}

impl VerificationReport {
    pub fn is_certified(&self) -> bool {
        self.status == VerificationStatus::Certified
    }

    pub fn to_record(&self) -> ReportRecord {
        match &self.status {
            VerificationStatus::Certified => ReportRecord {
                status: "certified".into(),
                n: None,
                lhs: None,
                rhs: None,
                bound_used: self.bound_used,
            },
            VerificationStatus::CounterExample { n, lhs, rhs } => ReportRecord {
                status: "counterexample".into(),
                n: Some(*n),
                lhs: Some(lhs.to_string()),
                rhs: Some(rhs.to_string()),
                bound_used: self.bound_used,
            },
        }
    }
}

/// Machine-readable form `{status, n, lhs, rhs, bound_used}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub status: String,
    pub n: Option<u64>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub bound_used: u64,
}

/// Compares the naive sum against [`ClosedForm::eval_rhs`] for
/// `n = 1..kernel_bound(m, D) + extra`, where `D` is the larger of the tuple
/// degree and the weight degree.
pub fn verify_identity(cf: &ClosedForm, extra: u64) -> VerificationReport {
    let rec = cf.recurrence();
    let d = cf.tuple_degree().max(cf.weight().degree_or_zero());
    let bound = kernel_bound(rec.order(), d) + extra;
    for (n, lhs) in (1..=bound).zip(partial_sums(rec, cf.weight(), cf.shift())) {
        let rhs = cf.eval_rhs(n as i64);
        if lhs != rhs {
            return VerificationReport {
                checked: 1..=n,
                status: VerificationStatus::CounterExample { n, lhs, rhs },
                bound_used: bound,
            };
        }
    }
    VerificationReport {
        checked: 1..=bound,
        status: VerificationStatus::Certified,
        bound_used: bound,
    }
}

/// A nonzero tuple `(g_1, ..., g_{m+1})` added to a closed form's tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationTuple {
    gamma: Vec<Polynomial>,
}

impl PerturbationTuple {
    pub fn new(order: usize, gamma: Vec<Polynomial>) -> Result<Self, VerifyError> {
        if gamma.len() != order + 1 {
            return Err(VerifyError::PerturbationLength {
                expected: order + 1,
                got: gamma.len(),
            });
        }
        if gamma.iter().all(Polynomial::is_zero) {
            return Err(VerifyError::ZeroPerturbation);
        }
        Ok(Self { gamma })
    }

    /// Uniform random tuple with component degrees `<= max_degree` and
    /// coefficients `p/q` in `[-bound, bound]` (`q` in `1..=bound`),
    /// redrawn until nonzero.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, order: usize, max_degree: usize, bound: i64) -> Self {
        let bound = bound.max(1);
        loop {
            let gamma: Vec<Polynomial> = (0..=order)
                .map(|_| {
                    let deg = rng.gen_range(0..=max_degree);
                    let coeffs = (0..=deg)
                        .map(|_| {
                            let q = rng.gen_range(1..=bound);
                            let p = rng.gen_range(-bound * q..=bound * q);
                            Rational::new(p.into(), q.into())
                        })
                        .collect();
                    Polynomial::from_coeffs(coeffs)
                })
                .collect();
            if let Ok(t) = Self::new(order, gamma) {
                return t;
            }
        }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.gamma
    }

    pub fn max_degree(&self) -> usize {
        self.gamma.iter().map(Polynomial::degree_or_zero).max().unwrap_or(0)
    }
}

/// Least `n` at which `cf + gamma` fails the identity. A witness always
/// exists within the kernel bound; not finding one is reported as
/// [`VerifyError::NoWitnessFound`].
pub fn uniqueness_probe(cf: &ClosedForm, gamma: &PerturbationTuple) -> Result<u64, VerifyError> {
    let m = cf.recurrence().order();
    if gamma.components().len() != m + 1 {
        return Err(VerifyError::PerturbationLength {
            expected: m + 1,
            got: gamma.components().len(),
        });
    }
    let tuple: Vec<Polynomial> = cf
        .tuple()
        .iter()
        .zip(gamma.components())
        .map(|(p, g)| p + g)
        .collect();
    let perturbed = cf.with_tuple(tuple).expect("same length");
    let bound = kernel_bound(m, gamma.max_degree().max(cf.tuple_degree()));
    for (n, lhs) in (1..=bound).zip(partial_sums(cf.recurrence(), cf.weight(), cf.shift())) {
        if perturbed.eval_rhs(n as i64) != lhs {
            return Ok(n);
        }
    }
    Err(VerifyError::NoWitnessFound { bound })
}
