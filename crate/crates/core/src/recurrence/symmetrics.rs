//! Coefficients of the recurrence satisfied by every step-`l` subsequence.
//!
//! If `r_1..r_m` are the characteristic roots, the subsequence
//! `t -> s_{t l + q}` satisfies a recurrence whose characteristic polynomial
//! has roots `r_1^l..r_m^l`. Its coefficients are computed from power sums
//! `p_{jl} = sum_i r_i^{jl}` via Newton's identities, so no root is ever
//! approximated.

use num_traits::Zero;

use super::{elementary_from_power_sums, power_sums_from_elementary, Recurrence, RecurrenceError};
use crate::exactmath::{Polynomial, Rational};

/// `e_1(l)..e_m(l)` with
/// `s_{ml+q} = e_m(l) s_{(m-1)l+q} + ... + e_2(l) s_{l+q} + e_1(l) s_q` for all `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSymmetrics {
    step: i64,
    e: Vec<Rational>,
}

impl StepSymmetrics {
    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn order(&self) -> usize {
        self.e.len()
    }

    /// `e_i(l)`, 1-based.
    pub fn e(&self, i: usize) -> &Rational {
        &self.e[i - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.e
    }

    /// `-1 + sum_i e_i(l)`, which is `-prod_i (1 - r_i^l)`.
    pub fn diagonal_value(&self) -> Rational {
        self.e.iter().fold(-Rational::from_integer(1.into()), |acc, x| acc + x)
    }

    /// `Q_l(x) = x^m - e_m(l) x^{m-1} - ... - e_1(l)`, whose roots are `r_i^l`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let mut c: Vec<Rational> = self.e.iter().map(|x| -x).collect();
        c.push(Rational::from_integer(1.into()));
        Polynomial::from_coeffs(c)
    }
}

/// Whether a shift `h` admits a closed form:
/// the `r_i^h` are pairwise distinct and none equals 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftValidity {
    pub h: i64,
    pub distinct_powers: bool,
    pub no_power_is_one: bool,
    pub step_char_poly: Polynomial,
}

impl ShiftValidity {
    pub fn is_valid(&self) -> bool {
        self.distinct_powers && self.no_power_is_one
    }
}

impl Recurrence {
    /// `(p_l, p_{2l}, ..., p_{ml})` where `p_n = sum_i r_i^n`.
    ///
    /// `p_1..p_m` come from the characteristic coefficients by Newton's
    /// identities; `(p_n)` satisfies the same recurrence, so the required
    /// terms are reached by companion powering in either direction.
    pub fn power_sums(&self, step: i64) -> Vec<Rational> {
        let m = self.order();
        // x^m - a_m x^{m-1} - ... - a_1 = prod (x - r_i)  =>  sigma_k = (-1)^{k+1} a_{m+1-k}
        let sigma: Vec<Rational> = (1..=m)
            .map(|k| {
                let a = self.coefficients()[m - k].clone();
                if k % 2 == 1 {
                    a
                } else {
                    -a
                }
            })
            .collect();
        let first = power_sums_from_elementary(&sigma, m);
        let sums = Recurrence::from_parts(self.coefficients().to_vec(), first);
        (1..=m as i64).map(|j| sums.term_fast(j * step)).collect()
    }

    /// `e_1(l)..e_m(l)`. For `l = 1` this reproduces `a_1..a_m`.
    pub fn step_symmetrics(&self, step: i64) -> StepSymmetrics {
        let m = self.order();
        let sigma = elementary_from_power_sums(&self.power_sums(step));
        // e_{m+1-k}(l) = (-1)^{k+1} sigma_k(r_1^l, ..., r_m^l)
        let mut e = vec![Rational::zero(); m];
        for (idx, s) in sigma.into_iter().enumerate() {
            let k = idx + 1;
            e[m - k] = if k % 2 == 1 { s } else { -s };
        }
        StepSymmetrics { step, e }
    }

    pub fn check_shift(&self, h: i64) -> Result<ShiftValidity, RecurrenceError> {
        if h == 0 {
            return Err(RecurrenceError::ZeroShift);
        }
        let q = self.step_symmetrics(h).characteristic_polynomial();
        let distinct_powers = q.is_squarefree().expect("monic");
        let no_power_is_one = !q.eval(&Rational::from_integer(1.into())).is_zero();
        Ok(ShiftValidity {
            h,
            distinct_powers,
            no_power_is_one,
            step_char_poly: q,
        })
    }
}
