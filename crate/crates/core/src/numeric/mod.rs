//! Approximate complex backend: characteristic roots `r_i`, Binet weights
//! `L_i`, and `s_k = sum_i L_i r_i^k`.
//!
//! Nothing here feeds the exact pipeline. It exists to cross-check exact
//! results (step symmetrics, terms, determinants) against the spectral
//! picture.

mod complex;
mod roots;

pub use complex::{pow2, real_from_int, real_from_rational, to_f64, ApproxComplex, Real};
pub use roots::{find_roots, MAX_SWEEPS};

use thiserror::Error;

use crate::exactmath::{Polynomial, Rational};
use crate::recurrence::Recurrence;

pub const DEFAULT_PRECISION: usize = 256;
/// Zero / separation tolerance exponent: `eps = 2^-128`.
pub const EPSILON_BITS: isize = 128;
/// How many times [`SpectralData::compute`] doubles the precision after a
/// non-converged root search.
pub const MAX_RETRIES: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("root iteration did not converge in {sweeps} sweeps at {precision} bits")]
    NoConvergence { sweeps: usize, precision: usize },
    #[error("ill-conditioned weight system: {0}")]
    IllConditioned(String),
    #[error("polynomial must have degree >= 1")]
    DegreeTooSmall,
}

pub fn epsilon(precision: usize) -> Real {
    pow2(-EPSILON_BITS, precision)
}

/// Roots (ordered by magnitude, ties by argument) and weights of the
/// explicit formula.
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub roots: Vec<ApproxComplex>,
    pub weights: Vec<ApproxComplex>,
    pub precision: usize,
}

impl SpectralData {
    /// Finds roots, doubling the precision up to [`MAX_RETRIES`] times if the
    /// iteration fails, then solves for the weights.
    pub fn compute(rec: &Recurrence, precision: usize) -> Result<Self, NumericError> {
        let (roots, precision) = roots_with_retry(&rec.characteristic_polynomial(), precision)?;
        let window: Vec<Rational> = (1..=2 * rec.order() as i64).map(|k| rec.term(k)).collect();
        let weights = weights(&window, &roots, precision)?;
        Ok(Self {
            roots,
            weights,
            precision,
        })
    }

    /// `sum_i L_i r_i^k`.
    pub fn explicit_term(&self, k: i64) -> ApproxComplex {
        self.roots
            .iter()
            .zip(&self.weights)
            .fold(ApproxComplex::zero(self.precision), |acc, (r, l)| &acc + &(l * &r.powi(k)))
    }

    /// `(-prod_i (1 - r_i^h))^{d+1}`, the determinant of the degree-`d`
    /// delta system for shift `h`.
    pub fn delta_determinant(&self, h: i64, d: usize) -> ApproxComplex {
        let one = ApproxComplex::one(self.precision);
        let prod = self
            .roots
            .iter()
            .fold(one.clone(), |acc, r| &acc * &(&one - &r.powi(h)));
        (-&prod).powi(d as i64 + 1)
    }

    /// Signed elementary symmetric functions of `r_i^l`, in the layout of
    /// [`crate::recurrence::StepSymmetrics`]: entry `i-1` is `e_i(l)`.
    pub fn step_symmetrics(&self, step: i64) -> Vec<ApproxComplex> {
        let m = self.roots.len();
        // prod (x - r_i^l) = x^m - sigma_1 x^{m-1} + ...; expand to get sigma
        let mut coeffs = vec![ApproxComplex::one(self.precision)];
        for r in &self.roots {
            let rl = r.powi(step);
            let mut next = vec![ApproxComplex::zero(self.precision); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - &(c * &rl);
            }
            coeffs = next;
        }
        // x^m - e_m x^{m-1} - ... - e_1  =>  e_i = -coeffs[i-1]
        (1..=m).map(|i| -&coeffs[i - 1]).collect()
    }
}

fn roots_with_retry(cp: &Polynomial, precision: usize) -> Result<(Vec<ApproxComplex>, usize), NumericError> {
    let mut prec = precision;
    let mut last = None;
    for _ in 0..=MAX_RETRIES {
        match find_roots(cp, prec) {
            Ok(r) => return Ok((r, prec)),
            Err(e @ NumericError::NoConvergence { .. }) => {
                last = Some(e);
                prec *= 2;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Solves `sum_i L_i r_i^k = s_k` for `k = 1..m` by Gaussian elimination
/// with partial pivoting. `terms` holds `s_1, s_2, ...` (at least `m` of
/// them, normally `2m`); the residual is checked on all of them and every
/// `L_i` must be nonzero.
pub fn weights(
    terms: &[Rational],
    roots: &[ApproxComplex],
    precision: usize,
) -> Result<Vec<ApproxComplex>, NumericError> {
    let m = roots.len();
    if terms.len() < m {
        return Err(NumericError::IllConditioned(format!(
            "{} terms for {} roots",
            terms.len(),
            m
        )));
    }
    let eps = epsilon(precision);
    let mut a: Vec<Vec<ApproxComplex>> = (1..=m as i64)
        .map(|k| roots.iter().map(|r| r.powi(k)).collect())
        .collect();
    let mut b: Vec<ApproxComplex> = terms[..m]
        .iter()
        .map(|s| ApproxComplex::from_rational(s, precision))
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i][col].norm_sqr().partial_cmp(&a[j][col].norm_sqr()).expect("finite"))
            .expect("nonempty");
        if a[pivot][col].abs() <= eps {
            return Err(NumericError::IllConditioned(format!("zero pivot in column {}", col + 1)));
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for (i, row) in rest.iter_mut().enumerate() {
            let f = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *x = &*x - &(&f * p);
            }
            let row = col + 1 + i;
            let t = &f * &b[col];
            b[row] = &b[row] - &t;
        }
    }
    let mut x = vec![ApproxComplex::zero(precision); m];
    for row in (0..m).rev() {
        let mut acc = b[row].clone();
        for c in row + 1..m {
            acc = &acc - &(&a[row][c] * &x[c]);
        }
        x[row] = &acc / &a[row][row];
    }

    let one = real_from_int(1, precision);
    for (k, s) in (1i64..).zip(terms) {
        let approx = roots
            .iter()
            .zip(&x)
            .fold(ApproxComplex::zero(precision), |acc, (r, l)| &acc + &(l * &r.powi(k)));
        let exact = ApproxComplex::from_rational(s, precision);
        let diff = (&approx - &exact).abs();
        if diff > &eps * &exact.abs().max(one.clone()) {
            return Err(NumericError::IllConditioned(format!("residual at k = {k} exceeds tolerance")));
        }
    }
    if let Some(i) = x.iter().position(|l| l.abs() <= eps) {
        return Err(NumericError::IllConditioned(format!(
            "weight L_{} vanishes; the sequence has lower order",
            i + 1
        )));
    }
    Ok(x)
}

/// Compares exact `e_i(l)` with the numeric elementary symmetric functions
/// of `r_i^l`; true iff every component agrees within `tol` (absolute).
pub fn crosscheck_symmetrics(rec: &Recurrence, step: i64, tol: f64) -> Result<bool, NumericError> {
    let (roots, precision) = roots_with_retry(&rec.characteristic_polynomial(), DEFAULT_PRECISION)?;
    let spectral = SpectralData {
        roots,
        weights: Vec::new(),
        precision,
    };
    let numeric = spectral.step_symmetrics(step);
    let exact = rec.step_symmetrics(step);
    Ok(numeric
        .iter()
        .zip(exact.values())
        .all(|(n, e)| (n - &ApproxComplex::from_rational(e, precision)).abs_f64() <= tol))
}

/// `|approx - exact| / max(|exact|, 1)`.
pub fn relative_error(approx: &ApproxComplex, exact: &Rational) -> f64 {
    let p = approx.precision();
    let e = ApproxComplex::from_rational(exact, p);
    let scale = e.abs().max(real_from_int(1, p));
    to_f64(&((approx - &e).abs() / scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational_from_i64 as q;

    fn fib() -> Recurrence {
        Recurrence::from_i64s(&[1, 1], &[1, 1]).unwrap()
    }

    #[test]
    fn binet_weights_for_fibonacci() {
        let sd = SpectralData::compute(&fib(), DEFAULT_PRECISION).unwrap();
        let inv_sqrt5 = 1.0 / 5f64.sqrt();
        // roots ordered |psi| < |phi|, so L = (-1/sqrt5, 1/sqrt5)
        assert!((sd.weights[0].re_f64() + inv_sqrt5).abs() < 1e-15);
        assert!((sd.weights[1].re_f64() - inv_sqrt5).abs() < 1e-15);
    }

    #[test]
    fn weights_reject_lower_order_sequence() {
        // s_k = 2^k under s_{k+2} = 4 s_k: the weight on -2 vanishes
        let roots = vec![
            ApproxComplex::from_f64s(-2.0, 0.0, DEFAULT_PRECISION),
            ApproxComplex::from_f64s(2.0, 0.0, DEFAULT_PRECISION),
        ];
        let err = weights(&[q(2), q(4), q(8), q(16)], &roots, DEFAULT_PRECISION).unwrap_err();
        assert!(matches!(err, NumericError::IllConditioned(_)));
    }

    #[test]
    fn weights_for_rotation() {
        // s_{k+2} = -s_k with s = (1, 0): s_3 = -1
        let rec = Recurrence::from_i64s(&[-1, 0], &[1, 0]).unwrap();
        let sd = SpectralData::compute(&rec, DEFAULT_PRECISION).unwrap();
        for l in &sd.weights {
            assert!((l.abs_f64() - 0.5).abs() < 1e-15);
        }
        assert!(relative_error(&sd.explicit_term(3), &q(-1)) < 1e-30);
    }

    #[test]
    fn explicit_terms() {
        let sd = SpectralData::compute(&fib(), DEFAULT_PRECISION).unwrap();
        assert!((sd.explicit_term(10).re_f64() - 55.0).abs() < 1e-9);
        assert!(sd.explicit_term(0).abs_f64() < 1e-9);
        assert!((sd.explicit_term(-2).re_f64() + 1.0).abs() < 1e-9);
    }

    #[test]
    fn symmetrics_crosscheck() {
        for l in [2, 1, -1] {
            assert!(crosscheck_symmetrics(&fib(), l, 1e-9).unwrap(), "l = {l}");
        }
    }

    #[test]
    fn determinant_matches_exact_diagonal() {
        let rec = Recurrence::from_i64s(&[1, 1, 1], &[1, 1, 2]).unwrap();
        let sd = SpectralData::compute(&rec, DEFAULT_PRECISION).unwrap();
        for h in [-2, 1, 3] {
            let diag = rec.step_symmetrics(h).diagonal_value();
            let exact = num_traits::pow::pow(diag, 3);
            assert!(relative_error(&sd.delta_determinant(h, 2), &exact) < 1e-8);
        }
    }

    #[test]
    fn step_polynomial_roots_are_root_powers() {
        for (a, s) in [([1, 1], [1, 1]), ([1, 2], [1, 2]), ([-1, 0], [1, 1])] {
            let rec = Recurrence::from_i64s(&a, &s).unwrap();
            let sd = SpectralData::compute(&rec, DEFAULT_PRECISION).unwrap();
            for h in [-3, -1, 2, 3] {
                let q_h = rec.step_symmetrics(h).characteristic_polynomial();
                let found = find_roots(&q_h, DEFAULT_PRECISION).unwrap();
                for r in &sd.roots {
                    let target = r.powi(h);
                    let nearest = found
                        .iter()
                        .map(|z| (z - &target).abs_f64())
                        .fold(f64::INFINITY, f64::min);
                    assert!(nearest < 1e-30, "a = {a:?}, h = {h}: {nearest:e}");
                }
            }
        }
    }
}
