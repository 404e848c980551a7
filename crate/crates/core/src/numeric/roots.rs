//! Simultaneous root finding (Aberth–Ehrlich).

use std::cmp::Ordering;

use super::complex::{pow2, real_from_int, ApproxComplex, Real};
use super::{epsilon, NumericError};
use crate::exactmath::Polynomial;

pub const MAX_SWEEPS: usize = 200;

/// Fixed offset for the starting circle so no initial guess sits on the
/// real axis; keeps runs reproducible.
const START_ANGLE: f64 = 0.4;

fn horner(coeffs: &[ApproxComplex], z: &ApproxComplex) -> (ApproxComplex, ApproxComplex) {
    // value and first derivative
    let prec = z.precision();
    let mut p = ApproxComplex::zero(prec);
    let mut dp = ApproxComplex::zero(prec);
    for c in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
    }
    (p, dp)
}

/// All roots of a squarefree polynomial of degree `>= 1`, ordered by
/// nondecreasing magnitude with ties broken by argument.
///
/// Each returned root has residual `|p(r)| < 2^(-precision/2)`.
pub fn find_roots(cp: &Polynomial, precision: usize) -> Result<Vec<ApproxComplex>, NumericError> {
    let deg = match cp.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(NumericError::DegreeTooSmall),
    };
    let lead = ApproxComplex::from_rational(cp.leading().expect("nonzero"), precision);
    let coeffs: Vec<ApproxComplex> = cp
        .coeffs()
        .iter()
        .map(|c| &ApproxComplex::from_rational(c, precision) / &lead)
        .collect();

    // Cauchy bound on root magnitude; start inside it.
    let bound = 1.0
        + coeffs[..deg]
            .iter()
            .map(ApproxComplex::abs_f64)
            .fold(0.0f64, f64::max);
    let radius = (bound * 0.5).max(0.5);
    let mut z: Vec<ApproxComplex> = (0..deg)
        .map(|k| {
            let theta = START_ANGLE + std::f64::consts::TAU * k as f64 / deg as f64;
            let rk = radius * (1.0 + 0.01 * k as f64);
            ApproxComplex::from_f64s(rk * theta.cos(), rk * theta.sin(), precision)
        })
        .collect();

    let step_tol: Real = pow2(-(precision as isize) + 16, precision);
    let residual_tol: Real = pow2(-(precision as isize) / 2, precision);
    let one = real_from_int(1, precision);

    for _ in 0..MAX_SWEEPS {
        let mut max_step_ok = true;
        let mut next = z.clone();
        for i in 0..deg {
            let (p, dp) = horner(&coeffs, &z[i]);
            if p.is_zero() {
                continue;
            }
            if dp.is_zero() {
                max_step_ok = false;
                continue;
            }
            let ratio = &p / &dp;
            let mut repulsion = ApproxComplex::zero(precision);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let diff = &z[i] - zj;
                    if !diff.is_zero() {
                        repulsion = &repulsion + &diff.recip();
                    }
                }
            }
            let denom = &ApproxComplex::one(precision) - &(&ratio * &repulsion);
            if denom.is_zero() {
                max_step_ok = false;
                continue;
            }
            let w = &ratio / &denom;
            let scale = z[i].abs().max(one.clone());
            if w.abs() > &step_tol * &scale {
                max_step_ok = false;
            }
            next[i] = &z[i] - &w;
        }
        z = next;
        if max_step_ok {
            break;
        }
    }
    let residuals_ok = z.iter().all(|r| horner(&coeffs, r).0.abs() < residual_tol);
    // Hitting the sweep cap is tolerated when the residuals already meet the bar.
    if !residuals_ok {
        return Err(NumericError::NoConvergence {
            sweeps: MAX_SWEEPS,
            precision,
        });
    }
    let eps = epsilon(precision);
    for i in 0..deg {
        for j in i + 1..deg {
            if (&z[i] - &z[j]).abs() <= eps {
                return Err(NumericError::NoConvergence {
                    sweeps: MAX_SWEEPS,
                    precision,
                });
            }
        }
    }
    sort_roots(&mut z);
    Ok(z)
}

fn sort_roots(z: &mut [ApproxComplex]) {
    z.sort_by(|a, b| {
        let (ma, mb) = (a.abs_f64(), b.abs_f64());
        if (ma - mb).abs() > 1e-12 * ma.max(mb).max(1.0) {
            ma.partial_cmp(&mb).unwrap_or(Ordering::Equal)
        } else {
            a.arg_f64().partial_cmp(&b.arg_f64()).unwrap_or(Ordering::Equal)
        }
    });
}
