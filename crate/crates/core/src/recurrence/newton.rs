//! Newton's identities between power sums and elementary symmetric functions.
//!
//! Both directions divide by the integers `1..=m`, which is fine in
//! characteristic zero.

use num_traits::Zero;

use crate::exactmath::{rational_from_i64, Rational};

/// `p_1..p_count` from `sigma_1..sigma_m` (`sigma_k = 0` for `k > m`).
pub fn power_sums_from_elementary(sigma: &[Rational], count: usize) -> Vec<Rational> {
    let s = |k: usize| sigma.get(k - 1).cloned().unwrap_or_else(Rational::zero);
    let mut p: Vec<Rational> = Vec::with_capacity(count);
    for k in 1..=count {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} sigma_i p_{k-i} + (-1)^{k-1} k sigma_k
        let mut acc = Rational::zero();
        for i in 1..k {
            let t = s(i) * &p[k - i - 1];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        let last = s(k) * rational_from_i64(k as i64);
        if k % 2 == 1 {
            acc += last;
        } else {
            acc -= last;
        }
        p.push(acc);
    }
    p
}

/// `sigma_1..sigma_m` from `p_1..p_m`.
pub fn elementary_from_power_sums(p: &[Rational]) -> Vec<Rational> {
    let mut sigma: Vec<Rational> = Vec::with_capacity(p.len());
    for k in 1..=p.len() {
        // k sigma_k = sum_{i=1}^{k} (-1)^{i-1} sigma_{k-i} p_i, sigma_0 = 1
        let mut acc = Rational::zero();
        for i in 1..=k {
            let t = if k == i {
                p[i - 1].clone()
            } else {
                &sigma[k - i - 1] * &p[i - 1]
            };
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        sigma.push(acc / rational_from_i64(k as i64));
    }
    sigma
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational_from_i64 as q;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn roots_one_two_three() {
        // sigma = (6, 11, 6); power sums 6, 14, 36, 98
        let sigma = v(&[6, 11, 6]);
        let p = power_sums_from_elementary(&sigma, 4);
        assert_eq!(p, v(&[6, 14, 36, 98]));
        assert_eq!(elementary_from_power_sums(&p[..3]), sigma);
    }

    #[test]
    fn golden_ratio_pair() {
        // x^2 - x - 1: sigma_1 = 1, sigma_2 = -1; Lucas numbers
        let p = power_sums_from_elementary(&v(&[1, -1]), 5);
        assert_eq!(p, v(&[1, 3, 4, 7, 11]));
    }
}
