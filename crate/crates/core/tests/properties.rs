use lbsum::closedform::{build_matrix, general_tuple, monomial_tuple, ShiftParams};
use lbsum::exactmath::{Matrix, Polynomial, Rational};
use lbsum::presets::PRESETS;
use lbsum::recurrence::{berlekamp_massey, elementary_from_power_sums, power_sums_from_elementary, Recurrence};
use lbsum::verify::{kernel_bound, naive_sum, uniqueness_probe, verify_identity, PerturbationTuple};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(Polynomial::from_coeffs)
}

fn int_vec(len: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((lo..=hi).prop_map(|v| Rational::from_integer(v.into())), len)
}

/// Valid recurrences of order 2 or 3: integral or with fractional coefficients.
fn recurrence() -> impl Strategy<Value = Recurrence> {
    (2usize..=3, any::<bool>())
        .prop_flat_map(|(m, fractional)| {
            let coeffs = if fractional {
                prop::collection::vec(small_rational(), m).boxed()
            } else {
                int_vec(m, -3, 3).boxed()
            };
            (coeffs, int_vec(m, -4, 4))
        })
        .prop_filter_map("invalid recurrence", |(a, s)| Recurrence::new(a, s).ok())
}

fn preset(i: usize) -> Recurrence {
    PRESETS[i % PRESETS.len()].recurrence().unwrap()
}

fn shift() -> impl Strategy<Value = ShiftParams> {
    (prop_oneof![-3i64..=-1, 1i64..=3], -3i64..=3).prop_map(|(h, r)| ShiftParams::new(h, r))
}

fn normalized(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        for v in [&a + &b, &a - &c, &a * &b, (&a + &b) * &c] {
            prop_assert!(normalized(&v));
        }
        if !b.is_zero() {
            prop_assert!(normalized(&(&a / &b)));
        }
    }

    #[test]
    fn shift_round_trip(p in poly(6), c in small_rational()) {
        prop_assert_eq!(p.shift(&c).shift(&-&c), p);
    }

    #[test]
    fn shifted_eval(p in poly(6), c in small_rational(), x in small_rational()) {
        prop_assert_eq!(p.shift(&c).eval(&x), p.eval(&(&x + &c)));
    }

    #[test]
    fn product_evaluates_pointwise(p in poly(4), q in poly(4), x in small_rational()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn division_identity(p in poly(6), d in poly(3)) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, p);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn gcd_divides_both(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assume!(!c.is_zero());
        let (x, y) = (&a * &c, &b * &c);
        prop_assume!(!x.is_zero() || !y.is_zero());
        let g = x.gcd(&y);
        prop_assert!(x.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(y.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(g.degree() >= c.degree());
    }

    #[test]
    fn upper_triangular_solve_remultiplies(
        n in 1usize..=6,
        entries in prop::collection::vec(small_rational(), 36),
        diag in prop::collection::vec(nonzero_rational(), 6),
        b in prop::collection::vec(small_rational(), 6),
    ) {
        let mut m = Matrix::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, diag[i - 1].clone());
            for j in i + 1..=n {
                m.set(i, j, entries[(i - 1) * 6 + j - 1].clone());
            }
        }
        let b = &b[..n];
        let v = m.upper_tri_solve(b).unwrap();
        prop_assert_eq!(m.mul_vec(&v).unwrap(), b.to_vec());
    }

    #[test]
    fn newton_round_trip(sigma in prop::collection::vec(small_rational(), 1..=4)) {
        let p = power_sums_from_elementary(&sigma, sigma.len());
        prop_assert_eq!(elementary_from_power_sums(&p), sigma);
    }

    #[test]
    fn minimal_order_is_detected(rec in recurrence()) {
        let window: Vec<Rational> = (1..=2 * rec.order() as i64).map(|k| rec.term(k)).collect();
        prop_assert_eq!(berlekamp_massey(&window).length, rec.order());
    }

    #[test]
    fn shifted_recurrence_random(rec in recurrence(), l in prop_oneof![-3i64..=-1, 1i64..=3], q in -20i64..=20) {
        let m = rec.order() as i64;
        let e = rec.step_symmetrics(l);
        let rhs = (1..=m).fold(Rational::zero(), |acc, i| acc + e.e(i as usize) * rec.term((i - 1) * l + q));
        prop_assert_eq!(rec.term(m * l + q), rhs);
    }

    #[test]
    fn coefficient_recovery(rec in recurrence()) {
        let sym = rec.step_symmetrics(1);
        prop_assert_eq!(sym.values(), rec.coefficients());
    }

    #[test]
    fn fast_term_matches_stepping(rec in recurrence(), k in -300i64..=300) {
        prop_assert_eq!(rec.term_fast(k), rec.term(k));
    }

    #[test]
    fn backward_then_forward(rec in recurrence(), back in 1i64..=30) {
        let m = rec.order();
        let lo: Vec<Rational> = (0..m as i64).map(|i| rec.term(1 - back + i)).collect();
        let shifted = Recurrence::new(rec.coefficients().to_vec(), lo).unwrap();
        for i in 0..m as i64 {
            prop_assert_eq!(shifted.term(back + i + 1), rec.term(i + 1));
        }
    }

    #[test]
    fn telescoping(i in 0usize..5, w in poly(4), sh in shift(), n in 2u64..=60) {
        let rec = preset(i);
        let step = naive_sum(&rec, &w, sh, n) - naive_sum(&rec, &w, sh, n - 1);
        let k = n as i64;
        prop_assert_eq!(step, w.eval_i64(k) * rec.term(sh.h * k + sh.r));
    }

    #[test]
    fn closed_form_matches_oracle(rec in recurrence(), w in poly(4), sh in shift()) {
        let Ok(cf) = general_tuple(&rec, &w, sh) else {
            prop_assume!(false);
            unreachable!()
        };
        let m = rec.order();
        prop_assert!(cf.component(m + 1).degree_or_zero() == 0);
        for k in 1..=m {
            prop_assert!(cf.component(k).degree() <= w.degree());
        }
        if !w.is_zero() {
            prop_assert_eq!(cf.component(m).degree(), w.degree());
        }
        let bound = kernel_bound(m, cf.tuple_degree().max(w.degree_or_zero())) + 5;
        for n in 1..=bound {
            prop_assert_eq!(cf.eval_rhs(n as i64), naive_sum(&rec, &w, sh, n), "n = {}", n);
        }
        prop_assert!(verify_identity(&cf, 5).is_certified());
    }

    #[test]
    fn linearity(i in 0usize..5, sh in shift(), a in small_rational(), b in small_rational(), p in poly(4), q in poly(4)) {
        let rec = preset(i);
        let Ok(tp) = general_tuple(&rec, &p, sh) else {
            prop_assume!(false);
            unreachable!()
        };
        let tq = general_tuple(&rec, &q, sh).unwrap();
        let combined = general_tuple(&rec, &(&p.scale(&a) + &q.scale(&b)), sh).unwrap();
        for k in 1..=rec.order() + 1 {
            let expected = &tp.component(k).scale(&a) + &tq.component(k).scale(&b);
            prop_assert_eq!(combined.component(k), &expected);
        }
    }

    #[test]
    fn matrix_is_triangular_with_constant_diagonal(rec in recurrence(), d in 0usize..=5, h in prop_oneof![-3i64..=-1, 1i64..=3]) {
        let sym = rec.step_symmetrics(h);
        let Ok(m) = build_matrix(d, &sym) else {
            // only a vanishing diagonal is refused
            prop_assert!(sym.diagonal_value().is_zero());
            return Ok(());
        };
        prop_assert!(m.is_upper_triangular());
        for v in m.diagonal() {
            prop_assert_eq!(v, sym.diagonal_value());
        }
        let det = m.diagonal().into_iter().fold(Rational::one(), |acc, v| acc * v);
        prop_assert_eq!(det, num_traits::pow::pow(sym.diagonal_value(), d + 1));
    }

    #[test]
    fn perturbations_are_rejected(i in 0usize..5, sh in shift(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let rec = preset(i);
        let Ok(cf) = monomial_tuple(&rec, 1, sh) else {
            prop_assume!(false);
            unreachable!()
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let gamma = PerturbationTuple::random(&mut rng, rec.order(), 3, 5);
        let witness = uniqueness_probe(&cf, &gamma).unwrap();
        prop_assert!(witness <= kernel_bound(rec.order(), 3));
    }

    #[test]
    fn scaled_weights_keep_integer_and_rational_paths_equal(i in 0usize..5, sh in shift(), w in poly(3), n in 1u64..=40) {
        // the integer fast path handles fractional weights by clearing denominators
        let rec = preset(i);
        let rat = Recurrence::new(
            rec.coefficients().to_vec(),
            rec.initial().iter().map(|s| s * Rational::new(BigInt::from(1), BigInt::from(3))).collect(),
        ).unwrap();
        let lhs = naive_sum(&rat, &w, sh, n) * Rational::from_integer(3.into());
        prop_assert_eq!(lhs, naive_sum(&rec, &w, sh, n));
    }
}
