use lbsum::closedform::{monomial_tuple, ShiftParams};
use lbsum::presets::PRESETS;
use lbsum::verify::{partial_sums, verify_identity};

const HS: [i64; 5] = [-2, -1, 1, 2, 3];
const RS: [i64; 3] = [-2, 0, 2];

#[test]
fn monomial_identity_first_hundred() {
    let mut configs = 0;
    for preset in PRESETS {
        let rec = preset.recurrence().unwrap();
        for h in HS {
            if !rec.check_shift(h).unwrap().is_valid() {
                continue;
            }
            for r in RS {
                for d in 0..=4 {
                    let cf = monomial_tuple(&rec, d, ShiftParams::new(h, r)).unwrap();
                    for (n, lhs) in (1..=100).zip(partial_sums(&rec, cf.weight(), cf.shift())) {
                        assert_eq!(cf.eval_rhs(n), lhs, "{} d={d} h={h} r={r} n={n}", preset.name);
                    }
                    configs += 1;
                }
            }
        }
    }
    assert_eq!(configs, 345);
}

#[test]
fn permuted_tuples_are_refuted() {
    for preset in PRESETS {
        let rec = preset.recurrence().unwrap();
        let m = rec.order();
        for h in [1, -1, 3] {
            let cf = monomial_tuple(&rec, 2, ShiftParams::new(h, 0)).unwrap();
            for i in 0..=m {
                for j in i + 1..=m {
                    let mut t = cf.tuple().to_vec();
                    t.swap(i, j);
                    if t == cf.tuple() {
                        continue;
                    }
                    let report = verify_identity(&cf.with_tuple(t).unwrap(), 0);
                    assert!(!report.is_certified(), "{} h={h} swap {i},{j}", preset.name);
                }
            }
        }
    }
}
