//! Every progression s_{hk+r} satisfies its own order-m recurrence whose
//! coefficients e_i(h) come from power sums, no roots needed.

use lbsum::prelude::*;

fn main() {
    for name in ["tribonacci", "gauss-alt"] {
        let rec = presets::get(name).unwrap();
        println!("{name}: characteristic polynomial {}", rec.characteristic_polynomial());
        for h in -4..=4 {
            if h == 0 {
                continue;
            }
            let sym = rec.step_symmetrics(h);
            let e: Vec<String> = sym.values().iter().map(ToString::to_string).collect();
            let validity = rec.check_shift(h).unwrap();
            println!(
                "  h = {h:>2}: e = ({})  Q_h = {}  distinct: {}  no power is 1: {}",
                e.join(", "),
                sym.characteristic_polynomial(),
                validity.distinct_powers,
                validity.no_power_is_one
            );
        }
    }
}
