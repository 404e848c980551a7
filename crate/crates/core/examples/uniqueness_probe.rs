//! No nonzero tuple of polynomials can be added to a closed form without
//! breaking it; random perturbations are refuted within the kernel bound.

use std::collections::BTreeMap;

use lbsum::prelude::*;
use lbsum::verify::kernel_bound;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for name in ["fibonacci", "tribonacci"] {
        let rec = presets::get(name).unwrap();
        let cf = general_tuple(&rec, &Polynomial::x(), ShiftParams::new(2, 1)).unwrap();
        let mut witnesses = BTreeMap::new();
        for _ in 0..500 {
            let gamma = PerturbationTuple::random(&mut rng, rec.order(), 3, 5);
            *witnesses.entry(uniqueness_probe(&cf, &gamma).unwrap()).or_insert(0) += 1;
        }
        println!("{name}: witness n -> count {witnesses:?} (bound {})", kernel_bound(rec.order(), 3));
    }

    // a degenerate perturbation that only touches the constant tail
    let fib = presets::get("fibonacci").unwrap();
    let cf = general_tuple(&fib, &Polynomial::one(), ShiftParams::new(1, 0)).unwrap();
    let gamma = PerturbationTuple::new(2, vec![Polynomial::zero(), Polynomial::zero(), Polynomial::from_i64s(&[0, 1])]).unwrap();
    println!("adding n to P_3 alone fails at n = {}", uniqueness_probe(&cf, &gamma).unwrap());
}
