//! Certification is a finite exact check: (m+1)(D+1) consecutive values of n
//! decide the identity for all n. A wrong tuple is caught with both sides.

use lbsum::prelude::*;
use lbsum::verify::{kernel_bound, VerificationStatus};

fn main() {
    let pell = presets::get("pell").unwrap();
    let weight = Polynomial::from_i64s(&[1, 0, 2]);
    let cf = general_tuple(&pell, &weight, ShiftParams::new(-1, 3)).unwrap();
    let report = verify_identity(&cf, 0);
    println!(
        "bound (m+1)(D+1) = {}: certified = {}",
        kernel_bound(2, 2),
        report.is_certified()
    );

    let mut broken = cf.component(1).clone();
    broken = &broken + &Polynomial::from_i64s(&[0, 0, 1]);
    let wrong = cf.with_component(1, broken);
    if let VerificationStatus::CounterExample { n, lhs, rhs } = verify_identity(&wrong, 0).status {
        println!("perturbed P_1 fails at n = {n}: lhs = {lhs}, rhs = {rhs}");
    }
}
