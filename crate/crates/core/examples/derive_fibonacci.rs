//! Classic Fibonacci sums and their closed forms.

use lbsum::prelude::*;
use lbsum::render;

fn main() {
    let fib = presets::get("fibonacci").unwrap();
    let cases = [
        ("sum of F_k", Polynomial::one(), ShiftParams::new(1, 0)),
        ("sum of k F_k", Polynomial::x(), ShiftParams::new(1, 0)),
        ("sum of F_2k", Polynomial::one(), ShiftParams::new(2, 0)),
        ("sum of k^3 F_(3k-1)", Polynomial::from_i64s(&[0, 0, 0, 1]), ShiftParams::new(3, -1)),
    ];
    for (label, weight, shift) in cases {
        let cf = general_tuple(&fib, &weight, shift).unwrap();
        println!("# {label}");
        print!("{}", render::to_text(&cf));
        assert!(verify_identity(&cf, 0).is_certified());
        println!();
    }
}
