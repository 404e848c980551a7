//! Closed form vs the naive loop at large n.
//!
//! cargo run --release --example fast_eval -- 200000

use std::time::Instant;

use lbsum::prelude::*;

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let fib = presets::get("fibonacci").unwrap();
    let (weight, shift) = (Polynomial::from_i64s(&[0, 0, 1]), ShiftParams::new(1, 0));

    let t = Instant::now();
    let closed = general_tuple(&fib, &weight, shift).unwrap().eval_rhs(n as i64);
    let closed_time = t.elapsed();

    let t = Instant::now();
    let naive = naive_sum(&fib, &weight, shift, n);
    let naive_time = t.elapsed();

    assert_eq!(closed, naive);
    let digits = closed.numer().to_string().len();
    println!("sum_{{k<={n}}} k^2 F_k has {digits} digits");
    println!(
        "closed {closed_time:?}, naive {naive_time:?} ({:.0}x)",
        naive_time.as_secs_f64() / closed_time.as_secs_f64()
    );
}
