//! What makes a recurrence admissible, and what the validator says otherwise.

use lbsum::exactmath::rational_from_i64;
use lbsum::recurrence::berlekamp_massey;
use lbsum::prelude::*;

fn main() {
    let attempts: [(&str, &[i64], &[i64]); 5] = [
        ("fibonacci", &[1, 1], &[1, 1]),
        ("powers of 2 posing as order 2", &[-2, 3], &[1, 2]),
        ("double root at 1", &[-1, 2], &[1, 3]),
        ("a_1 = 0", &[0, 1], &[1, 1]),
        ("zero window", &[1, 1], &[0, 0]),
    ];
    for (label, a, s) in attempts {
        match Recurrence::from_i64s(a, s) {
            Ok(rec) => println!("{label}: ok, s_-5..s_5 = {:?}", (-5..=5).map(|k| rec.term(k).to_string()).collect::<Vec<_>>()),
            Err(e) => println!("{label}: {e}"),
        }
    }
    let seq: Vec<Rational> = [1, 2, 4, 8, 16, 32].map(rational_from_i64).to_vec();
    let lc = berlekamp_massey(&seq);
    let connection = Polynomial::from_coeffs(lc.connection);
    println!("linear complexity of 1, 2, 4, ...: {} (connection {connection})", lc.length);
}
