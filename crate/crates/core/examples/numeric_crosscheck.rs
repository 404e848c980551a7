//! The spectral picture: roots, Binet weights, and agreement with the exact
//! pipeline.

use lbsum::numeric::{crosscheck_symmetrics, relative_error, SpectralData, DEFAULT_PRECISION};
use lbsum::prelude::*;

fn main() {
    for name in ["fibonacci", "pell", "tribonacci", "gauss-alt"] {
        let rec = presets::get(name).unwrap();
        let sd = SpectralData::compute(&rec, DEFAULT_PRECISION).unwrap();
        println!("{name} ({} bits)", sd.precision);
        for (r, l) in sd.roots.iter().zip(&sd.weights) {
            println!("  r = {:+.15} {:+.15}i   L = {:+.15} {:+.15}i", r.re_f64(), r.im_f64(), l.re_f64(), l.im_f64());
        }
        let worst = (-60..=60)
            .map(|k| relative_error(&sd.explicit_term(k), &rec.term(k)))
            .fold(0.0, f64::max);
        let agree = (1..=3).all(|l| crosscheck_symmetrics(&rec, l, 1e-9).unwrap());
        println!("  explicit formula max relative error {worst:.2e}; step symmetrics agree: {agree}");
    }
}
