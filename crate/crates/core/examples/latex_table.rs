//! LaTeX for sum k^d L_{2k+1}, d = 0..4.

use lbsum::prelude::*;
use lbsum::render::to_latex;

fn main() {
    let lucas = presets::get("lucas").unwrap();
    for d in 0..=4 {
        let cf = monomial_tuple(&lucas, d, ShiftParams::new(2, 1)).unwrap();
        println!("{}\\\\", to_latex(&cf));
    }
}
