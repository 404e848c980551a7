//! A recurrence with rational coefficients, read from a problem document.

use lbsum::problem::ProblemSpec;
use lbsum::prelude::*;
use lbsum::render;

const DOC: &str = r#"{
  "recurrence": {"order": 3, "coefficients": ["1/2", "-1", "1"], "initial": ["1", "0", "2"]},
  "shift": {"h": 2, "r": 1},
  "weight": ["1", "0", "-1/3"]
}"#;

fn main() {
    let problem = ProblemSpec::from_json(DOC).unwrap().resolve().unwrap();
    let cf = general_tuple(&problem.recurrence, &problem.weight, problem.shift).unwrap();
    print!("{}", render::to_text(&cf));

    let report = verify_identity(&cf, 10);
    println!("checked n = {:?}: {:?}", report.checked, report.status);
    for n in [5u64, 25] {
        let lhs = naive_sum(&problem.recurrence, &problem.weight, problem.shift, n);
        println!("n = {n}: {lhs}");
        assert_eq!(lhs, cf.eval_rhs(n as i64));
    }
    println!("{}", serde_json::to_string_pretty(&cf.to_record()).unwrap());
}
