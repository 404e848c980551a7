//! Exact closed forms for polynomial-weighted sums over linear recurrences.
//!
//! Given a recurrence `s_{k+m} = a_m s_{k+m-1} + ... + a_1 s_k`, a shift
//! `(h, r)` and a weight polynomial `P`, [`closedform::general_tuple`]
//! builds the unique tuple `(P_1, ..., P_{m+1})` with
//!
//! ```text
//! sum_{k=1}^{n} P(k) s_{hk+r} = sum_{k=1}^{m} P_k(n) s_{(n+k)h+r} + P_{m+1}(n)   for all n >= 1
//! ```
//!
//! and [`verify::verify_identity`] certifies it with a finite exact check.
//!
//! ```
//! use lbsum::prelude::*;
//!
//! let fib = presets::get("fibonacci").unwrap();
//! let cf = general_tuple(&fib, &Polynomial::x(), ShiftParams::new(1, 0)).unwrap();
//! // sum k F_k = -F_{n+1} + (n - 1) F_{n+2} + 2
//! assert_eq!(cf.component(2), &Polynomial::from_i64s(&[-1, 1]));
//! assert!(verify_identity(&cf, 0).is_certified());
//! ```

pub mod cli;
pub mod closedform;
pub mod exactmath;
pub mod numeric;
pub mod presets;
pub mod problem;
pub mod recurrence;
pub mod render;
pub mod verify;

pub mod prelude {
    pub use crate::closedform::{general_tuple, monomial_tuple, ClosedForm, ShiftParams};
    pub use crate::exactmath::{rational_from_i64, Polynomial, Rational};
    pub use crate::presets;
    pub use crate::recurrence::Recurrence;
    pub use crate::verify::{naive_sum, uniqueness_probe, verify_identity, PerturbationTuple};
}
