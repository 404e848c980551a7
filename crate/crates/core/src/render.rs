//! Text and LaTeX rendering of closed forms.

use num_traits::{One, Signed, Zero};

use crate::closedform::ClosedForm;
use crate::exactmath::{Polynomial, Rational};

/// `a*k + b` style linear index, e.g. `2k+1`, `k`, `-k-2`, `n+3`.
fn linear_index(scale: i64, var: &str, offset: i64) -> String {
    let mut s = match scale {
        0 => String::new(),
        1 => var.to_string(),
        -1 => format!("-{var}"),
        c => format!("{c}{var}"),
    };
    if s.is_empty() {
        return offset.to_string();
    }
    if offset > 0 {
        s.push_str(&format!("+{offset}"));
    } else if offset < 0 {
        s.push_str(&offset.to_string());
    }
    s
}

/// Subscript of `s_{hk+r}` on the summation side.
pub fn lhs_index(h: i64, r: i64) -> String {
    linear_index(h, "k", r)
}

/// Subscript of `s_{(n+k)h+r}` for a concrete `k`, with `h` and `r`
/// substituted: `n+2` for `h = 1`, `2(n+1)+1`, `-(n+1)`.
pub fn rhs_index(k: usize, h: i64, r: i64) -> String {
    if h == 1 {
        return linear_index(1, "n", k as i64 + r);
    }
    let inner = format!("(n+{k})");
    let mut s = match h {
        -1 => format!("-{inner}"),
        _ => format!("{h}{inner}"),
    };
    if r > 0 {
        s.push_str(&format!("+{r}"));
    } else if r < 0 {
        s.push_str(&r.to_string());
    }
    s
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
    }
}

/// Polynomial in `var` with `\frac` coefficients, highest degree first.
pub fn latex_polynomial(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coef = if i > 0 && abs.is_one() {
            String::new()
        } else {
            latex_rational(&abs)
        };
        out.push_str(&coef);
        match i {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{{{i}}}")),
        }
    }
    out
}

/// Joins `coefficient * symbol` terms into a signed sum. Each coefficient is
/// rendered by `poly`; zero coefficients are dropped.
fn signed_sum(terms: &[(Polynomial, String)], poly: impl Fn(&Polynomial) -> String, mul: &str) -> String {
    let mut out = String::new();
    for (p, sym) in terms {
        if p.is_zero() {
            continue;
        }
        let is_const = p.degree() == Some(0);
        let c = p.coeff(0);
        let (neg, body) = if is_const {
            let neg = c.is_negative();
            let abs = Polynomial::constant(c.abs());
            let body = match (sym.is_empty(), c.abs().is_one()) {
                (true, _) => poly(&abs),
                (false, true) => sym.clone(),
                (false, false) => format!("{}{mul}{sym}", poly(&abs)),
            };
            (neg, body)
        } else if sym.is_empty() {
            (false, format!("({})", poly(p)))
        } else {
            (false, format!("({}){mul}{sym}", poly(p)))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn rhs_terms(cf: &ClosedForm, sym: impl Fn(String) -> String) -> Vec<(Polynomial, String)> {
    let m = cf.recurrence().order();
    let sh = cf.shift();
    let mut terms: Vec<(Polynomial, String)> = (1..=m)
        .map(|k| (cf.component(k).clone(), sym(rhs_index(k, sh.h, sh.r))))
        .collect();
    terms.push((cf.component(m + 1).clone(), String::new()));
    terms
}

/// Plain-text identity plus one `P_k = ...` line per component.
pub fn to_text(cf: &ClosedForm) -> String {
    let sh = cf.shift();
    let w = cf.weight();
    let factor = if w.degree() == Some(0) && w.coeff(0).is_one() {
        String::new()
    } else {
        format!("({}) * ", w.display_in("k"))
    };
    let lhs = format!("sum_{{k=1}}^{{n}} {factor}s({})", lhs_index(sh.h, sh.r));
    let rhs = signed_sum(&rhs_terms(cf, |i| format!("s({i})")), |p| p.display_in("n"), " * ");
    let mut out = format!("{lhs} = {rhs}\n");
    for (k, p) in cf.tuple().iter().enumerate() {
        out.push_str(&format!("P_{} = {}\n", k + 1, p.display_in("n")));
    }
    out
}

/// LaTeX identity laid out as `\sum_{k=1}^{n} P(k) s_{hk+r} = \sum_k P_k(n) s_{(n+k)h+r} + P_{m+1}(n)`.
pub fn to_latex(cf: &ClosedForm) -> String {
    let sh = cf.shift();
    let weight = cf.weight();
    let w = if weight.degree().unwrap_or(0) == 0 && !weight.is_zero() {
        if weight.coeff(0).is_one() {
            String::new()
        } else {
            latex_polynomial(weight, "k")
        }
    } else {
        format!("\\left({}\\right)", latex_polynomial(weight, "k"))
    };
    let sep = if w.is_empty() { "" } else { " " };
    let lhs = format!("\\sum_{{k=1}}^{{n}} {w}{sep}s_{{{}}}", lhs_index(sh.h, sh.r));
    let rhs = signed_sum(
        &rhs_terms(cf, |i| format!("s_{{{i}}}")),
        |p| latex_polynomial(p, "n"),
        " ",
    );
    format!("{lhs} = {rhs}")
}
