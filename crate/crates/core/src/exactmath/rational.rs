use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExactError;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
///
/// `Display` renders `p/q`, or just `p` when `q = 1`; [`parse_rational`]
/// accepts the same two forms.
pub type Rational = num_rational::BigRational;

pub fn rational_from_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"`. Surrounding whitespace is ignored; a zero
/// denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let err = || ExactError::ParseRational(s.to_string());
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| err()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Parses a comma-separated list such as `"0,1/2,-3"`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, ExactError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Binomial coefficient C(n, k) as an exact rational; zero when k > n.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rational("7").unwrap(), rational_from_i64(7));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), Rational::new(BigInt::from(-2), BigInt::from(3)));
        assert_eq!(parse_rational("3/-9").unwrap(), Rational::new(BigInt::from(-1), BigInt::from(3)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "5", "-1/2", "22/7"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        // zero is normalized to 0/1
        let z = Rational::new(BigInt::from(0), BigInt::from(-5));
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn list_parsing() {
        let v = parse_rational_list("0,1/2,-3").unwrap();
        assert_eq!(v.len(), 3);
        assert!(parse_rational_list("").unwrap().is_empty());
        assert!(parse_rational_list("1,,2").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), rational_from_i64(10));
        assert_eq!(binomial(0, 0), rational_from_i64(1));
        assert_eq!(binomial(3, 4), rational_from_i64(0));
        assert_eq!(binomial(10, 10), rational_from_i64(1));
    }
}
