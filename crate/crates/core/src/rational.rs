//! Exact rational carrier for orbital products and indices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Exact rational number: reduced, denominator > 0.
///
/// Backed by `num_rational::BigRational`, which maintains both invariants on
/// construction.
pub type ExactRational = BigRational;

pub fn ratio(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// Format as "n" or "n/d".
pub fn format_ratio(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "n" or "n/d".
pub fn parse_ratio(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(ExactRational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_positive() || d.is_negative() {
                Some(ExactRational::new(n, d))
            } else {
                None
            }
        }
    }
}

/// Lossy conversion for the final real-arithmetic constant assembly.
pub fn to_f64(r: &ExactRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Exact for all values arising here (small numerators/denominators),
    // and still well-behaved for large ones.
    match (i128::try_from(num), i128::try_from(den)) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let scale = BigInt::from(1u64 << 53);
            let scaled = (num * &scale) / den;
            let approx = i128::try_from(&scaled).map(|v| v as f64).unwrap_or(f64::MAX);
            approx / (1u64 << 53) as f64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let r = ratio(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_ratio(&r), "-5/2");
        assert_eq!(format_ratio(&from_int(7)), "7");
    }

    #[test]
    fn parse_round_trip() {
        let r = parse_ratio("29/8").unwrap();
        assert_eq!(format_ratio(&r), "29/8");
        assert_eq!(parse_ratio("29/0"), None);
        assert_eq!(format_ratio(&parse_ratio("-6/4").unwrap()), "-3/2");
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(to_f64(&ratio(5, 2)), 2.5);
        assert_eq!(to_f64(&ratio(29, 8)), 3.625);
    }
}
