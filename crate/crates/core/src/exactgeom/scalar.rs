//! Exact rational scalars and small integer-vector helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use super::GeomError;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"` or `"p/q"`. Whitespace and zero denominators are rejected.
pub fn parse_scalar(s: &str) -> Result<Scalar, GeomError> {
    let bad = || GeomError::BadRational(s.to_string());
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Scalar::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
    }
}

/// `"n"` for integers, `"p/q"` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

pub fn dot_int(a: &[Scalar], b: &[i64]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, &y)| acc + x * int(y))
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// The primitive integer vector on the ray through `v`, or `None` for the zero vector.
pub fn primitive_direction(v: &[Scalar]) -> Option<Vec<i64>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(
        ints.iter()
            .map(|x| {
                (x / &g)
                    .to_i64()
                    .expect("direction coordinate exceeds i64 range")
            })
            .collect(),
    )
}

/// Divides out the gcd of an integer vector; the zero vector is returned unchanged.
pub fn make_primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn is_primitive(v: &[i64]) -> bool {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x)) == 1
}

pub fn to_scalars(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn sign(s: &Scalar) -> i8 {
    if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar("-4").unwrap(), int(-4));
        assert_eq!(parse_scalar("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar("1/-2").unwrap(), ratio(-1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar(" 1").is_err());
        assert_eq!(format_scalar(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
    }

    #[test]
    fn primitive() {
        assert_eq!(
            primitive_direction(&[ratio(1, 2), ratio(-3, 4)]),
            Some(vec![2, -3])
        );
        assert_eq!(primitive_direction(&[int(0), int(-6)]), Some(vec![0, -1]));
        assert_eq!(primitive_direction(&[int(0), int(0)]), None);
        assert_eq!(make_primitive(&[4, -6]), vec![2, -3]);
        assert!(is_primitive(&[2, -3]));
        assert!(!is_primitive(&[0, 0]));
    }
}
