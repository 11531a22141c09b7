//! Exact rational scalars and points.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type Point3 = [Q; 3];
pub type Point2 = [Q; 2];

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn point(x: i64, y: i64, z: i64) -> Point3 {
    [q(x), q(y), q(z)]
}

pub fn add(a: &Point3, b: &Point3) -> Point3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub(a: &Point3, b: &Point3) -> Point3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn scale(a: &Point3, s: &Q) -> Point3 {
    [&a[0] * s, &a[1] * s, &a[2] * s]
}

pub fn dot(a: &Point3, b: &Point3) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn cross(a: &Point3, b: &Point3) -> Point3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn norm2(a: &Point3) -> Q {
    dot(a, a)
}

pub fn is_zero_vec(a: &Point3) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn centroid(points: &[&Point3]) -> Point3 {
    let n = q(points.len() as i64);
    let mut acc = [Q::zero(), Q::zero(), Q::zero()];
    for p in points {
        acc = add(&acc, p);
    }
    [&acc[0] / &n, &acc[1] / &n, &acc[2] / &n]
}

/// Rational `r` with `0 ≤ r ≤ √x` and `√x − r < √x · 2^(1−bits)`.
///
/// Exactly homogeneous under scaling `x` by powers of four.
pub fn sqrt_floor(x: &Q, bits: u32) -> Q {
    assert!(!x.is_negative(), "square root of a negative number");
    if x.is_zero() {
        return Q::zero();
    }
    let four = q(4);
    let mut y = x.clone();
    let mut e: i64 = 0;
    while y >= four {
        y /= &four;
        e += 1;
    }
    while y < Q::one() {
        y *= &four;
        e -= 1;
    }
    let shifted = (y * Q::from_integer(BigInt::one() << (2 * bits))).floor().to_integer();
    let root = Q::new(shifted.sqrt(), BigInt::one() << bits);
    if e >= 0 {
        root * Q::from_integer(BigInt::one() << e)
    } else {
        root / Q::from_integer(BigInt::one() << (-e))
    }
}

/// Parses `p/q`, an integer, or a decimal literal with optional exponent,
/// without rounding.
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Q::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, fracpart) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && fracpart.is_empty() {
        return None;
    }
    if !int.chars().chain(fracpart.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int}{fracpart}").parse().ok()?;
    let shift = exp - fracpart.len() as i32;
    let ten = BigInt::from(10);
    let mut v = Q::from_integer(digits);
    if shift >= 0 {
        v *= Q::from_integer(num_traits::pow(ten, shift as usize));
    } else {
        v /= Q::from_integer(num_traits::pow(ten, (-shift) as usize));
    }
    Some(if neg { -v } else { v })
}

/// Decimal rendering with `digits` fractional digits, rounding half away
/// from zero.
pub fn format_decimal(x: &Q, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x.abs() * Q::from_integer(scale.clone());
    let rounded = (scaled + frac(1, 2)).floor().to_integer();
    let (int, rem) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    let rem = rem.to_str_radix(10);
    format!("{sign}{int}.{}{rem}", "0".repeat(digits - rem.len()))
}

/// `p/q` form, or a plain integer.
pub fn format_exact(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn sign(x: &Q) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4"), Some(frac(3, 4)));
        assert_eq!(parse_rational("-1.25"), Some(frac(-5, 4)));
        assert_eq!(parse_rational("7"), Some(q(7)));
        assert_eq!(parse_rational(".5"), Some(frac(1, 2)));
        assert_eq!(parse_rational("2.5e-1"), Some(frac(1, 4)));
        assert_eq!(parse_rational("0.1"), Some(frac(1, 10)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("-"), None);
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(format_decimal(&frac(1, 3), 4), "0.3333");
        assert_eq!(format_decimal(&frac(-2, 3), 2), "-0.67");
        assert_eq!(format_decimal(&frac(5, 2), 0), "3");
        assert_eq!(format_decimal(&frac(1, 200), 3), "0.005");
        assert_eq!(format_decimal(&frac(-1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&q(12), 1), "12.0");
    }

    #[test]
    fn sqrt_bounds_and_scaling() {
        for (n, d) in [(2, 1), (1, 3), (10_000, 7), (1, 1_000_000)] {
            let x = frac(n, d);
            let r = sqrt_floor(&x, 40);
            assert!(&r * &r <= x);
            let hi = &r * (q(1) + frac(1, 1 << 30));
            assert!(&hi * &hi > x);
            assert_eq!(sqrt_floor(&(&x * q(4)), 40), &r * q(2));
        }
        assert_eq!(sqrt_floor(&q(9), 10), q(3));
    }

    #[test]
    fn vector_identities() {
        let a = point(1, 2, 3);
        let b = point(-4, 0, 5);
        let c = cross(&a, &b);
        assert!(dot(&c, &a).is_zero() && dot(&c, &b).is_zero());
        assert_eq!(centroid(&[&a, &b]), [frac(-3, 2), q(1), q(4)]);
    }
}
