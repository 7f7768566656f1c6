//! Exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // huge numerator/denominator: scale down by the bit length difference
        let n = x.numer().bits() as i64;
        let d = x.denom().bits() as i64;
        let shift = (n.max(d) - 900).max(0) as u64;
        let nn = (x.numer() >> shift).to_f64().unwrap_or(0.0);
        let dd = (x.denom() >> shift).to_f64().unwrap_or(1.0);
        nn / dd
    })
}

/// Smallest power-of-two-free rational approximation is not needed; this is a
/// plain conversion of a finite float into an exact rational.
pub fn from_f64(x: f64) -> Q {
    Q::from_float(x).unwrap_or_else(Q::zero)
}

pub fn pow(x: &Q, k: u32) -> Q {
    let mut r = Q::one();
    for _ in 0..k {
        r *= x;
    }
    r
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// "numerator/denominator" (or just the integer).
pub fn fmt(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Q::new(a, b))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_roundtrip() {
        for x in [qf(-27, 4), q(0), q(17), qf(1, 3)] {
            assert_eq!(parse(&fmt(&x)).unwrap(), x);
        }
        assert_eq!(fmt(&qf(-27, 4)), "-27/4");
        assert!(parse("1/0").is_none());
    }

    #[test]
    fn float_conv() {
        assert_eq!(to_f64(&qf(1, 4)), 0.25);
        assert_eq!(from_f64(0.5), qf(1, 2));
    }
}
