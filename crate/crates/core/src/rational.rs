//! Exact rational helpers shared across modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `(1/2)^k`
pub fn half_pow(k: usize) -> Q {
    Q::new(BigInt::one(), BigInt::one() << k)
}

/// `(-1/2)^k`
pub fn neg_half_pow(k: usize) -> Q {
    let h = half_pow(k);
    if k % 2 == 1 {
        -h
    } else {
        h
    }
}

/// Canonical text form: `p/q` with `q > 0` and `gcd(p, q) = 1`; integers
/// are printed without a denominator.
pub fn render(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Whether the reduced denominator of `x` divides `m`.
pub fn denominator_divides(x: &Q, m: &BigInt) -> bool {
    (m % x.denom()).is_zero()
}

pub fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}

/// Serde helper writing a rational as its canonical string.
pub fn serialize<S: serde::Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&render(x))
}
