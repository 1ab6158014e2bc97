//! Exact rational scalars and their fixed textual rendering.
//!
//! Integers render as `p`, everything else as `p/q` in lowest terms with a
//! positive denominator. Parsing accepts both forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn big(v: BigInt) -> Q {
    Q::from_integer(v)
}

pub fn frac(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

pub fn render(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Q> {
    let bad = || Error::ParseRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(p, q))
        }
        None => Ok(big(s.parse().map_err(|_| bad())?)),
    }
}

/// Closest `f64`; exact for integers below 2^53.
pub fn to_f64(q: &Q) -> f64 {
    // Scale so both parts fit comfortably before dividing.
    let n = q.numer();
    let d = q.denom();
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift_n = (nb - 1000).max(0);
    let shift_d = (db - 1000).max(0);
    let nf = big_to_f64(&(n >> shift_n as usize));
    let df = big_to_f64(&(d >> shift_d as usize));
    nf / df * 2f64.powi((shift_n - shift_d) as i32)
}

fn big_to_f64(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(if v.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

pub fn is_one(q: &Q) -> bool {
    q.is_one()
}
