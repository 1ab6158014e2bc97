//! Small integer helpers shared by the period bookkeeping.

use num_integer::Integer;

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: usize, b: usize) -> usize {
    a.lcm(&b)
}

/// Product of the distinct primes dividing `n`; `rad(1) = 1`.
pub fn rad(n: u64) -> u64 {
    let mut n = n;
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out *= p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out *= n;
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Non-negative residue of `t` modulo `n`.
pub fn residue(t: i64, n: usize) -> usize {
    t.rem_euclid(n as i64) as usize
}
