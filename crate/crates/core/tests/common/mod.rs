#![allow(dead_code)]

use linial::arith::{gcd, rad};
use linial::poly::{congruent_mod_power, cyclotomic_type, divides, moment_divisibility, residue_split, sturm_count_real_roots};
use linial::rational::{frac, int};
use linial::rootverify::find_roots;
use linial::{OperatorPoly, QuasiPoly, RatPoly, Q};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const SEED: [u8; 32] = *b"linial-arrangements-fixed-seed!!";
pub const CASES: u32 = 256;

/// Runs `test` on `CASES` inputs drawn with the fixed seed; `Err` carries the
/// shrunk counterexample.
pub fn check<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<u32, String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED));
    runner.run(&strategy, test).map(|_| CASES).map_err(|e| e.to_string())
}

pub fn small_rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(RatPoly::new)
}

pub fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-bound..=bound, 0..=max_deg + 1).prop_map(|c| RatPoly::from_ints(&c))
}

pub fn quasi(max_period: usize, max_deg: usize) -> impl Strategy<Value = QuasiPoly> {
    (1..=max_period)
        .prop_flat_map(move |n| prop::collection::vec(poly(max_deg), n))
        .prop_map(|c| QuasiPoly::new(c).unwrap())
}

fn same_values(a: &QuasiPoly, b: &QuasiPoly, ts: std::ops::Range<i64>) -> Result<(), TestCaseError> {
    if let Some(t) = a.first_difference(b, ts) {
        return Err(TestCaseError::fail(format!("values differ at t = {t}")));
    }
    Ok(())
}

pub fn tilde_gcd() -> Result<u32, String> {
    check((quasi(12, 4), 1i64..=40), |(f, k)| {
        let n = f.minimal_period().period() as i64;
        let a = f.tilde(k);
        let b = f.tilde(gcd(k, n));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(gcd(k, n) as usize % a.period(), 0);
        Ok(())
    })
}

pub fn tilde_shift_by_period() -> Result<u32, String> {
    check((quasi(12, 4), 1i64..=40), |(f, k)| {
        let n = f.minimal_period().period() as i64;
        prop_assert_eq!(f.tilde(k), f.tilde(k + n));
        Ok(())
    })
}

pub fn tilde_linear() -> Result<u32, String> {
    check((quasi(6, 3), quasi(6, 3), 1i64..=12), |(g, h, k)| {
        let lhs = (&g + &h).tilde(k);
        let rhs = &g.tilde(k) + &h.tilde(k);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn sbar_linear_and_nilpotent() -> Result<u32, String> {
    let op_strategy = (poly(4), 1usize..=4).prop_map(|(c, m)| OperatorPoly::new(c, m).unwrap());
    check((quasi(6, 4), quasi(6, 4), op_strategy), |(g, h, op)| {
        let lhs = (&g + &h).apply_sbar(&op);
        let rhs = &g.apply_sbar(&op) + &h.apply_sbar(&op);
        prop_assert_eq!(lhs, rhs);
        let d = h.degree().finite().unwrap_or(0);
        let kill = OperatorPoly::from_poly(RatPoly::from_ints(&[-1, 1]).pow(d + 1));
        prop_assert_eq!(h.apply_sbar(&kill), QuasiPoly::zero());
        Ok(())
    })
}

pub fn averaging() -> Result<u32, String> {
    let input = (quasi(6, 3), poly(3), 1usize..=6, 1usize..=3);
    check(input, |(f, g, m, c_mult)| {
        let n = f.minimal_period().period();
        let l = f.degree().finite().unwrap_or(0);
        let c = c_mult * n / gcd(m as i64, n as i64) as usize;
        let coeffs = &cyclotomic_type(c).pow(l + 1) * &g;
        let op = OperatorPoly::new(coeffs, m).unwrap();
        let lhs = f.apply_s(&op);
        let rhs = f.tilde(gcd(m as i64, n as i64)).apply_sbar(&op);
        same_values(&lhs, &rhs, 0..4 * n as i64)
    })
}

pub fn congruence_kernel() -> Result<u32, String> {
    let input = (1usize..=5, prop::collection::vec(-9i64..=9, 1..=6), 0usize..=7, poly(5));
    check(input, |(l, f_low, j, h)| {
        let mut fc = f_low.clone();
        fc.resize(l, 0);
        fc.push(1 + (f_low[0].rem_euclid(3)));
        let f = QuasiPoly::from_poly(RatPoly::from_ints(&fc));
        let g = &RatPoly::from_ints(&[1, -1]).pow(j) * &h;
        prop_assume!(!g.is_zero() && g.degree() <= linial::Degree::Finite(12));
        let kills = f.apply_s(&OperatorPoly::from_poly(g.clone())) == QuasiPoly::zero();
        let divisible = divides(&RatPoly::from_ints(&[1, -1]).pow(l + 1), &g).unwrap().is_some();
        prop_assert_eq!(kills, divisible);
        Ok(())
    })
}

pub fn moment_division() -> Result<u32, String> {
    let input = (1usize..=12, 0usize..=8, 0usize..=9, int_poly(20, 5));
    check(input, |(n, l, j, h)| {
        prop_assume!(!h.is_zero());
        let base = cyclotomic_type(n);
        let mut j = j.min(l + 1);
        while j > 0 && j * (n - 1) + h.degree().finite().unwrap() > 50 {
            j -= 1;
        }
        let g = &base.pow(j) * &h;
        let by_moments = moment_divisibility(&g, n, l);
        let by_division = divides(&base.pow(l + 1), &g).unwrap().is_some();
        prop_assert_eq!(by_moments, by_division);
        Ok(())
    })
}

pub fn residue_split_sums() -> Result<u32, String> {
    check((poly(30), 1usize..=12), |(g, n)| {
        let pieces = residue_split(&g, n);
        prop_assert_eq!(pieces.len(), n);
        let total = pieces.iter().fold(RatPoly::zero(), |a, p| &a + p);
        prop_assert_eq!(&total, &g);
        for (j, p) in pieces.iter().enumerate() {
            for (k, c) in p.coeffs().iter().enumerate() {
                prop_assert!(c == &int(0) || k % n == j);
            }
        }
        Ok(())
    })
}

pub fn congruence_is_division() -> Result<u32, String> {
    check((poly(8), 0usize..=4, poly(4), 1usize..=6), |(g1, j, h, k)| {
        let g2 = &g1 + &(&RatPoly::from_ints(&[1, -1]).pow(j) * &h);
        let by_taylor = congruent_mod_power(&g1, &g2, k);
        let by_division = divides(&RatPoly::from_ints(&[1, -1]).pow(k), &(&g1 - &g2)).unwrap().is_some();
        prop_assert_eq!(by_taylor, by_division);
        Ok(())
    })
}

pub fn cyclotomic_product() -> Result<u32, String> {
    check((0usize..=12, 0usize..=12), |(a, b)| {
        let lhs = cyclotomic_type(a * b);
        let rhs = if a == 0 {
            RatPoly::zero()
        } else {
            &cyclotomic_type(a) * &cyclotomic_type(b).compose_power(a)
        };
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn sturm_matches_numeric() -> Result<u32, String> {
    check(int_poly(10, 20), |p| {
        prop_assume!(p.degree() >= linial::Degree::Finite(1) && p.is_squarefree());
        let exact = sturm_count_real_roots(&p).unwrap();
        let roots = find_roots(&p).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let numeric = roots.iter().filter(|z| z.im.abs() < 1e-8).count();
        prop_assert_eq!(exact, numeric);
        Ok(())
    })
}

/// Exhaustive over `n, d ≤ 200`, `m ≤ n`; returns the number of triples.
pub fn invgcd_exhaustive() -> Result<u32, String> {
    let mut count = 0u32;
    for n in 1..=200i64 {
        let r = rad(n as u64) as i64;
        for d in 0..=200i64 {
            let g = gcd(d, n);
            for m in 0..=n {
                if gcd(d + m * r * g, n) != g {
                    return Err(format!("n = {n}, d = {d}, m = {m}"));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}
