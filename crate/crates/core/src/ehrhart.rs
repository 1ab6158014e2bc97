//! Ehrhart quasi-polynomials of closed fundamental alcoves.
//!
//! Lattice points of the `q`-th dilate of the closed alcove, written in the
//! fundamental coweight basis, are the `x ∈ Z^ℓ_{≥0}` with
//! `c_1 x_1 + ... + c_ℓ x_ℓ ≤ q`. Their generating function is
//! `1 / Π_{i=0}^{ℓ} (1 − x^{c_i})`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::poly::{cyclotomic_polynomial, cyclotomic_type, interpolate, RatPoly};
use crate::quasipoly::{OperatorPoly, QuasiPoly};
use crate::rational::{self, Q};
use crate::rootsystem::{catalog, Family, Label, RootSystemInfo};

/// `#{x ∈ Z^ℓ_{≥0} : Σ c_i x_i ≤ q}` by bounded enumeration of each coordinate.
pub fn denumerant_count(info: &RootSystemInfo, q: u64) -> BigInt {
    denumerant_counts(info, q).pop().expect("q + 1 entries")
}

/// Counts for every dilation `0..=q_max`.
///
/// Loops over `x_ℓ, ..., x_1` in turn; the counts for each trailing block of
/// coordinates are shared across budgets so the enumeration is polynomial.
pub fn denumerant_counts(info: &RootSystemInfo, q_max: u64) -> Vec<BigInt> {
    let marks = &info.marks[1..];
    let size = q_max as usize + 1;
    // tail[b] = number of choices of the coordinates after the current one within budget b
    let mut tail: Vec<u128> = vec![1; size];
    for &c in marks.iter().rev() {
        let c = c as usize;
        let next: Vec<u128> = (0..size)
            .map(|b| (0..=b / c).map(|x| tail[b - c * x]).fold(0u128, |acc, v| acc.checked_add(v).expect("count overflow")))
            .collect();
        tail = next;
    }
    tail.into_iter().map(BigInt::from).collect()
}

/// `1 − x` for `d = 1`, the cyclotomic polynomial otherwise; constant term 1 in both cases.
pub fn unit_root_factor(d: usize) -> RatPoly {
    if d == 1 {
        RatPoly::from_ints(&[1, -1])
    } else {
        cyclotomic_polynomial(d)
    }
}

/// First `count` coefficients of the power series `num / den`, `den(0) ≠ 0`.
pub fn series_coefficients(num: &RatPoly, den: &RatPoly, count: usize) -> Result<Vec<Q>> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::Precondition("denominator vanishes at 0".into()));
    }
    let dd = den.coeffs();
    let mut out: Vec<Q> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = num.coeff(k);
        for j in 1..dd.len().min(k + 1) {
            if !dd[j].is_zero() {
                acc -= &dd[j] * &out[k - j];
            }
        }
        out.push(acc / &d0);
    }
    Ok(out)
}

/// Recover a quasi-polynomial of the given period and degree bound from its
/// values at `0, 1, 2, ...`; one extra node per residue must also match.
pub fn quasipoly_from_values(values: &[Q], period: usize, degree: usize) -> Result<QuasiPoly> {
    assert!(values.len() >= period * (degree + 2), "not enough values");
    let mut constituents = Vec::with_capacity(period);
    for r in 0..period {
        let pts: Vec<(Q, Q)> = (0..=degree)
            .map(|j| {
                let t = r + j * period;
                (rational::int(t as i64), values[t].clone())
            })
            .collect();
        let p = interpolate(&pts);
        let t = r + (degree + 1) * period;
        let found = p.eval_int(t as i64);
        if found != values[t] {
            return Err(Error::InterpolationMismatch {
                t,
                expected: rational::render(&values[t]),
                found: rational::render(&found),
            });
        }
        constituents.push(p);
    }
    QuasiPoly::new(constituents)
}

/// `L_Φ` with period `ρ`, interpolated from the generating-function series.
pub fn ehrhart_quasi(info: &RootSystemInfo) -> Result<QuasiPoly> {
    let den = info
        .marks
        .iter()
        .fold(RatPoly::one(), |acc, &c| &acc * &(&RatPoly::one() - &RatPoly::monomial(Q::one(), c as usize)));
    let rho = info.period_rho as usize;
    let l = info.rank();
    let values = series_coefficients(&RatPoly::one(), &den, rho * (l + 2))?;
    quasipoly_from_values(&values, rho, l)
}

/// The quasi-polynomial with generating series `num / Π_d F_d^{mult}`, where
/// `F_1 = 1 − x` and `F_d` is the `d`-th cyclotomic polynomial for `d ≥ 2`.
pub fn series_to_quasipoly(num: &RatPoly, denominator: &[(usize, usize)]) -> Result<QuasiPoly> {
    let den = denominator
        .iter()
        .fold(RatPoly::one(), |acc, &(d, m)| &acc * &unit_root_factor(d).pow(m));
    let den_deg = den.degree().finite().unwrap_or(0);
    if num.degree() >= crate::poly::Degree::Finite(den_deg) {
        return Err(Error::ImproperFraction);
    }
    if num.is_zero() {
        return Ok(QuasiPoly::zero());
    }
    let period = denominator
        .iter()
        .filter(|(_, m)| *m > 0)
        .fold(1, |acc, &(d, _)| lcm(acc, d));
    let degree = denominator.iter().map(|&(_, m)| m).max().unwrap_or(1).saturating_sub(1);
    let values = series_coefficients(num, &den, period * (degree + 2))?;
    quasipoly_from_values(&values, period, degree)
}

/// Numerators `g_i` with `deg g_i < deg F_i` and `num / Π F_i = Σ g_i / F_i`.
pub fn partial_fractions(num: &RatPoly, factors: &[RatPoly]) -> Result<Vec<RatPoly>> {
    for (i, a) in factors.iter().enumerate() {
        if a.is_zero() || a.degree() == crate::poly::Degree::Finite(0) {
            return Err(Error::Precondition("factors must have positive degree".into()));
        }
        for b in &factors[i + 1..] {
            if a.gcd(b).degree() != crate::poly::Degree::Finite(0) {
                return Err(Error::FactorsNotCoprime);
            }
        }
    }
    let degs: Vec<usize> = factors.iter().map(|f| f.degree().finite().unwrap()).collect();
    let total: usize = degs.iter().sum();
    if num.degree() >= crate::poly::Degree::Finite(total) {
        return Err(Error::ImproperFraction);
    }
    // Column for unknown x^j g_i: coefficients of x^j Π_{k≠i} F_k.
    let mut columns: Vec<RatPoly> = Vec::with_capacity(total);
    for i in 0..factors.len() {
        let cofactor = factors
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .fold(RatPoly::one(), |acc, (_, f)| &acc * f);
        for j in 0..degs[i] {
            columns.push(&cofactor * &RatPoly::monomial(Q::one(), j));
        }
    }
    let matrix: Vec<Vec<Q>> = (0..total)
        .map(|row| columns.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let rhs: Vec<Q> = (0..total).map(|row| num.coeff(row)).collect();
    let sol = solve(matrix, rhs)?;
    let mut out = Vec::with_capacity(factors.len());
    let mut at = 0;
    for d in degs {
        out.push(RatPoly::new(sol[at..at + d].to_vec()));
        at += d;
    }
    Ok(out)
}

/// Gauss–Jordan elimination over the rationals.
fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Result<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Q::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Ok(b)
}

/// One summand of the alcove decomposition: period dividing `mark`, degree at most `degree_bound`.
#[derive(Clone, Debug, Serialize)]
pub struct EhrhartPart {
    pub mark: u64,
    pub degree_bound: usize,
    pub part: QuasiPoly,
}

/// Split `L_Φ` by grouping the roots of unity of `Π(1 − x^{c_i})` by order.
pub fn decompose_ehrhart(info: &RootSystemInfo) -> Result<Vec<EhrhartPart>> {
    let max_mark = *info.marks.iter().max().unwrap();
    let orders: Vec<(u64, usize)> = (1..=max_mark)
        .map(|d| (d, info.marks.iter().filter(|&&c| c % d == 0).count()))
        .filter(|&(_, m)| m > 0)
        .collect();
    let factors: Vec<RatPoly> = orders
        .iter()
        .map(|&(d, m)| unit_root_factor(d as usize).pow(m))
        .collect();
    let numerators = partial_fractions(&RatPoly::one(), &factors)?;
    orders
        .iter()
        .zip(numerators)
        .map(|(&(d, m), g)| {
            Ok(EhrhartPart {
                mark: d,
                degree_bound: m - 1,
                part: series_to_quasipoly(&g, &[(d as usize, m)])?,
            })
        })
        .collect()
}

/// `[c_0]_S [c_1]_S ⋯ [c_ℓ]_S`
pub fn cyclotomic_marks_operator(info: &RootSystemInfo) -> OperatorPoly {
    OperatorPoly::from_poly(
        info.marks
            .iter()
            .fold(RatPoly::one(), |acc, &c| &acc * &cyclotomic_type(c as usize)),
    )
}

/// `op(S) L_lhs = L_rhs`
pub fn cross_type_relation_check(lhs: &RootSystemInfo, op: &OperatorPoly, rhs: &RootSystemInfo) -> Result<bool> {
    Ok(ehrhart_quasi(lhs)?.apply_s(op) == ehrhart_quasi(rhs)?)
}

/// `lhs_op(S) L_lhs = rhs_op(S) L_rhs`
pub fn two_sided_relation_check(
    lhs: &RootSystemInfo,
    lhs_op: &OperatorPoly,
    rhs: &RootSystemInfo,
    rhs_op: &OperatorPoly,
) -> Result<bool> {
    Ok(ehrhart_quasi(lhs)?.apply_s(lhs_op) == ehrhart_quasi(rhs)?.apply_s(rhs_op))
}

/// A shift-operator identity between alcove counts of two types.
#[derive(Clone, Debug)]
pub struct CrossTypeRelation {
    pub lhs: Label,
    pub lhs_op: OperatorPoly,
    pub rhs: Label,
    pub rhs_op: OperatorPoly,
    pub text: &'static str,
}

impl CrossTypeRelation {
    pub fn check(&self) -> Result<bool> {
        two_sided_relation_check(&catalog(self.lhs), &self.lhs_op, &catalog(self.rhs), &self.rhs_op)
    }
}

fn op(factors: &[RatPoly]) -> OperatorPoly {
    OperatorPoly::from_poly(factors.iter().fold(RatPoly::one(), |acc, f| &acc * f))
}

/// The relations between exceptional and classical alcove counts obtained by
/// cancelling factors of the generating functions.
pub fn cross_type_relations(classical_rank: usize) -> Result<Vec<CrossTypeRelation>> {
    let label = Label::new;
    let one_minus = |k: usize| &RatPoly::one() - &RatPoly::monomial(Q::one(), k);
    let cyc = cyclotomic_type;
    let id = OperatorPoly::identity;
    Ok(vec![
        CrossTypeRelation {
            lhs: label(Family::C, classical_rank)?,
            lhs_op: op(&[one_minus(2)]),
            rhs: label(Family::C, classical_rank - 1)?,
            rhs_op: id(),
            text: "(1 - S^2) L_C(l) = L_C(l-1)",
        },
        CrossTypeRelation {
            lhs: label(Family::D, classical_rank + 1)?,
            lhs_op: op(&[one_minus(2)]),
            rhs: label(Family::D, classical_rank)?,
            rhs_op: id(),
            text: "(1 - S^2) L_D(l) = L_D(l-1)",
        },
        CrossTypeRelation {
            lhs: label(Family::E, 7)?,
            lhs_op: op(&[cyc(3), cyc(4), one_minus(1)]),
            rhs: label(Family::E, 6)?,
            rhs_op: id(),
            text: "[3]_S [4]_S (1 - S) L_E7 = L_E6",
        },
        CrossTypeRelation {
            lhs: label(Family::E, 8)?,
            lhs_op: op(&[cyc(2).compose_power(2), cyc(5), cyc(6), one_minus(1)]),
            rhs: label(Family::E, 7)?,
            rhs_op: id(),
            text: "[2]_{S^2} [5]_S [6]_S (1 - S) L_E8 = L_E7",
        },
        CrossTypeRelation {
            lhs: label(Family::F, 4)?,
            lhs_op: op(&[cyc(2), cyc(4), one_minus(1).pow(2)]),
            rhs: label(Family::G, 2)?,
            rhs_op: id(),
            text: "[2]_S [4]_S (1 - S)^2 L_F4 = L_G2",
        },
        CrossTypeRelation {
            lhs: label(Family::E, 6)?,
            lhs_op: op(&[one_minus(1).pow(2)]),
            rhs: label(Family::F, 4)?,
            rhs_op: op(&[RatPoly::from_ints(&[1, 0, 1])]),
            text: "(1 - S)^2 L_E6 = (1 + S^2) L_F4",
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::rootsystem::catalog_str;

    fn info(s: &str) -> RootSystemInfo {
        catalog_str(s).unwrap()
    }

    /// Literal enumeration of the lattice points.
    fn brute_force(marks: &[u64], q: u64) -> u64 {
        fn go(marks: &[u64], budget: u64) -> u64 {
            match marks.split_first() {
                None => 1,
                Some((&c, rest)) => (0..=budget / c).map(|x| go(rest, budget - c * x)).sum(),
            }
        }
        go(marks, q)
    }

    #[test]
    fn denumerant_examples() {
        assert_eq!(denumerant_count(&info("A2"), 3), BigInt::from(10));
        assert_eq!(denumerant_count(&info("G2"), 6), BigInt::from(7));
        for name in ["A1", "E8", "G2"] {
            assert_eq!(denumerant_count(&info(name), 0), BigInt::one());
        }
        for name in ["F4", "E6", "B3"] {
            let i = info(name);
            for q in 0..30 {
                assert_eq!(denumerant_count(&i, q), BigInt::from(brute_force(&i.marks[1..], q)));
            }
        }
    }

    #[test]
    fn type_a_is_binomial() {
        let l2 = ehrhart_quasi(&info("A2")).unwrap();
        assert_eq!(l2.period(), 1);
        assert_eq!(l2.constituent(0), &RatPoly::new(vec![int(1), frac(3, 2), frac(1, 2)]));
        assert_eq!(l2.eval(3), int(10));
    }

    #[test]
    fn e6_and_g2_shapes() {
        let e6 = ehrhart_quasi(&info("E6")).unwrap();
        assert_eq!(e6.period(), 6);
        assert_eq!(e6.minimal_period().period(), 6);
        assert_eq!(e6.degree(), crate::poly::Degree::Finite(6));
        assert!(e6.has_gcd_property());
        let g2 = ehrhart_quasi(&info("G2")).unwrap();
        for t in -5..=-1 {
            assert_eq!(g2.eval(t), int(0));
        }
        assert_eq!(g2.eval(6), int(7));
    }

    #[test]
    fn wrong_period_is_detected() {
        let mut f4 = info("F4");
        f4.period_rho = 6;
        assert!(matches!(ehrhart_quasi(&f4), Err(Error::InterpolationMismatch { .. })));
    }

    #[test]
    fn series_examples() {
        let a2 = series_to_quasipoly(&RatPoly::one(), &[(1, 3)]).unwrap();
        assert_eq!(a2, ehrhart_quasi(&info("A2")).unwrap());
        let even = series_to_quasipoly(&RatPoly::one(), &[(1, 1), (2, 1)]).unwrap();
        assert_eq!(even.period(), 2);
        assert_eq!(even.constituents(), &[RatPoly::one(), RatPoly::zero()]);
        let floor = series_to_quasipoly(&RatPoly::one(), &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(floor.period(), 2);
        assert_eq!(floor.degree(), crate::poly::Degree::Finite(1));
        for t in 0..20 {
            assert_eq!(floor.eval(t), int(t / 2 + 1));
        }
        assert_eq!(
            series_to_quasipoly(&RatPoly::from_ints(&[0, 0, 1]), &[(1, 2)]),
            Err(Error::ImproperFraction)
        );
    }

    fn recombine(num_parts: &[RatPoly], factors: &[RatPoly]) -> RatPoly {
        num_parts.iter().enumerate().fold(RatPoly::zero(), |acc, (i, g)| {
            let cof = factors
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .fold(g.clone(), |a, (_, f)| &a * f);
            &acc + &cof
        })
    }

    #[test]
    fn partial_fraction_examples() {
        let factors = [RatPoly::from_ints(&[1, -1]), RatPoly::from_ints(&[1, 1])];
        let g = partial_fractions(&RatPoly::one(), &factors).unwrap();
        assert_eq!(g, vec![RatPoly::constant(frac(1, 2)), RatPoly::constant(frac(1, 2))]);

        let factors = [RatPoly::from_ints(&[1, -1]).pow(2), RatPoly::from_ints(&[1, 1])];
        let g = partial_fractions(&RatPoly::one(), &factors).unwrap();
        assert_eq!(recombine(&g, &factors), RatPoly::one());
        assert!(g[0].degree() < crate::poly::Degree::Finite(2));

        let factors = [RatPoly::from_ints(&[1, -1]), RatPoly::from_ints(&[1, 1, 1])];
        let num = RatPoly::t();
        let g = partial_fractions(&num, &factors).unwrap();
        assert_eq!(recombine(&g, &factors), num);

        let dup = [RatPoly::from_ints(&[1, -1]), RatPoly::from_ints(&[1, -1])];
        assert_eq!(partial_fractions(&RatPoly::one(), &dup), Err(Error::FactorsNotCoprime));
    }

    #[test]
    fn decomposition_shapes() {
        let a3 = decompose_ehrhart(&info("A3")).unwrap();
        assert_eq!(a3.len(), 1);
        assert_eq!(a3[0].part, ehrhart_quasi(&info("A3")).unwrap());
        let e6 = decompose_ehrhart(&info("E6")).unwrap();
        let shape: Vec<_> = e6.iter().map(|p| (p.mark, p.part.degree().finite().unwrap())).collect();
        assert_eq!(shape, vec![(1, 6), (2, 2), (3, 0)]);
        let f4 = decompose_ehrhart(&info("F4")).unwrap();
        let shape: Vec<_> = f4.iter().map(|p| (p.mark, p.degree_bound)).collect();
        assert_eq!(shape, vec![(1, 4), (2, 2), (3, 0), (4, 0)]);
    }

    #[test]
    fn relation_examples() {
        let f4 = info("F4");
        assert!(cross_type_relation_check(&f4, &cyclotomic_marks_operator(&f4), &info("A4")).unwrap());
        let c4_to_c3 = OperatorPoly::from_poly(RatPoly::from_ints(&[1, 0, -1]));
        assert!(cross_type_relation_check(&info("C4"), &c4_to_c3, &info("C3")).unwrap());
        let f4_to_g2 = op(&[cyclotomic_type(2), cyclotomic_type(4), RatPoly::from_ints(&[1, -1]).pow(2)]);
        assert!(cross_type_relation_check(&f4, &f4_to_g2, &info("G2")).unwrap());
        assert!(!cross_type_relation_check(&f4, &f4_to_g2, &info("A2")).unwrap());
    }
}
