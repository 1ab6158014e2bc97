//! Quasi-polynomials, the cyclic action on their constituents, averaging,
//! and the two shift operators `S` and `S̄`.
//!
//! Slot `r` of a [`QuasiPoly`] with period `n` holds the constituent used for
//! `t ≡ r (mod n)`, so the 1-based labelling `f_1, ..., f_n` with `f_n` at
//! `t ≡ 0` maps onto slots by `j ↦ j mod n` (see [`QuasiPoly::labelled`]).

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{gcd, lcm, residue};
use crate::error::{Error, Result};
use crate::poly::{Degree, RatPoly};
use crate::rational::{self, Q};

#[derive(Clone, Debug)]
pub struct QuasiPoly {
    constituents: Vec<RatPoly>,
}

/// `Σ_k a_k S^{stride·k}`: a polynomial in `S^stride`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorPoly {
    coeffs: RatPoly,
    stride: usize,
}

impl OperatorPoly {
    pub fn new(coeffs: RatPoly, stride: usize) -> Result<Self> {
        if stride == 0 {
            return Err(Error::ZeroStride);
        }
        Ok(OperatorPoly { coeffs, stride })
    }

    /// `g(S)` with unit stride.
    pub fn from_poly(coeffs: RatPoly) -> Self {
        OperatorPoly { coeffs, stride: 1 }
    }

    pub fn identity() -> Self {
        Self::from_poly(RatPoly::one())
    }

    pub fn coeffs(&self) -> &RatPoly {
        &self.coeffs
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    /// The same operator written as a polynomial in `S`.
    pub fn expanded(&self) -> RatPoly {
        self.coeffs.compose_power(self.stride)
    }

    /// Composition; operators in a single shift commute.
    pub fn compose(&self, other: &OperatorPoly) -> OperatorPoly {
        if self.stride == other.stride {
            return OperatorPoly {
                coeffs: &self.coeffs * &other.coeffs,
                stride: self.stride,
            };
        }
        Self::from_poly(&self.expanded() * &other.expanded())
    }

    /// Nonzero terms as `(total shift, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> + '_ {
        self.coeffs
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(move |(k, a)| (k * self.stride, a))
    }

    /// `Σ a_k (-shift_k)^i` for `i = 0..=degree`, one row per residue class of
    /// the shift modulo `modulus`.
    fn taylor_moments(&self, degree: usize, modulus: usize) -> Vec<Vec<Q>> {
        let mut moments = vec![vec![Q::zero(); degree + 1]; modulus];
        for (shift, a) in self.terms() {
            let row = &mut moments[shift % modulus];
            let step = BigInt::from(-(shift as i64));
            let mut pw = BigInt::one();
            for m in row.iter_mut() {
                *m += a * rational::big(pw.clone());
                pw *= &step;
            }
        }
        moments
    }
}

impl QuasiPoly {
    pub fn new(constituents: Vec<RatPoly>) -> Result<Self> {
        if constituents.is_empty() {
            return Err(Error::EmptyQuasiPolynomial);
        }
        Ok(QuasiPoly { constituents })
    }

    pub fn from_poly(p: RatPoly) -> Self {
        QuasiPoly {
            constituents: vec![p],
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(RatPoly::zero())
    }

    /// Build from the 1-based labelling `f_1, ..., f_n` where `f_n` is used for `t ≡ 0`.
    pub fn labelled(mut f: Vec<RatPoly>) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptyQuasiPolynomial);
        }
        f.rotate_right(1);
        Self::new(f)
    }

    pub fn period(&self) -> usize {
        self.constituents.len()
    }

    pub fn constituents(&self) -> &[RatPoly] {
        &self.constituents
    }

    /// Constituent used for `t ≡ r (mod period)`; any integer `r` is accepted.
    pub fn constituent(&self, r: i64) -> &RatPoly {
        &self.constituents[residue(r, self.period())]
    }

    pub fn eval(&self, t: i64) -> Q {
        self.constituent(t).eval_int(t)
    }

    pub fn degree(&self) -> Degree {
        self.constituents
            .iter()
            .map(RatPoly::degree)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// The same function written with period `n`, a multiple of the current one.
    pub fn with_period(&self, n: usize) -> QuasiPoly {
        assert!(n % self.period() == 0, "period {n} is not a multiple of {}", self.period());
        QuasiPoly {
            constituents: (0..n).map(|r| self.constituents[r % self.period()].clone()).collect(),
        }
    }

    pub fn minimal_period(&self) -> QuasiPoly {
        let n = self.period();
        for d in (1..=n).filter(|d| n % d == 0) {
            if (d..n).all(|r| self.constituents[r] == self.constituents[r % d]) {
                return QuasiPoly {
                    constituents: self.constituents[..d].to_vec(),
                };
            }
        }
        unreachable!("d = n always qualifies")
    }

    pub fn is_polynomial(&self) -> bool {
        self.minimal_period().period() == 1
    }

    /// Constituent at `r` equals the one at `gcd(r, n)` for `r = 1..n`.
    pub fn has_gcd_property(&self) -> bool {
        let n = self.period();
        (1..=n).all(|r| {
            let g = gcd(r as i64, n as i64) as usize;
            self.constituents[r % n] == self.constituents[g % n]
        })
    }

    /// `f^{σ^k}` for the cyclic shift `σ = (1, ..., n)` at the minimal period:
    /// slot `j + k` of the result holds constituent `j`.
    pub fn sigma_pow(&self, k: i64) -> QuasiPoly {
        let f = self.minimal_period();
        let n = f.period();
        QuasiPoly {
            constituents: (0..n as i64).map(|j| f.constituent(j - k).clone()).collect(),
        }
    }

    /// Average of `f^{σ^{ik}}` over `i = 0..n`, `n` the minimal period of `f`.
    pub fn tilde(&self, k: i64) -> QuasiPoly {
        let f = self.minimal_period();
        let n = f.period();
        let inv_n = rational::frac(1, n as i64);
        let constituents = (0..n as i64)
            .map(|j| {
                let sum = (0..n as i64).fold(RatPoly::zero(), |acc, i| &acc + f.constituent(j - i * k));
                sum.scale(&inv_n)
            })
            .collect();
        QuasiPoly { constituents }.minimal_period()
    }

    /// `(g(S) f)(t) = Σ a_k f(t - shift_k)`, materialized at the minimal period of `f`.
    ///
    /// Each constituent is expanded in Taylor form, so every shifted copy
    /// collapses into a moment of the operator times a derivative.
    pub fn apply_s(&self, op: &OperatorPoly) -> QuasiPoly {
        let f = self.minimal_period();
        let n = f.period();
        let Some(deg) = f.degree().finite() else {
            return f;
        };
        let moments = op.taylor_moments(deg, n);
        let derivs: Vec<Vec<RatPoly>> = f.constituents.iter().map(|p| scaled_derivatives(p, deg)).collect();
        // Integer accumulation over one common denominator.
        let d_den = common_denominator(derivs.iter().flatten().flat_map(|p| p.coeffs()));
        let m_den = common_denominator(moments.iter().flatten());
        let derivs: Vec<Vec<Vec<BigInt>>> = derivs
            .iter()
            .map(|row| row.iter().map(|p| numerators(p.coeffs(), &d_den)).collect())
            .collect();
        let moments: Vec<Vec<BigInt>> = moments.iter().map(|row| numerators(row, &m_den)).collect();
        let den = d_den * m_den;
        let constituents = (0..n)
            .map(|r| {
                let mut acc = vec![BigInt::zero(); deg + 1];
                for (s, row) in moments.iter().enumerate() {
                    let src = &derivs[(r + n - s) % n];
                    for (m, d) in row.iter().zip(src) {
                        if m.is_zero() {
                            continue;
                        }
                        for (a, c) in acc.iter_mut().zip(d) {
                            *a += m * c;
                        }
                    }
                }
                RatPoly::new(acc.into_iter().map(|c| Q::new(c, den.clone())).collect())
            })
            .collect();
        QuasiPoly { constituents }
    }

    /// `S̄` shifts the argument of every constituent without moving it between slots.
    pub fn apply_sbar(&self, op: &OperatorPoly) -> QuasiPoly {
        let Some(deg) = self.degree().finite() else {
            return self.clone();
        };
        let moments = op.taylor_moments(deg, 1).swap_remove(0);
        let constituents = self
            .constituents
            .iter()
            .map(|p| {
                scaled_derivatives(p, deg)
                    .iter()
                    .zip(&moments)
                    .fold(RatPoly::zero(), |acc, (d, m)| &acc + &d.scale(m))
            })
            .collect();
        QuasiPoly { constituents }
    }

    pub fn scale(&self, a: &Q) -> QuasiPoly {
        QuasiPoly {
            constituents: self.constituents.iter().map(|p| p.scale(a)).collect(),
        }
    }

    fn zip_with(&self, other: &QuasiPoly, op: impl Fn(&RatPoly, &RatPoly) -> RatPoly) -> QuasiPoly {
        let n = lcm(self.period(), other.period());
        QuasiPoly {
            constituents: (0..n as i64)
                .map(|r| op(self.constituent(r), other.constituent(r)))
                .collect(),
        }
    }

    /// First `t` in `range` where the two quasi-polynomials differ.
    pub fn first_difference(&self, other: &QuasiPoly, range: std::ops::Range<i64>) -> Option<i64> {
        range.into_iter().find(|&t| self.eval(t) != other.eval(t))
    }
}

/// `p^{(i)} / i!` for `i = 0..=deg`.
fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Q>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

fn numerators(values: &[Q], den: &BigInt) -> Vec<BigInt> {
    values.iter().map(|q| q.numer() * (den / q.denom())).collect()
}

fn scaled_derivatives(p: &RatPoly, deg: usize) -> Vec<RatPoly> {
    let mut out = Vec::with_capacity(deg + 1);
    let mut cur = p.clone();
    for i in 0..=deg {
        if i > 0 {
            cur = cur.derivative().scale(&rational::frac(1, i as i64));
        }
        out.push(cur.clone());
    }
    out
}

/// Equality of the underlying functions, independent of the chosen period.
impl PartialEq for QuasiPoly {
    fn eq(&self, other: &Self) -> bool {
        let n = lcm(self.period(), other.period()) as i64;
        (0..n).all(|r| self.constituent(r) == other.constituent(r))
    }
}

impl Eq for QuasiPoly {}

impl Add for &QuasiPoly {
    type Output = QuasiPoly;
    fn add(self, rhs: &QuasiPoly) -> QuasiPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &QuasiPoly {
    type Output = QuasiPoly;
    fn sub(self, rhs: &QuasiPoly) -> QuasiPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Display for QuasiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.period();
        if n == 1 {
            return write!(f, "{}", self.constituents[0]);
        }
        for (r, p) in self.constituents.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "t ≡ {r} mod {n}: {p}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QuasiPolyJson {
    period: usize,
    constituents: Vec<Vec<String>>,
}

impl Serialize for QuasiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuasiPolyJson {
            period: self.period(),
            constituents: self.constituents.iter().map(RatPoly::render_coeffs).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = QuasiPolyJson::deserialize(d)?;
        if raw.period != raw.constituents.len() {
            return Err(D::Error::custom(format!(
                "period {} does not match {} constituents",
                raw.period,
                raw.constituents.len()
            )));
        }
        let constituents = raw
            .constituents
            .iter()
            .map(|c| RatPoly::parse_coeffs(c))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        QuasiPoly::new(constituents).map_err(D::Error::custom)
    }
}
