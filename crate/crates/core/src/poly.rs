//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest degree first and kept canonical: the last
//! stored coefficient is nonzero, and the zero polynomial is the empty list.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

/// Degree of a polynomial; the zero polynomial sits below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Q>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(rational::big).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Q {
        self.eval(&rational::int(x))
    }

    pub fn scale(&self, a: &Q) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c * a).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int(k as i64))
                .collect(),
        )
    }

    /// `p(t + a)` by repeated synthetic division (Taylor shift).
    pub fn shift_argument(&self, a: &Q) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if a.is_zero() || n < 2 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for k in (i..n - 1).rev() {
                let carry = &c[k + 1] * a;
                c[k] += carry;
            }
        }
        Self::new(c)
    }

    /// `p(t^m)`
    pub fn compose_power(&self, m: usize) -> Self {
        assert!(m >= 1, "compose_power needs m >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Q::zero(); (self.coeffs.len() - 1) * m + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * m] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let lead = d.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient `self / d` when `d` divides `self`.
    pub fn divides_into(&self, d: &RatPoly) -> Result<Option<RatPoly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            Degree::NegInfinity => false,
            Degree::Finite(0) => true,
            Degree::Finite(_) => self.gcd(&self.derivative()).degree() == Degree::Finite(0),
        }
    }

    /// Yun's decomposition into monic squarefree, pairwise coprime factors with
    /// multiplicities; the product of `f^m` is `self` up to a constant.
    pub fn squarefree_factors(&self) -> Vec<(RatPoly, usize)> {
        if self.degree() <= Degree::Finite(0) {
            return Vec::new();
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.divides_into(&a0).unwrap().unwrap().monic();
        let c = d.divides_into(&a0).unwrap().unwrap().scale(&self.leading().unwrap().recip());
        let mut dd = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > Degree::Finite(0) {
            let a = b.gcd(&dd);
            let next_b = b.divides_into(&a).unwrap().unwrap();
            let next_c = dd.divides_into(&a).unwrap().unwrap();
            if a.degree() > Degree::Finite(0) {
                out.push((a, i));
            }
            dd = &next_c - &next_b.derivative();
            b = next_b;
            i += 1;
        }
        out
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_part(&self) -> RatPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let lcm_den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * rational::big(lcm_den.clone())).to_integer())
            .collect();
        let content = nums.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        RatPoly::from_bigints(&nums.iter().map(|c| c / &content).collect::<Vec<_>>())
    }

    /// Coefficients reversed against `t^len`: `t^len p(1/t)` when `len ≥ deg p`.
    pub fn reflect(&self, len: usize) -> RatPoly {
        let mut coeffs = vec![Q::zero(); len + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            assert!(k <= len, "reflect length below degree");
            coeffs[len - k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Strings in the crate's rational rendering, lowest degree first.
    pub fn render_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(rational::render).collect()
    }

    pub fn parse_coeffs<S: AsRef<str>>(items: &[S]) -> Result<RatPoly> {
        Ok(Self::new(
            items
                .iter()
                .map(|s| rational::parse(s.as_ref()))
                .collect::<Result<_>>()?,
        ))
    }
}

impl fmt::Display for RatPoly {
    /// Highest degree first, e.g. `t^2 - 3t + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                let r = rational::render(&abs);
                if r.contains('/') && k > 0 {
                    write!(f, "({r})")?;
                } else {
                    write!(f, "{r}")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: &RatPoly) -> RatPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

/// `[c]_t = 1 + t + ... + t^{c-1}`, with `[0]_t = 0`.
pub fn cyclotomic_type(c: usize) -> RatPoly {
    RatPoly::new(vec![Q::one(); c])
}

/// `(1 - t)^k`
pub fn one_minus_t_pow(k: usize) -> RatPoly {
    RatPoly::from_ints(&[1, -1]).pow(k)
}

/// The cyclotomic polynomial whose roots are the primitive `d`-th roots of unity.
pub fn cyclotomic_polynomial(d: usize) -> RatPoly {
    assert!(d >= 1);
    // t^d - 1 = prod over e | d of Phi_e
    let mut p = &RatPoly::monomial(Q::one(), d) - &RatPoly::one();
    for e in 1..d {
        if d % e == 0 {
            p = p
                .divides_into(&cyclotomic_polynomial(e))
                .expect("nonzero divisor")
                .expect("cyclotomic factor divides t^d - 1");
        }
    }
    p
}

/// Exact divisibility: `Some(g / d)` when `d | g`.
pub fn divides(d: &RatPoly, g: &RatPoly) -> Result<Option<RatPoly>> {
    g.divides_into(d)
}

/// `(1 - t)^k` divides `g1 - g2`.
pub fn congruent_mod_power(g1: &RatPoly, g2: &RatPoly, k: usize) -> bool {
    // Divisibility by (1-t)^k is vanishing of the first k Taylor coefficients at 1.
    let diff = (g1 - g2).shift_argument(&Q::one());
    (0..k).all(|j| diff.coeff(j).is_zero())
}

/// Moment test for divisibility by `[n]_t^{l+1}`: for every `r ≤ l` the sums
/// `Σ_{k ≡ j (mod n)} a_k k^r` agree across all residues `j`.
pub fn moment_divisibility(g: &RatPoly, n: usize, l: usize) -> bool {
    assert!(n >= 1);
    for r in 0..=l {
        let mut sums = vec![Q::zero(); n];
        for (k, a) in g.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let kr = num_traits::pow(BigInt::from(k), r);
            sums[k % n] += a * rational::big(kr);
        }
        if sums.iter().any(|s| s != &sums[0]) {
            return false;
        }
    }
    true
}

/// Split `g` by exponent residue: piece `j` keeps the terms `a_k t^k` with `k ≡ j (mod n)`.
pub fn residue_split(g: &RatPoly, n: usize) -> Vec<RatPoly> {
    assert!(n >= 1);
    (0..n)
        .map(|j| {
            RatPoly::new(
                g.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, a)| if k % n == j { a.clone() } else { Q::zero() })
                    .collect(),
            )
        })
        .collect()
}

/// Newton interpolation through `(x_i, y_i)` with distinct nodes.
pub fn interpolate(points: &[(Q, Q)]) -> RatPoly {
    let n = points.len();
    let mut dd: Vec<Q> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - j].0);
        }
    }
    let mut out = RatPoly::zero();
    for i in (0..n).rev() {
        let factor = RatPoly::new(vec![-points[i].0.clone(), Q::one()]);
        out = &(&out * &factor) + &RatPoly::constant(dd[i].clone());
    }
    out
}

/// Sturm chain `p, p', -rem(...)...`, each member rescaled by a positive
/// rational to its primitive integer form.
pub fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.primitive_part(), p.derivative().primitive_part()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        chain.push((-r).primitive_part());
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of(q: &Q) -> Ordering {
    q.cmp(&Q::zero())
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn sturm_count_real_roots(p: &RatPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let chain = sturm_sequence(p);
    let at_pos = chain.iter().map(|q| sign_of(q.leading().unwrap()));
    let at_neg = chain.iter().map(|q| {
        let s = sign_of(q.leading().unwrap());
        if q.degree().finite().unwrap() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    });
    Ok(sign_changes(at_neg) - sign_changes(at_pos))
}
