//! Characteristic quasi-polynomials of the Linial arrangements `A_Φ^{[1,n]}`.

use num_traits::One;
use rayon::prelude::*;

use crate::arith::gcd;
use crate::ehrhart::ehrhart_quasi;
use crate::error::{Error, Result};
use crate::eulerian::generalized_eulerian;
use crate::poly::{cyclotomic_type, RatPoly};
use crate::quasipoly::{OperatorPoly, QuasiPoly};
use crate::rational::{self, Q};
use crate::rootsystem::{positive_roots, RootSystemInfo};

/// A root system together with its alcove count `L_Φ` and `R_Φ`.
#[derive(Clone, Debug)]
pub struct Linial {
    pub info: RootSystemInfo,
    pub ehrhart: QuasiPoly,
    pub eulerian: RatPoly,
}

impl Linial {
    pub fn new(info: &RootSystemInfo) -> Result<Self> {
        Ok(Linial {
            info: info.clone(),
            ehrhart: ehrhart_quasi(info)?,
            eulerian: generalized_eulerian(info),
        })
    }

    fn rho(&self) -> u64 {
        self.info.period_rho
    }

    /// `R_Φ(S^{n+1})`
    pub fn operator(&self, n: u64) -> OperatorPoly {
        OperatorPoly::new(self.eulerian.clone(), n as usize + 1).expect("positive stride")
    }

    /// `χ_quasi(A^{[1,n]}, t) = R_Φ(S^{n+1}) L_Φ(t)` at its minimal period.
    pub fn char_quasi(&self, n: u64) -> QuasiPoly {
        self.ehrhart.apply_s(&self.operator(n)).minimal_period()
    }

    /// The constituent at `t ≡ 1`, i.e. the characteristic polynomial.
    pub fn char_poly(&self, n: u64) -> RatPoly {
        self.char_quasi(n).constituent(1).clone()
    }

    /// `Π_{j=0}^{ℓ} (1/m)[m]_{S^{c_j s}} f`, one sparse factor at a time.
    pub fn apply_averaging(&self, f: &QuasiPoly, m: u64, s: u64) -> QuasiPoly {
        let factor = cyclotomic_type(m as usize).scale(&rational::frac(1, m as i64));
        self.info.marks.iter().fold(f.clone(), |acc, &c| {
            acc.apply_s(&OperatorPoly::new(factor.clone(), (c * s) as usize).expect("positive stride"))
        })
    }

    /// `χ_quasi` and `R_Φ(S̄^{n+1}) L̃_Φ^{gcd(n+1, ρ)}`.
    pub fn main_theorem_sides(&self, n: u64) -> (QuasiPoly, QuasiPoly) {
        let g = gcd(n as i64 + 1, self.rho() as i64);
        (self.char_quasi(n), self.ehrhart.tilde(g).apply_sbar(&self.operator(n)))
    }

    pub fn verify_main_theorem(&self, n: u64) -> bool {
        let g = gcd(n as i64 + 1, self.rho() as i64) as usize;
        let (chi, rhs) = self.main_theorem_sides(n);
        chi == rhs && g % chi.period() == 0
    }

    pub fn corollary1_sides(&self, n: u64) -> (QuasiPoly, QuasiPoly) {
        let g = gcd(n as i64 + 1, self.rho() as i64) as u64;
        let m = (n + 1) / g;
        let rhs = self.apply_averaging(&self.char_quasi(g - 1), m, g);
        (self.char_quasi(n), rhs)
    }

    pub fn verify_corollary1(&self, n: u64) -> bool {
        let (lhs, rhs) = self.corollary1_sides(n);
        lhs == rhs
    }

    /// `Π_j (1/(n+1))[n+1]_{S^{c_j}} t^ℓ`, defined when `gcd(n+1, ρ) = 1`.
    pub fn gcd_prime_polynomial(&self, n: u64) -> Result<RatPoly> {
        let g = gcd(n as i64 + 1, self.rho() as i64);
        if g != 1 {
            return Err(Error::Precondition(format!(
                "gcd(n+1, rho) = gcd({}, {}) = {g}, expected 1",
                n + 1,
                self.rho()
            )));
        }
        let base = QuasiPoly::from_poly(RatPoly::monomial(Q::one(), self.info.rank()));
        Ok(self.apply_averaging(&base, n + 1, 1).constituent(0).clone())
    }

    /// `χ(A^{[1,g−1]})` and `Π_j (1/η)[η]_{S^{c_j g'}} χ(A^{[1,g'−1]})` with
    /// `g = gcd(n+1, ρ)`, `g' = gcd(n+1, rad ρ)`, `η = g/g'`.
    pub fn rad_theorem_sides(&self, n: u64) -> (RatPoly, RatPoly) {
        let g = gcd(n as i64 + 1, self.rho() as i64) as u64;
        let g_rad = gcd(n as i64 + 1, self.info.rad_rho as i64) as u64;
        let eta = g / g_rad;
        let base = QuasiPoly::from_poly(self.char_poly(g_rad - 1));
        let rhs = self.apply_averaging(&base, eta, g_rad);
        (self.char_poly(g - 1), rhs.constituent(0).clone())
    }

    pub fn verify_rad_theorem(&self, n: u64) -> bool {
        let (lhs, rhs) = self.rad_theorem_sides(n);
        lhs == rhs
    }

    /// `χ(A^{[1,n]}, q) = χ(A^{[1−k,n+k]}, q + kh)` checked with the point count at `q`.
    pub fn verify_shift_relation(&self, n: u64, k: u64, q: u64) -> Result<bool> {
        let l = self.info.rank();
        if gcd(q as i64, self.rho() as i64) != 1 {
            return Err(Error::Precondition(format!("q = {q} is not coprime to rho = {}", self.rho())));
        }
        if l > 4 || (q as f64).powi(l as i32) > 1e7 {
            return Err(Error::Precondition(format!("instance too large: rank {l}, q = {q}")));
        }
        let chi = self.char_poly(n);
        let h = self.info.coxeter_h as i64;
        let direct = oracle_count(&self.info, 1, n as i64, q);
        let shifted = oracle_count(&self.info, 1 - k as i64, (n + k) as i64, q);
        Ok(rational::int(direct as i64) == chi.eval_int(q as i64)
            && rational::int(shifted as i64) == chi.eval_int(q as i64 - k as i64 * h))
    }
}

/// A modulus where the point count and `χ_quasi` differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMismatch {
    pub q: u64,
    pub count: u64,
    pub formula: Q,
}

impl Linial {
    pub fn oracle_mismatches(&self, n: u64, qs: impl IntoIterator<Item = u64>) -> Vec<OracleMismatch> {
        let chi = self.char_quasi(n);
        qs.into_iter()
            .filter_map(|q| {
                let count = oracle_count(&self.info, 1, n as i64, q);
                let formula = chi.eval(q as i64);
                (rational::int(count as i64) != formula).then_some(OracleMismatch { q, count, formula })
            })
            .collect()
    }
}

pub fn char_quasi(info: &RootSystemInfo, n: u64) -> Result<QuasiPoly> {
    Ok(Linial::new(info)?.char_quasi(n))
}

pub fn char_poly(info: &RootSystemInfo, n: u64) -> Result<RatPoly> {
    Ok(Linial::new(info)?.char_poly(n))
}

/// `#{x ∈ (Z/q)^ℓ : Σ_j m_j(α) x_j ≢ k (mod q) for all α ∈ Φ⁺, k ∈ [a, b]}`
pub fn oracle_count(info: &RootSystemInfo, a: i64, b: i64, q: u64) -> u64 {
    assert!(q >= 1, "q must be positive");
    assert!(b >= a - 1, "interval [{a}, {b}] is malformed");
    let qi = q as i64;
    let mut forbidden = vec![false; q as usize];
    for k in a..=b {
        forbidden[k.rem_euclid(qi) as usize] = true;
    }
    let roots: Vec<Vec<i64>> = positive_roots(info)
        .into_iter()
        .map(|r| r.coords.iter().map(|&m| m.rem_euclid(qi)).collect())
        .collect();
    let l = info.rank();
    (0..q)
        .into_par_iter()
        .map(|x0| {
            let mut x = vec![0i64; l];
            x[0] = x0 as i64;
            let mut count = 0u64;
            loop {
                let ok = roots.iter().all(|m| {
                    let dot = m.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>();
                    !forbidden[dot.rem_euclid(qi) as usize]
                });
                count += ok as u64;
                let mut i = l;
                loop {
                    if i == 1 {
                        return count;
                    }
                    i -= 1;
                    x[i] += 1;
                    if x[i] < qi {
                        break;
                    }
                    x[i] = 0;
                }
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Degree;
    use crate::rootsystem::catalog_str;

    fn lin(s: &str) -> Linial {
        Linial::new(&catalog_str(s).unwrap()).unwrap()
    }

    #[test]
    fn small_characteristic_polynomials() {
        assert_eq!(lin("A1").char_quasi(1), QuasiPoly::from_poly(RatPoly::from_ints(&[-1, 1])));
        assert_eq!(lin("A2").char_poly(1), RatPoly::from_ints(&[3, -3, 1]));
        let e6 = lin("E6").char_quasi(1);
        assert_eq!(
            e6.constituent(1),
            &RatPoly::from_ints(&[211992, -140076, 40185, -6480, 630, -36, 1])
        );
    }

    #[test]
    fn table_rows() {
        assert_eq!(lin("F4").char_poly(1), RatPoly::from_ints(&[2917, -1368, 258, -24, 1]));
        assert_eq!(
            lin("E7").char_poly(2),
            RatPoly::from_ints(&[-2490427440, 687202712, -84088368, 5948040, -264600, 7476, -126, 1])
        );
    }

    #[test]
    fn empty_arrangement() {
        for name in ["A3", "G2", "E6"] {
            let x = lin(name);
            let tl = RatPoly::monomial(Q::one(), x.info.rank());
            assert_eq!(x.char_quasi(0), QuasiPoly::from_poly(tl));
        }
    }

    #[test]
    fn oracle_examples() {
        let a2 = catalog_str("A2").unwrap();
        assert_eq!(oracle_count(&a2, 1, 0, 5), 25);
        assert_eq!(oracle_count(&a2, 1, 1, 5), 13);
        let g2 = lin("G2");
        assert_eq!(
            rational::int(oracle_count(&g2.info, 1, 1, 7) as i64),
            g2.char_quasi(1).eval(7)
        );
    }

    #[test]
    fn theorem_examples() {
        let e6 = lin("E6");
        assert!(e6.verify_main_theorem(1));
        assert_eq!(2 % e6.char_quasi(1).period(), 0);
        assert!(e6.verify_corollary1(7));
        let f4 = lin("F4");
        assert!(f4.verify_main_theorem(5));
        assert!(f4.verify_rad_theorem(11));
        let e8 = lin("E8");
        assert!(e8.verify_corollary1(9));
        assert!(e8.verify_rad_theorem(3));
    }

    #[test]
    fn gcd_prime_examples() {
        assert_eq!(lin("A1").gcd_prime_polynomial(1).unwrap(), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(lin("A2").gcd_prime_polynomial(1).unwrap(), RatPoly::from_ints(&[3, -3, 1]));
        let e6 = lin("E6");
        let p = e6.gcd_prime_polynomial(6).unwrap();
        assert_eq!(p.degree(), Degree::Finite(6));
        assert_eq!(e6.char_quasi(6), QuasiPoly::from_poly(p));
        assert!(e6.gcd_prime_polynomial(1).is_err());
    }

    #[test]
    fn shift_examples() {
        assert!(lin("A2").verify_shift_relation(1, 0, 7).unwrap());
        assert!(lin("A2").verify_shift_relation(1, 1, 7).unwrap());
        let b2 = lin("B2");
        // [0,3] at q = 7 leaves a single point while χ_2(3) = 5
        assert!(!b2.verify_shift_relation(2, 1, 7).unwrap());
        assert!(b2.verify_shift_relation(2, 1, 11).unwrap());
        assert!(b2.verify_shift_relation(2, 1, 13).unwrap());
        assert!(b2.verify_shift_relation(2, 1, 8).is_err());
    }
}
