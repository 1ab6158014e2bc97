//! Checking that every root of a polynomial lies on a vertical line `Re z = a`.
//!
//! Two independent paths: numeric roots by Aberth–Ehrlich iteration, and an
//! exact certificate from the symmetry of `p(s + a)` plus a Sturm count.

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{sturm_count_real_roots, Degree, RatPoly};
use crate::rational::{self, Q};

pub const MAX_ITERATIONS: usize = 500;
/// Per-root bound on the final Newton correction `|p(z) / p'(z)|`.
pub const NEWTON_TOLERANCE: f64 = 1e-12;

/// All complex roots with multiplicity, sorted by real then imaginary part.
pub fn find_roots(p: &RatPoly) -> Result<Vec<Complex64>> {
    let d = p
        .degree()
        .finite()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Precondition("degree must be at least 1".into()))?;
    let mut roots = Vec::with_capacity(d);
    for (factor, mult) in p.squarefree_factors() {
        let found = squarefree_roots(&factor)?;
        for _ in 0..mult {
            roots.extend_from_slice(&found);
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn squarefree_roots(p: &RatPoly) -> Result<Vec<Complex64>> {
    let d = p.degree().finite().unwrap();
    let lead = p.leading().unwrap().clone();
    let center = -p.coeff(d - 1) / (&lead * rational::int(d as i64));
    let r = p.shift_argument(&center).scale(&lead.recip());
    let c = rational::to_f64(&center);
    // A root at the centroid shows up as a vanishing constant term.
    let zeros = if r.coeff(0).is_zero() { 1 } else { 0 };
    let reduced = RatPoly::new(r.coeffs()[zeros..].to_vec());
    let mut out = vec![Complex64::new(c, 0.0); zeros];
    if reduced.degree() >= Degree::Finite(1) {
        for s in aberth(&reduced)? {
            out.push(Complex64::new(c, 0.0) + s);
        }
    }
    Ok(out)
}

/// Monic polynomial, nonzero constant term, distinct roots.
fn aberth(r: &RatPoly) -> Result<Vec<Complex64>> {
    let d = r.degree().finite().unwrap();
    let b: Vec<f64> = r.coeffs().iter().map(rational::to_f64).collect();
    let radius = (0..d)
        .map(|k| b[k].abs().powf(1.0 / (d - k) as f64))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    // u = s / radius keeps every coefficient of the monic polynomial in [-1, 1]
    let scaled: Vec<f64> = (0..=d).map(|k| b[k] * radius.powi(k as i32 - d as i32)).collect();
    let mut u: Vec<Complex64> = (0..d)
        .map(|j| Complex64::from_polar(0.9, std::f64::consts::TAU * j as f64 / d as f64 + 0.4))
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut worst = 0.0f64;
        for j in 0..d {
            let (v, dv) = horner(&scaled, u[j]);
            if v == Complex64::zero() {
                continue;
            }
            let w = v / dv;
            let repulsion: Complex64 = (0..d).filter(|&k| k != j).map(|k| (u[j] - u[k]).inv()).sum();
            let step = w / (Complex64::new(1.0, 0.0) - w * repulsion);
            u[j] -= step;
            worst = worst.max(step.norm() / u[j].norm().max(1.0));
        }
        if worst < 1e-15 {
            break;
        }
    }
    let mut roots: Vec<Complex64> = u.into_iter().map(|x| x * radius).collect();
    let rd = r.derivative();
    let mut worst = 0.0f64;
    for z in roots.iter_mut() {
        let mut last = f64::INFINITY;
        for _ in 0..8 {
            let step = exact_newton_step(r, &rd, *z);
            last = step.norm();
            if !last.is_finite() {
                break;
            }
            *z -= step;
            if last <= f64::EPSILON * z.norm() {
                break;
            }
        }
        worst = worst.max(last);
    }
    if !(worst < NEWTON_TOLERANCE) {
        return Err(Error::NoConvergence {
            iterations: MAX_ITERATIONS,
        });
    }
    Ok(roots)
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::zero();
    let mut dv = Complex64::zero();
    for &a in c.iter().rev() {
        dv = dv * z + v;
        v = v * z + a;
    }
    (v, dv)
}

/// `p(z) / p'(z)` with `p` evaluated exactly at the binary value of `z`.
fn exact_newton_step(p: &RatPoly, dp: &RatPoly, z: Complex64) -> Complex64 {
    let (Some(re), Some(im)) = (Q::from_float(z.re), Q::from_float(z.im)) else {
        return Complex64::new(f64::NAN, f64::NAN);
    };
    let (pr, pi) = eval_complex(p, &re, &im);
    let (dr, di) = eval_complex(dp, &re, &im);
    let den = &dr * &dr + &di * &di;
    if den.is_zero() {
        return Complex64::new(f64::NAN, f64::NAN);
    }
    let nr = (&pr * &dr + &pi * &di) / &den;
    let ni = (&pi * &dr - &pr * &di) / &den;
    Complex64::new(rational::to_f64(&nr), rational::to_f64(&ni))
}

fn eval_complex(p: &RatPoly, re: &Q, im: &Q) -> (Q, Q) {
    let mut vr = Q::zero();
    let mut vi = Q::zero();
    for a in p.coeffs().iter().rev() {
        let nr = &vr * re - &vi * im + a;
        let ni = &vr * im + &vi * re;
        vr = nr;
        vi = ni;
    }
    (vr, vi)
}

fn ser_rational<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::render(q))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    #[serde(serialize_with = "ser_rational")]
    pub target_real_part: Q,
    pub roots: Vec<Root>,
    /// `max |Re z − a|`; infinite when the numeric path failed.
    pub max_deviation: f64,
    pub numeric_converged: bool,
    pub symmetry_exact: bool,
    /// `None` when the certificate cannot be formed (repeated roots).
    pub sturm_exact: Option<bool>,
    pub squarefree: bool,
}

impl RootReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.numeric_converged && self.max_deviation < tol && self.symmetry_exact && self.sturm_exact != Some(false)
    }

    pub fn certified(&self) -> bool {
        self.symmetry_exact && self.sturm_exact == Some(true)
    }
}

/// Numeric roots plus the exact certificate for the line `Re z = a`.
pub fn verify_line(p: &RatPoly, a: &Q) -> Result<RootReport> {
    let d = p
        .degree()
        .finite()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Precondition("degree must be at least 1".into()))?;
    let target = rational::to_f64(a);
    let (roots, max_deviation, numeric_converged) = match find_roots(p) {
        Ok(roots) => {
            let dev = roots.iter().map(|z| (z.re - target).abs()).fold(0.0, f64::max);
            (roots.into_iter().map(|z| Root { re: z.re, im: z.im }).collect(), dev, true)
        }
        Err(_) => (Vec::new(), f64::INFINITY, false),
    };
    let r = p.shift_argument(a);
    let symmetry_exact = r
        .coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| (d - k) % 2 == 0 || c.is_zero());
    let squarefree = p.is_squarefree();
    let sturm_exact = if !symmetry_exact {
        Some(false)
    } else if !squarefree {
        None
    } else {
        // r(iu) divided by the unit i^d
        let w = RatPoly::new(
            r.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| if (d - k) % 4 == 2 { -c.clone() } else { c.clone() })
                .collect(),
        );
        Some(sturm_count_real_roots(&w)? == d)
    };
    Ok(RootReport {
        target_real_part: a.clone(),
        roots,
        max_deviation,
        numeric_converged,
        symmetry_exact,
        sturm_exact,
        squarefree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn trivial_roots() {
        let r = find_roots(&p(&[1, 0, 1])).unwrap();
        assert!(close(r[0], Complex64::new(0.0, -1.0)) && close(r[1], Complex64::new(0.0, 1.0)));
        let r = find_roots(&p(&[-1, 1])).unwrap();
        assert_eq!(r, vec![Complex64::new(1.0, 0.0)]);
        assert!(find_roots(&p(&[3])).is_err());
    }

    #[test]
    fn repeated_and_zero_roots() {
        let f = p(&[0, 1]).pow(2) * p(&[-2, 1]).pow(3);
        let r = find_roots(&f).unwrap();
        assert_eq!(r.len(), 5);
        assert!(r[..2].iter().all(|z| z.norm() < 1e-12));
        assert!(r[2..].iter().all(|z| close(*z, Complex64::new(2.0, 0.0))));
    }

    #[test]
    fn line_examples() {
        let rep = verify_line(&p(&[2, -2, 1]), &int(1)).unwrap();
        assert!(rep.symmetry_exact && rep.sturm_exact == Some(true) && rep.passes(1e-8));
        let rep = verify_line(&p(&[3, -3, 1]), &frac(3, 2)).unwrap();
        assert!(rep.certified() && rep.max_deviation < 1e-12);
        let rep = verify_line(&p(&[3, -3, 1]), &int(1)).unwrap();
        assert!(!rep.symmetry_exact && !rep.passes(1e-8));
        // real roots 0 and 2 are symmetric about 1 but off the line
        let rep = verify_line(&p(&[0, -2, 1]), &int(1)).unwrap();
        assert!(rep.symmetry_exact);
        assert_eq!(rep.sturm_exact, Some(false));
        let rep = verify_line(&p(&[1, -2, 1]), &int(1)).unwrap();
        assert_eq!(rep.sturm_exact, None);
        assert!(!rep.squarefree);
    }

    #[test]
    fn report_json_shape() {
        let rep = verify_line(&p(&[2, -2, 1]), &frac(1, 1)).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["target_real_part"], "1");
        assert_eq!(v["roots"].as_array().unwrap().len(), 2);
        assert_eq!(v["roots"][0]["re"], 1.0);
    }
}
