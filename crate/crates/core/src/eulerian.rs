//! Eulerian polynomials and their root-system generalization.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{congruent_mod_power, cyclotomic_type, RatPoly};
use crate::rational::{self, Q};
use crate::rootsystem::{weyl_elements, RootSystemInfo};

/// `A_ℓ(t) = Σ_k A(ℓ, k) t^k` from `A(n, k) = k A(n−1, k) + (n−k+1) A(n−1, k−1)`.
pub fn eulerian(l: usize) -> RatPoly {
    // row[k] = A(n, k), k = 0..=n
    let mut row = vec![BigInt::one()];
    for n in 1..=l {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let keep = row.get(k).cloned().unwrap_or_default() * BigInt::from(k);
            let grow = row[k - 1].clone() * BigInt::from(n - k + 1);
            next[k] = keep + grow;
        }
        row = next;
    }
    RatPoly::from_bigints(&row)
}

/// `R_Φ(t) = [c_0]_t [c_1]_t ⋯ [c_ℓ]_t A_ℓ(t)`
pub fn generalized_eulerian(info: &RootSystemInfo) -> RatPoly {
    info.marks
        .iter()
        .fold(eulerian(info.rank()), |acc, &c| &acc * &cyclotomic_type(c as usize))
}

/// `(1/f) Σ_{ω ∈ W} t^{asc(ω)}` summed over the Weyl group.
pub fn generalized_eulerian_by_weyl(info: &RootSystemInfo, cap: usize) -> Result<RatPoly> {
    let elements = weyl_elements(info, cap)?;
    let mut counts = vec![0u64; info.coxeter_h as usize + 1];
    for w in &elements {
        let asc: u64 = w
            .positive
            .iter()
            .zip(&info.marks)
            .filter(|(pos, _)| **pos)
            .map(|(_, c)| c)
            .sum();
        counts[asc as usize] += 1;
    }
    let inv_f = rational::frac(1, info.index_f as i64);
    Ok(RatPoly::new(
        counts.into_iter().map(|c| rational::int(c as i64) * &inv_f).collect(),
    ))
}

/// `A_ℓ(t^n) ≡ n^{−(ℓ+1)} [n]_t^{ℓ+1} A_ℓ(t) mod (1−t)^{ℓ+1}`
pub fn eulerian_congruence_check(l: usize, n: usize) -> Result<bool> {
    if l < 1 || n < 2 {
        return Err(Error::Precondition(format!("need l >= 1 and n >= 2, got l = {l}, n = {n}")));
    }
    let a = eulerian(l);
    let lhs = a.compose_power(n);
    let scale = Q::one() / rational::big(num_traits::pow(BigInt::from(n), l + 1));
    let rhs = (cyclotomic_type(n).pow(l + 1) * &a).scale(&scale);
    Ok(congruent_mod_power(&lhs, &rhs, l + 1))
}

/// Both sides of `R_Φ(t^n) ≡ Π_i (1/n)[n]_{t^{c_i}} R_Φ(t) mod (1−t)^{ℓ+1}`.
pub fn generalized_congruence_operator(info: &RootSystemInfo, n: usize) -> Result<(RatPoly, RatPoly)> {
    if n < 1 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let r = generalized_eulerian(info);
    let lhs = r.compose_power(n);
    let inv_n = rational::frac(1, n as i64);
    let rhs = info.marks.iter().fold(r, |acc, &c| {
        &acc * &cyclotomic_type(n).compose_power(c as usize).scale(&inv_n)
    });
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Degree;
    use crate::rootsystem::{catalog_str, DEFAULT_WEYL_CAP};

    #[test]
    fn small_eulerian() {
        assert_eq!(eulerian(0), RatPoly::one());
        assert_eq!(eulerian(1), RatPoly::from_ints(&[0, 1]));
        assert_eq!(eulerian(2), RatPoly::from_ints(&[0, 1, 1]));
        assert_eq!(eulerian(3), RatPoly::from_ints(&[0, 1, 4, 1]));
        assert_eq!(eulerian(4), RatPoly::from_ints(&[0, 1, 11, 11, 1]));
    }

    #[test]
    fn generalized_examples() {
        let a4 = catalog_str("A4").unwrap();
        assert_eq!(generalized_eulerian(&a4), eulerian(4));
        let g2 = catalog_str("G2").unwrap();
        let expect = RatPoly::from_ints(&[1, 1]) * RatPoly::from_ints(&[1, 1, 1]) * eulerian(2);
        assert_eq!(generalized_eulerian(&g2), expect);
        assert_eq!(generalized_eulerian(&g2).degree(), Degree::Finite(5));
        let e6 = catalog_str("E6").unwrap();
        assert_eq!(generalized_eulerian(&e6).degree(), Degree::Finite(11));
    }

    #[test]
    fn weyl_sum_small_cases() {
        for name in ["A2", "G2", "B2", "C3"] {
            let info = catalog_str(name).unwrap();
            assert_eq!(
                generalized_eulerian_by_weyl(&info, DEFAULT_WEYL_CAP).unwrap(),
                generalized_eulerian(&info),
                "{name}"
            );
        }
    }

    #[test]
    fn congruence_examples() {
        assert!(eulerian_congruence_check(1, 2).unwrap());
        assert!(eulerian_congruence_check(2, 3).unwrap());
        assert!(eulerian_congruence_check(5, 6).unwrap());
        assert!(eulerian_congruence_check(0, 2).is_err());
        assert!(eulerian_congruence_check(2, 1).is_err());
    }

    #[test]
    fn generalized_congruence_examples() {
        let g2 = catalog_str("G2").unwrap();
        let (l, r) = generalized_congruence_operator(&g2, 1).unwrap();
        assert_eq!(l, r);
        let (l, r) = generalized_congruence_operator(&g2, 2).unwrap();
        assert!(congruent_mod_power(&l, &r, 3));
        let f4 = catalog_str("F4").unwrap();
        let (l, r) = generalized_congruence_operator(&f4, 5).unwrap();
        assert!(congruent_mod_power(&l, &r, 5));
    }
}
