//! Periods of characteristic quasi-polynomials and the averaging formulas.

use std::fmt::Write;

use linial::arith::gcd;
use linial::rootsystem::catalog_str;
use linial::Linial;

pub fn run() -> String {
    let mut out = String::new();
    for name in ["E6", "F4", "G2"] {
        let lin = Linial::new(&catalog_str(name).unwrap()).unwrap();
        let rho = lin.info.period_rho;
        for n in 0..=2 * rho {
            let chi = lin.char_quasi(n);
            writeln!(
                out,
                "{name} n = {n:>2}: period {:>2} (gcd {:>2}), main {}, corollary {}, radical {}",
                chi.period(),
                gcd(n as i64 + 1, rho as i64),
                lin.verify_main_theorem(n),
                lin.verify_corollary1(n),
                lin.verify_rad_theorem(n)
            )
            .unwrap();
        }
    }
    let e6 = Linial::new(&catalog_str("E6").unwrap()).unwrap();
    writeln!(out, "E6, n = 6 from t^6 alone: {}", e6.gcd_prime_polynomial(6).unwrap()).unwrap();
    out
}

fn main() {
    print!("{}", run());
}
