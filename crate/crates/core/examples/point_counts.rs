//! Counting points of (Z/q)^ℓ off the arrangement and comparing with χ_quasi.

use std::fmt::Write;

use linial::arrangement::oracle_count;
use linial::rational;
use linial::rootsystem::catalog_str;
use linial::Linial;

pub fn run() -> String {
    let mut out = String::new();
    let g2 = Linial::new(&catalog_str("G2").unwrap()).unwrap();
    let chi = g2.char_quasi(1);
    writeln!(out, "χ_quasi(G2, [1,1]):\n{chi}").unwrap();
    for q in 1..=13u64 {
        let count = oracle_count(&g2.info, 1, 1, q);
        writeln!(out, "q = {q:>2}: {count:>4} points, χ_quasi(q) = {}", rational::render(&chi.eval(q as i64))).unwrap();
    }
    let a2 = Linial::new(&catalog_str("A2").unwrap()).unwrap();
    writeln!(out, "A2 shift by k = 1 at q = 7: {}", a2.verify_shift_relation(1, 1, 7).unwrap()).unwrap();
    out
}

fn main() {
    print!("{}", run());
}
