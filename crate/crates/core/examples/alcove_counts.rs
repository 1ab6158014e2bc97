//! Ehrhart quasi-polynomials of fundamental alcoves against direct counts,
//! and their split by pole order.

use std::fmt::Write;

use linial::ehrhart::{decompose_ehrhart, denumerant_counts, ehrhart_quasi};
use linial::rational;
use linial::rootsystem::catalog_str;

pub fn run() -> String {
    let mut out = String::new();
    let g2 = catalog_str("G2").unwrap();
    let l = ehrhart_quasi(&g2).unwrap();
    writeln!(out, "L_G2:\n{l}").unwrap();
    for (q, count) in denumerant_counts(&g2, 12).iter().enumerate() {
        writeln!(out, "q = {q:>2}: {count:>3} points, formula {}", rational::render(&l.eval(q as i64))).unwrap();
    }
    let f4 = catalog_str("F4").unwrap();
    for part in decompose_ehrhart(&f4).unwrap() {
        let p = part.part.minimal_period();
        writeln!(out, "F4 part for mark {} (degree <= {}), period {}:\n{p}", part.mark, part.degree_bound, p.period()).unwrap();
    }
    out
}

fn main() {
    print!("{}", run());
}
