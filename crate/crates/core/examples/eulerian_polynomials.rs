//! Eulerian polynomials and their Weyl-group generalization.

use std::fmt::Write;

use linial::eulerian::{eulerian, generalized_eulerian, generalized_eulerian_by_weyl};
use linial::rootsystem::{catalog_str, DEFAULT_WEYL_CAP};

pub fn run() -> String {
    let mut out = String::new();
    for l in 1..=6 {
        writeln!(out, "A_{l}(t) = {}", eulerian(l)).unwrap();
    }
    for name in ["B3", "G2", "F4"] {
        let info = catalog_str(name).unwrap();
        let product = generalized_eulerian(&info);
        let by_weyl = generalized_eulerian_by_weyl(&info, DEFAULT_WEYL_CAP).unwrap();
        writeln!(out, "R_{name}(t) = {product}  (Weyl sum agrees: {})", product == by_weyl).unwrap();
    }
    out
}

fn main() {
    print!("{}", run());
}
