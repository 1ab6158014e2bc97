//! Characteristic polynomials of the exceptional Linial arrangements.

use std::fmt::Write;

use linial::rootsystem::catalog_str;
use linial::Linial;

pub fn run() -> String {
    let mut out = String::new();
    for (name, ns) in [("E6", &[1u64, 2, 5][..]), ("F4", &[1, 2, 5]), ("E7", &[1, 2, 5]), ("E8", &[1, 2, 4, 5, 9, 14, 29])] {
        let lin = Linial::new(&catalog_str(name).unwrap()).unwrap();
        writeln!(out, "{name}").unwrap();
        for &n in ns {
            writeln!(out, "  n = {n:>2}: {}", lin.char_poly(n)).unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run());
}
