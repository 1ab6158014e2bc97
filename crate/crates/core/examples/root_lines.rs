//! Roots of characteristic polynomials on the line Re z = nh/2.

use std::fmt::Write;

use linial::rational;
use linial::rootsystem::catalog_str;
use linial::rootverify::verify_line;
use linial::Linial;

pub fn run() -> String {
    let mut out = String::new();
    for (name, n) in [("F4", 1u64), ("E6", 5), ("E7", 5), ("E8", 29)] {
        let lin = Linial::new(&catalog_str(name).unwrap()).unwrap();
        let a = rational::frac((n * lin.info.coxeter_h) as i64, 2);
        let rep = verify_line(&lin.char_poly(n), &a).unwrap();
        writeln!(
            out,
            "{name} n = {n}: Re z = {}, max deviation {:.1e}, certified {}",
            rational::render(&a),
            rep.max_deviation,
            rep.certified()
        )
        .unwrap();
        for z in &rep.roots {
            writeln!(out, "    {:.12} {:+.12}i", z.re, z.im).unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run());
}
