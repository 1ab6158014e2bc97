//! Shift operators acting on quasi-polynomials.

use std::fmt::Write;

use linial::ehrhart::{cross_type_relations, cyclotomic_marks_operator, ehrhart_quasi};
use linial::eulerian::generalized_eulerian;
use linial::rootsystem::catalog_str;
use linial::{OperatorPoly, QuasiPoly};

pub fn run() -> String {
    let mut out = String::new();
    let e6 = catalog_str("E6").unwrap();
    let l = ehrhart_quasi(&e6).unwrap();
    let worpitzky = l.apply_s(&OperatorPoly::from_poly(generalized_eulerian(&e6))).minimal_period();
    writeln!(out, "R_E6(S) L_E6 = {worpitzky}").unwrap();
    let a6 = l.apply_s(&cyclotomic_marks_operator(&e6)).minimal_period();
    writeln!(out, "[1]_S[1]_S[2]_S[2]_S[3]_S[2]_S[1]_S L_E6 = {a6}").unwrap();
    writeln!(out, "minimal period of L_E6 averaged over steps of 2: {}", l.tilde(2).period()).unwrap();
    for rel in cross_type_relations(4).unwrap() {
        writeln!(out, "{}: {}", rel.text, rel.check().unwrap()).unwrap();
    }
    let sbar = QuasiPoly::new(vec![linial::RatPoly::from_ints(&[0, 1]), linial::RatPoly::zero()]).unwrap();
    let s = OperatorPoly::from_poly(linial::RatPoly::from_ints(&[0, 1]));
    writeln!(out, "S f = {}", sbar.apply_s(&s).to_string().replace('\n', "; ")).unwrap();
    writeln!(out, "S̄ f = {}", sbar.apply_sbar(&s).to_string().replace('\n', "; ")).unwrap();
    out
}

fn main() {
    print!("{}", run());
}
