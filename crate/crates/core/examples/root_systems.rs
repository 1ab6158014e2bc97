//! Marks, Coxeter numbers and Ehrhart periods for every type up to rank 8.

use std::fmt::Write;

use linial::rootsystem::{catalog_up_to_rank, positive_roots};

pub fn run() -> String {
    let mut out = String::new();
    writeln!(out, "{:<4} {:<26} {:>3} {:>4} {:>7} {:>3} {:>6}", "type", "marks", "h", "rho", "rad rho", "f", "|Φ+|").unwrap();
    for info in catalog_up_to_rank(8) {
        let marks: Vec<String> = info.marks.iter().map(u64::to_string).collect();
        writeln!(
            out,
            "{:<4} {:<26} {:>3} {:>4} {:>7} {:>3} {:>6}",
            info.name(),
            marks.join(","),
            info.coxeter_h,
            info.period_rho,
            info.rad_rho,
            info.index_f,
            positive_roots(&info).len()
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run());
}
