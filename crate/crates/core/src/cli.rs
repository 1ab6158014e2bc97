//! Command-line front end: tables, verification runs, alcove counts and roots.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{gcd, lcm};
use crate::arrangement::Linial;
use crate::ehrhart::{decompose_ehrhart, denumerant_counts, ehrhart_quasi};
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::quasipoly::QuasiPoly;
use crate::rational::{self, Q};
use crate::rootsystem::{catalog_str, RootSystemInfo};
use crate::rootverify::verify_line;

#[derive(Parser, Debug)]
#[command(name = "linial", about = "Characteristic quasi-polynomials of Linial arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    pub format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Formula,
    Oracle,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Characteristic polynomials χ(A^[1,n], t) with their common real part.
    Table {
        #[arg(value_name = "TYPE")]
        root_type: String,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<u64>,
    },
    /// Check the period theorems and/or compare against point counts mod q.
    Verify {
        #[arg(value_name = "TYPE")]
        root_type: String,
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(long, default_value_t = 12)]
        q_max: u64,
    },
    /// Alcove lattice-point counts against the Ehrhart quasi-polynomial.
    Ehrhart {
        #[arg(value_name = "TYPE")]
        root_type: String,
        #[arg(long, default_value_t = 20)]
        q_max: u64,
    },
    /// Split the Ehrhart quasi-polynomial by the orders of its poles.
    Decompose {
        #[arg(value_name = "TYPE")]
        root_type: String,
    },
    /// Roots of χ(A^[1,n], t) and the certificate for Re z = nh/2.
    Roots {
        #[arg(value_name = "TYPE")]
        root_type: String,
        n: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

/// Rendered output and whether every requested check passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
    pub witness: Option<String>,
}

/// Tabular data plus the JSON form of the same result.
struct Report {
    title: String,
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
    success: bool,
    witness: Option<String>,
}

impl Report {
    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Json => {
                out = serde_json::to_string_pretty(&self.json).expect("json");
                out.push('\n');
            }
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(",")).unwrap();
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    writeln!(out, "{}", cells.join(",")).unwrap();
                }
            }
            Format::Md => {
                writeln!(out, "## {}\n", self.title).unwrap();
                writeln!(out, "| {} |", self.columns.join(" | ")).unwrap();
                writeln!(out, "|{}", "---|".repeat(self.columns.len())).unwrap();
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|c| c.replace('\n', "; ")).collect();
                    writeln!(out, "| {} |", cells.join(" | ")).unwrap();
                }
                writeln!(out, "\nall checks pass: {}", yes_no(self.success)).unwrap();
            }
        }
        out
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn coeff_strings(p: &RatPoly) -> Vec<String> {
    p.render_coeffs()
}

fn quasi_json(f: &QuasiPoly) -> Value {
    serde_json::to_value(f).expect("json")
}

/// Smallest `t ≥ 0` where two quasi-polynomials disagree.
fn quasi_witness(a: &QuasiPoly, b: &QuasiPoly) -> Option<i64> {
    let n = lcm(a.period(), b.period());
    let d = a.degree().max(b.degree()).finite().unwrap_or(0);
    a.first_difference(b, 0..(n * (d + 2)) as i64)
}

fn lookup(name: &str) -> Result<RootSystemInfo> {
    catalog_str(name)
}

/// `nh/2`
fn real_part(info: &RootSystemInfo, n: u64) -> Q {
    rational::frac((n * info.coxeter_h) as i64, 2)
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn cmd_table(info: &RootSystemInfo, ns: &[u64], jobs: usize) -> Result<Report> {
    let lin = Linial::new(info)?;
    let rows: Vec<Result<(Value, Vec<String>, bool)>> = in_pool(jobs, || {
        ns.par_iter()
            .map(|&n| {
                let chi = lin.char_quasi(n);
                let p = chi.constituent(1).clone();
                let (real, certified, ok) = if n == 0 {
                    (None, None, true)
                } else {
                    let a = real_part(info, n);
                    let rep = verify_line(&p, &a)?;
                    (Some(a), Some(rep.certified()), rep.certified())
                };
                let json = json!({
                    "type": info.name(),
                    "n": n,
                    "coeffs": coeff_strings(&p),
                    "period": chi.period(),
                    "real_part": real.as_ref().map(rational::render),
                    "certified": certified,
                });
                let row = vec![
                    n.to_string(),
                    p.to_string(),
                    real.as_ref().map_or("-".into(), rational::render),
                    certified.map_or("-".into(), |c| yes_no(c).into()),
                ];
                Ok((json, row, ok))
            })
            .collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let witness = rows
        .iter()
        .zip(ns)
        .find(|((_, _, ok), _)| !ok)
        .map(|(_, n)| format!("n = {n}: roots not certified on Re z = nh/2"));
    Ok(Report {
        title: format!("Characteristic polynomials for {}", info.name()),
        columns: vec!["n", "polynomial", "real part", "certified"],
        success: witness.is_none(),
        witness,
        json: Value::Array(rows.iter().map(|r| r.0.clone()).collect()),
        rows: rows.into_iter().map(|r| r.1).collect(),
    })
}

fn cmd_verify(info: &RootSystemInfo, n: u64, mode: Mode, q_max: u64, jobs: usize) -> Result<Report> {
    let lin = Linial::new(info)?;
    let chi = lin.char_quasi(n);
    let mut checks = serde_json::Map::new();
    let mut rows = Vec::new();
    let mut witness: Option<String> = None;
    let mut record = |name: &str, ok: Option<bool>, detail: String, witness_text: Option<String>| {
        checks.insert(name.into(), ok.map_or(Value::Null, Value::Bool));
        rows.push(vec![
            name.to_string(),
            ok.map_or("n/a".into(), |b| if b { "pass".into() } else { "FAIL".into() }),
            detail,
        ]);
        if ok == Some(false) && witness.is_none() {
            witness = witness_text.map(|w| format!("{name}: {w}"));
        }
    };
    if mode != Mode::Oracle {
        let g = gcd(n as i64 + 1, info.period_rho as i64) as usize;
        let (lhs, rhs) = lin.main_theorem_sides(n);
        let ok = lin.verify_main_theorem(n);
        let w = quasi_witness(&lhs, &rhs)
            .map(|t| format!("t = {t}"))
            .unwrap_or_else(|| format!("period {} does not divide {g}", lhs.period()));
        record("main", Some(ok), format!("period {} divides {g}", chi.period()), Some(w));

        let (lhs, rhs) = lin.corollary1_sides(n);
        let w = quasi_witness(&lhs, &rhs).map(|t| format!("t = {t}"));
        record("corollary1", Some(lhs == rhs), String::new(), w);

        let (lhs, rhs) = lin.rad_theorem_sides(n);
        let w = QuasiPoly::from_poly(lhs.clone())
            .first_difference(&QuasiPoly::from_poly(rhs.clone()), 0..(info.rank() as i64 + 2))
            .map(|t| format!("t = {t}"));
        record("rad", Some(lhs == rhs), String::new(), w);

        match lin.gcd_prime_polynomial(n) {
            Ok(p) => {
                let pq = QuasiPoly::from_poly(p);
                let w = quasi_witness(&chi, &pq).map(|t| format!("t = {t}"));
                record("gcd_prime", Some(chi == pq), String::new(), w);
            }
            Err(_) => record("gcd_prime", None, "gcd(n+1, rho) > 1".into(), None),
        }
    }
    if mode != Mode::Formula {
        let mismatches = in_pool(jobs, || lin.oracle_mismatches(n, 1..=q_max));
        let detail = format!("q = 1..{q_max}, {} mismatches", mismatches.len());
        let w = mismatches
            .first()
            .map(|m| format!("q = {}: count {} vs {}", m.q, m.count, rational::render(&m.formula)));
        record("oracle", Some(mismatches.is_empty()), detail, w);
    }
    let success = checks.values().all(|v| v.as_bool() != Some(false));
    let json = json!({
        "type": info.name(),
        "n": n,
        "coeffs": coeff_strings(chi.constituent(1)),
        "period": chi.period(),
        "checks": Value::Object(checks),
        "witness": witness,
    });
    Ok(Report {
        title: format!("Checks for {} with n = {n}", info.name()),
        columns: vec!["check", "result", "detail"],
        rows,
        json,
        success,
        witness,
    })
}

fn cmd_ehrhart(info: &RootSystemInfo, q_max: u64) -> Result<Report> {
    let l = ehrhart_quasi(info)?;
    let counts = denumerant_counts(info, q_max);
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut witness = None;
    for (q, count) in counts.iter().enumerate() {
        let formula = l.eval(q as i64);
        let ok = rational::big(count.clone()) == formula;
        if !ok && witness.is_none() {
            witness = Some(format!("q = {q}"));
        }
        rows.push(vec![q.to_string(), count.to_string(), rational::render(&formula)]);
        records.push(json!({"q": q, "count": count.to_string(), "formula": rational::render(&formula), "match": ok}));
    }
    Ok(Report {
        title: format!("Alcove lattice points for {}", info.name()),
        columns: vec!["q", "count", "formula"],
        rows,
        json: json!({"type": info.name(), "ehrhart": quasi_json(&l), "rows": records}),
        success: witness.is_none(),
        witness,
    })
}

fn cmd_decompose(info: &RootSystemInfo) -> Result<Report> {
    let l = ehrhart_quasi(info)?;
    let parts = decompose_ehrhart(info)?;
    let total = parts.iter().fold(QuasiPoly::zero(), |acc, p| &acc + &p.part);
    let resum = total == l;
    let shapes_ok = parts.iter().all(|p| {
        p.mark as usize % p.part.minimal_period().period() == 0
            && p.part.degree() <= crate::poly::Degree::Finite(p.degree_bound)
    });
    let rows = parts
        .iter()
        .map(|p| {
            let m = p.part.minimal_period();
            vec![
                p.mark.to_string(),
                p.degree_bound.to_string(),
                m.period().to_string(),
                m.to_string(),
            ]
        })
        .collect();
    let json_parts: Vec<Value> = parts
        .iter()
        .map(|p| {
            json!({
                "mark": p.mark,
                "degree_bound": p.degree_bound,
                "part": quasi_json(&p.part.minimal_period()),
            })
        })
        .collect();
    let success = resum && shapes_ok;
    Ok(Report {
        title: format!("Ehrhart decomposition for {}", info.name()),
        columns: vec!["mark", "degree bound", "period", "part"],
        rows,
        json: json!({"type": info.name(), "parts": json_parts, "resum": resum, "shapes": shapes_ok}),
        success,
        witness: (!success).then(|| quasi_witness(&total, &l).map_or("part shape".into(), |t| format!("t = {t}"))),
    })
}

fn cmd_roots(info: &RootSystemInfo, n: u64, tol: f64) -> Result<Report> {
    let lin = Linial::new(info)?;
    let p = lin.char_poly(n);
    if p.degree() < crate::poly::Degree::Finite(1) {
        return Err(Error::Precondition("rank 0".into()));
    }
    let a = real_part(info, n);
    let rep = verify_line(&p, &a)?;
    let success = rep.passes(tol);
    let target = rational::to_f64(&a);
    let rows = rep
        .roots
        .iter()
        .map(|z| {
            vec![
                format!("{:.16e}", z.re),
                format!("{:.16e}", z.im),
                format!("{:.3e}", (z.re - target).abs()),
            ]
        })
        .collect();
    let mut json = serde_json::to_value(&rep).expect("json");
    json["type"] = json!(info.name());
    json["n"] = json!(n);
    json["coeffs"] = json!(coeff_strings(&p));
    json["tol"] = json!(tol);
    let witness = (!success).then(|| {
        if !rep.symmetry_exact {
            "p(s + nh/2) is neither even nor odd".to_string()
        } else if rep.sturm_exact == Some(false) {
            "Sturm count below degree".to_string()
        } else {
            format!("max deviation {:e}", rep.max_deviation)
        }
    });
    Ok(Report {
        title: format!(
            "Roots for {} with n = {n}, target Re z = {}, max deviation {:.3e}, certified {}",
            info.name(),
            rational::render(&a),
            rep.max_deviation,
            yes_no(rep.certified())
        ),
        columns: vec!["re", "im", "deviation"],
        rows,
        json,
        success,
        witness,
    })
}

/// Execute a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let report = match &cli.command {
        Command::Table { root_type, n_list } => cmd_table(&lookup(root_type)?, n_list, cli.jobs)?,
        Command::Verify {
            root_type,
            n,
            mode,
            q_max,
        } => cmd_verify(&lookup(root_type)?, *n, *mode, *q_max, cli.jobs)?,
        Command::Ehrhart { root_type, q_max } => cmd_ehrhart(&lookup(root_type)?, *q_max)?,
        Command::Decompose { root_type } => cmd_decompose(&lookup(root_type)?)?,
        Command::Roots { root_type, n, tol } => cmd_roots(&lookup(root_type)?, *n, *tol)?,
    };
    Ok(Outcome {
        stdout: report.render(cli.format),
        success: report.success,
        witness: report.witness,
    })
}

/// Parse, run, print; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(w) = &out.witness {
                eprintln!("check failed, first witness: {w}");
            }
            if out.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
