//! Catalog of irreducible root systems and the combinatorial data generated
//! from their Cartan matrices.
//!
//! Simple roots follow the Bourbaki numbering. Marks are stored in that
//! order with the affine mark `c_0 = 1` in front, so the highest root has
//! simple-root coordinates `marks[1..]`. The Cartan matrix uses
//! `A[i][j] = 2(α_i, α_j) / (α_j, α_j)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::rad;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub family: Family,
    pub rank: usize,
}

impl Label {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
            });
        }
        Ok(Label { family, rank })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Accepts `E6`, `e6`, `A_3`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownLabel(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(unknown()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| unknown())?;
        Label::new(family, rank)
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystemInfo {
    pub label: Label,
    /// `c_0, c_1, ..., c_ℓ` in Bourbaki node order, `c_0 = 1`.
    pub marks: Vec<u64>,
    /// Distinct marks `ĉ` (ascending) with `ℓ̂` = (number of marks divisible by `ĉ`) − 1.
    pub distinct_marks: Vec<(u64, usize)>,
    pub coxeter_h: u64,
    /// Minimal period of the Ehrhart quasi-polynomial of the fundamental alcove.
    pub period_rho: u64,
    pub rad_rho: u64,
    pub cartan: Vec<Vec<i64>>,
    /// Index of connection, `det(cartan)`.
    pub index_f: u64,
}

impl RootSystemInfo {
    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn name(&self) -> String {
        self.label.to_string()
    }
}

/// Simple-root coordinates of a positive root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PositiveRoot {
    pub coords: Vec<i64>,
}

pub fn catalog(label: Label) -> RootSystemInfo {
    let l = label.rank;
    let (marks_tail, rho): (Vec<u64>, u64) = match label.family {
        Family::A => (vec![1; l], 1),
        Family::B => (std::iter::once(1).chain(std::iter::repeat(2).take(l - 1)).collect(), 2),
        Family::C => (std::iter::repeat(2).take(l - 1).chain(std::iter::once(1)).collect(), 2),
        Family::D => {
            let mut m = vec![1];
            m.extend(std::iter::repeat(2).take(l - 3));
            m.extend([1, 1]);
            (m, 2)
        }
        Family::E => match l {
            6 => (vec![1, 2, 2, 3, 2, 1], 6),
            7 => (vec![2, 2, 3, 4, 3, 2, 1], 12),
            _ => (vec![2, 3, 4, 6, 5, 4, 3, 2], 60),
        },
        Family::F => (vec![2, 3, 4, 2], 12),
        Family::G => (vec![3, 2], 6),
    };
    let mut marks = vec![1];
    marks.extend(marks_tail);

    let mut distinct: Vec<u64> = marks.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let distinct_marks = distinct
        .iter()
        .map(|&c| (c, marks.iter().filter(|&&m| m % c == 0).count() - 1))
        .collect();

    let cartan = cartan_matrix(label);
    let index_f = determinant(&cartan) as u64;
    RootSystemInfo {
        label,
        coxeter_h: marks.iter().sum(),
        marks,
        distinct_marks,
        period_rho: rho,
        rad_rho: rad(rho),
        cartan,
        index_f,
    }
}

pub fn catalog_str(s: &str) -> Result<RootSystemInfo> {
    Ok(catalog(s.parse()?))
}

/// Every catalog entry of rank at most `max_rank`, family by family.
pub fn catalog_up_to_rank(max_rank: usize) -> Vec<RootSystemInfo> {
    let mut out = Vec::new();
    for (family, ranks) in [
        (Family::A, 1..=max_rank),
        (Family::B, 2..=max_rank),
        (Family::C, 2..=max_rank),
        (Family::D, 4..=max_rank),
        (Family::E, 6..=max_rank.min(8)),
        (Family::F, 4..=max_rank.min(4)),
        (Family::G, 2..=max_rank.min(2)),
    ] {
        for rank in ranks {
            out.push(catalog(Label::new(family, rank).expect("rank in range")));
        }
    }
    out
}

fn cartan_matrix(label: Label) -> Vec<Vec<i64>> {
    let l = label.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match label.family {
        Family::A => (0..l - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(l - 2, l - 1, -2, -1);
        }
        Family::C => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(l - 2, l - 1, -1, -2);
        }
        Family::D => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(l - 3, l - 1, -1, -1);
        }
        Family::E => {
            // α1 - α3 - α4 - α5 - ... with α2 attached to α4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..l - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -1, -3),
    }
    a
}

/// Fraction-free (Bareiss) determinant of a small integer matrix.
fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`
fn reflect(cartan: &[Vec<i64>], i: usize, beta: &[i64]) -> Vec<i64> {
    let pairing: i64 = beta.iter().enumerate().map(|(j, m)| m * cartan[j][i]).sum();
    let mut out = beta.to_vec();
    out[i] -= pairing;
    out
}

/// All roots (positive and negative) as the orbit of the simple roots under
/// the simple reflections; positive roots first, each half sorted by height
/// then lexicographically.
pub fn all_roots(info: &RootSystemInfo) -> Vec<Vec<i64>> {
    let l = info.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..l {
        let mut e = vec![0; l];
        e[i] = 1;
        if seen.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..l {
            let img = reflect(&info.cartan, i, &beta);
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|r| r.iter().all(|&m| m >= 0)).collect();
    positive.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    let negative: Vec<Vec<i64>> = positive.iter().map(|r| r.iter().map(|m| -m).collect()).collect();
    positive.into_iter().chain(negative).collect()
}

pub fn positive_roots(info: &RootSystemInfo) -> Vec<PositiveRoot> {
    let roots = all_roots(info);
    let half = roots.len() / 2;
    roots
        .into_iter()
        .take(half)
        .map(|coords| PositiveRoot { coords })
        .collect()
}

/// A Weyl group element as a permutation of [`all_roots`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// `perm[j]` is the index of `ω(β_j)`.
    pub perm: Vec<u32>,
    /// `positive[i]` records `ω(α_i) > 0` for `i = 0..=ℓ`, with `α_0 = −α̃`.
    pub positive: Vec<bool>,
}

pub const DEFAULT_WEYL_CAP: usize = 200_000;

/// Breadth-first closure of the simple reflections acting on the root set.
pub fn weyl_elements(info: &RootSystemInfo, cap: usize) -> Result<Vec<WeylElement>> {
    let roots = all_roots(info);
    let l = info.rank();
    let half = roots.len() / 2;
    let index: HashMap<&[i64], u32> = roots.iter().enumerate().map(|(k, r)| (r.as_slice(), k as u32)).collect();
    let reflections: Vec<Vec<u32>> = (0..l)
        .map(|i| roots.iter().map(|r| index[reflect(&info.cartan, i, r).as_slice()]).collect())
        .collect();

    let simple: Vec<u32> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            index[e.as_slice()]
        })
        .collect();
    let highest: Vec<i64> = info.marks[1..].iter().map(|&c| c as i64).collect();
    let neg_highest: Vec<i64> = highest.iter().map(|m| -m).collect();
    let alpha0 = *index
        .get(neg_highest.as_slice())
        .expect("highest root coordinates equal the marks");

    let identity: Vec<u32> = (0..roots.len() as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    let mut elements = Vec::new();
    while let Some(w) = queue.pop_front() {
        for s in &reflections {
            let ws: Vec<u32> = s.iter().map(|&j| w[j as usize]).collect();
            if !seen.contains(&ws) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(ws.clone());
                queue.push_back(ws);
            }
        }
        let positive = std::iter::once(alpha0)
            .chain(simple.iter().copied())
            .map(|k| (w[k as usize] as usize) < half)
            .collect();
        elements.push(WeylElement { perm: w, positive });
    }
    Ok(elements)
}
