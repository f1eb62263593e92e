//! Magic-square verification and the parallel / associated / mixed classification.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cell::Cell;
use crate::error::{Error, Result};
use crate::order::magic_constant;
use crate::square::Square;

/// How the complementary pairs of a primitive square are laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    /// Every pair has the same displacement, up to sign.
    Parallel,
    /// Every pair is symmetric about the centre.
    Associated,
    /// Neither.
    Mixed,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Parallel => "parallel",
            Classification::Associated => "associated",
            Classification::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Classification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "parallel" => Ok(Classification::Parallel),
            "associated" => Ok(Classification::Associated),
            "mixed" => Ok(Classification::Mixed),
            other => Err(Error::Domain(format!("unknown classification {other:?}"))),
        }
    }
}

/// Outcome of [`verify_magic`]. Sums are widened to `i128`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MagicReport {
    pub order: usize,
    pub magic_sum_expected: i128,
    pub row_sums: Vec<i128>,
    pub col_sums: Vec<i128>,
    pub diag_main: i128,
    pub diag_anti: i128,
    pub is_permutation: bool,
    pub is_magic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
}

impl MagicReport {
    /// Rows, columns and diagonals whose sum misses the target, as
    /// human-readable labels with 1-based indices.
    pub fn failing_lines(&self) -> Vec<String> {
        let target = self.magic_sum_expected;
        let mut out = Vec::new();
        for (i, s) in self.row_sums.iter().enumerate() {
            if *s != target {
                out.push(format!("row {} sums to {s}", i + 1));
            }
        }
        for (i, s) in self.col_sums.iter().enumerate() {
            if *s != target {
                out.push(format!("column {} sums to {s}", i + 1));
            }
        }
        if self.diag_main != target {
            out.push(format!("main diagonal sums to {}", self.diag_main));
        }
        if self.diag_anti != target {
            out.push(format!("anti-diagonal sums to {}", self.diag_anti));
        }
        out
    }
}

impl fmt::Display for MagicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "magic sum: {}", self.magic_sum_expected)?;
        writeln!(f, "permutation of 1..n²: {}", self.is_permutation)?;
        writeln!(f, "magic: {}", self.is_magic)?;
        for line in self.failing_lines() {
            writeln!(f, "  {line}")?;
        }
        if let Some(c) = self.classification {
            writeln!(f, "classification: {c}")?;
        }
        Ok(())
    }
}

/// True when the cells are exactly `{1, …, n²}`.
pub fn is_permutation<T: Cell>(s: &Square<T>) -> bool {
    let len = s.cells().len();
    let mut seen = vec![false; len];
    for v in s.cells() {
        let v = v.wide();
        if v < 1 || v > len as i128 {
            return false;
        }
        let slot = &mut seen[v as usize - 1];
        if *slot {
            return false;
        }
        *slot = true;
    }
    true
}

/// Computes every line sum and the permutation check.
///
/// The classification is attached only when the square is both magic and
/// primitive, and only when it is defined for the order (see [`classify`]).
pub fn verify_magic<T: Cell>(s: &Square<T>) -> Result<MagicReport> {
    let n = s.n();
    let target = magic_constant(n)? as i128;
    let row_sums: Vec<i128> = s.rows().map(|r| r.iter().map(|v| v.wide()).sum()).collect();
    let col_sums: Vec<i128> = (1..=n)
        .map(|c| (1..=n).map(|r| s.get(r, c).wide()).sum())
        .collect();
    let diag_main = (1..=n).map(|i| s.get(i, i).wide()).sum();
    let diag_anti = (1..=n).map(|i| s.get(i, n + 1 - i).wide()).sum();
    let is_permutation = is_permutation(s);
    let lines_ok = row_sums.iter().chain(&col_sums).all(|&v| v == target)
        && diag_main == target
        && diag_anti == target;
    let is_magic = lines_ok && is_permutation;
    let classification = if is_magic { classify(s).ok() } else { None };
    Ok(MagicReport {
        order: n,
        magic_sum_expected: target,
        row_sums,
        col_sums,
        diag_main,
        diag_anti,
        is_permutation,
        is_magic,
        classification,
    })
}

fn require_primitive<T: Cell>(s: &Square<T>) -> Result<()> {
    if is_permutation(s) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "the square is not a permutation of 1..={}, so complements are undefined",
            s.n() * s.n()
        )))
    }
}

/// True when every value `a` at `(r, c)` has its complement at `(n+1−r, n+1−c)`.
pub fn is_associated<T: Cell>(s: &Square<T>) -> Result<bool> {
    require_primitive(s)?;
    let n = s.n();
    let pair_sum = (n * n + 1) as i128;
    Ok((1..=n).all(|r| {
        (1..=n).all(|c| s.get(r, c).wide() + s.get(n + 1 - r, n + 1 - c).wide() == pair_sum)
    }))
}

/// 1-based positions indexed by value: `positions[v - 1]` holds the cell of `v`.
fn positions<T: Cell>(s: &Square<T>) -> Vec<(i64, i64)> {
    let n = s.n();
    let mut pos = vec![(0, 0); n * n];
    for (i, v) in s.cells().iter().enumerate() {
        pos[v.wide() as usize - 1] = ((i / n + 1) as i64, (i % n + 1) as i64);
    }
    pos
}

/// Displacement from the smaller to the larger member of each complementary pair.
pub fn pair_displacements<T: Cell>(s: &Square<T>) -> Result<Vec<(i64, i64)>> {
    require_primitive(s)?;
    let n = s.n();
    if n % 2 == 1 {
        return Err(Error::unsupported(
            n,
            "pair displacements need an even order (odd orders have a self-paired centre)",
        ));
    }
    let pos = positions(s);
    let cells = n * n;
    Ok((1..=cells / 2)
        .map(|a| {
            let lo = pos[a - 1];
            let hi = pos[cells - a];
            (hi.0 - lo.0, hi.1 - lo.1)
        })
        .collect())
}

/// True when all pair displacements are equal up to overall sign.
pub fn is_parallel<T: Cell>(s: &Square<T>) -> Result<bool> {
    let d = pair_displacements(s)?;
    let first = d[0];
    let flipped = (-first.0, -first.1);
    Ok(d.iter().all(|&v| v == first || v == flipped))
}

/// Classifies a primitive square.
///
/// Associated is checked first, then parallel. Odd orders can only be
/// reported as associated: parallelism is undefined there, so an odd square
/// that is not associated gives an unsupported-order error.
pub fn classify<T: Cell>(s: &Square<T>) -> Result<Classification> {
    if is_associated(s)? {
        return Ok(Classification::Associated);
    }
    if is_parallel(s)? {
        Ok(Classification::Parallel)
    } else {
        Ok(Classification::Mixed)
    }
}
