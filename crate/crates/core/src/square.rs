use std::fmt;

use crate::cell::Cell;
use crate::error::{Error, Result};

/// An `n × n` grid of integers.
///
/// External addressing is 1-based `(row, col)` with row 1 at the top and
/// column 1 at the left. Storage is row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square<T> {
    n: usize,
    cells: Vec<T>,
}

impl<T: Cell> Square<T> {
    /// Builds a square from a list of rows, rejecting empty or ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed("the grid has no rows".into()));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Malformed(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        Ok(Square {
            n,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a square from `n²` row-major cells.
    pub fn from_cells(n: usize, cells: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("the grid has no rows".into()));
        }
        if cells.len() != n * n {
            return Err(Error::Malformed(format!(
                "{} cells cannot form a {n}×{n} grid",
                cells.len()
            )));
        }
        Ok(Square { n, cells })
    }

    /// Builds a square by evaluating `f(row, col)` with 1-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n > 0, "a square needs at least one row");
        let mut cells = Vec::with_capacity(n * n);
        for r in 1..=n {
            for c in 1..=n {
                cells.push(f(r, c));
            }
        }
        Square { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cell at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> T {
        assert!(
            (1..=self.n).contains(&row) && (1..=self.n).contains(&col),
            "({row}, {col}) is outside a {0}×{0} square",
            self.n
        );
        self.cells[(row - 1) * self.n + (col - 1)]
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[T] {
        &self.cells
    }

    /// Row `row` (1-based).
    pub fn row(&self, row: usize) -> &[T] {
        let start = (row - 1) * self.n;
        &self.cells[start..start + self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.cells.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(<[T]>::to_vec).collect()
    }

    /// Returns a copy with cells `a` and `b` (1-based) exchanged.
    pub fn with_swapped(&self, a: (usize, usize), b: (usize, usize)) -> Self {
        let idx = |(r, c): (usize, usize)| (r - 1) * self.n + (c - 1);
        let mut cells = self.cells.clone();
        cells.swap(idx(a), idx(b));
        Square { n: self.n, cells }
    }

    /// Converts every cell to another integer type.
    pub fn convert<U: Cell>(&self) -> Result<Square<U>> {
        let cells = self
            .cells
            .iter()
            .map(|v| {
                U::from(*v)
                    .ok_or_else(|| Error::Overflow(format!("{v} does not fit the cell type")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Square { n: self.n, cells })
    }

    /// Rotated a quarter turn clockwise.
    pub fn rotate90(&self) -> Self {
        let n = self.n;
        Square::from_fn(n, |r, c| self.get(n + 1 - c, r))
    }

    /// Mirrored left to right.
    pub fn reflect(&self) -> Self {
        let n = self.n;
        Square::from_fn(n, |r, c| self.get(r, n + 1 - c))
    }

    /// Same size, largest entry width.
    pub(crate) fn display_width(&self) -> usize {
        self.cells
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
    }
}

impl<T: Cell> fmt::Display for Square<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.display_width();
        for row in self.rows() {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
