//! Shared pieces of the consecutive-numbering walks.

/// Which column of a symmetric column pair receives the `j`-th number
/// (1-based) of a run of `len` numbers.
///
/// The run alternates left, right, left, … except that entries `len/2` and
/// `len/2 + 1` share a column, after which the alternation resumes.
pub(crate) fn zigzag_is_left(j: usize, len: usize) -> bool {
    if j <= len / 2 {
        j % 2 == 1
    } else {
        j.is_multiple_of(2)
    }
}

/// A partially filled grid with 1-based addressing.
pub(crate) struct Board {
    n: usize,
    cells: Vec<Option<i64>>,
}

impl Board {
    pub(crate) fn new(n: usize) -> Self {
        Board {
            n,
            cells: vec![None; n * n],
        }
    }

    pub(crate) fn get(&self, row: usize, col: usize) -> Option<i64> {
        self.cells[(row - 1) * self.n + col - 1]
    }

    pub(crate) fn put(&mut self, row: usize, col: usize, value: i64) {
        let slot = &mut self.cells[(row - 1) * self.n + col - 1];
        debug_assert!(slot.is_none(), "({row}, {col}) filled twice");
        *slot = Some(value);
    }

    /// Fills whichever of `(row, a)` and `(row, b)` is still blank.
    pub(crate) fn fill_blank(&mut self, row: usize, a: usize, b: usize, value: i64) {
        let col = if self.get(row, a).is_none() { a } else { b };
        self.put(row, col, value);
    }

    /// Fills whichever of `(top, col)` and `(bottom, col)` is still blank.
    pub(crate) fn fill_blank_in_column(
        &mut self,
        col: usize,
        top: usize,
        bottom: usize,
        value: i64,
    ) {
        let row = if self.get(top, col).is_none() {
            top
        } else {
            bottom
        };
        self.put(row, col, value);
    }

    pub(crate) fn into_cells(self) -> Vec<i64> {
        self.cells
            .into_iter()
            .map(|c| c.expect("walk left a blank cell"))
            .collect()
    }
}
