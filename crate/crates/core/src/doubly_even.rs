//! Orders divisible by 4.
//!
//! The `n` noncomplementary pairs built for column pair `k` are stacked in
//! columns `k` and `n+1−k` (downwards for odd `k`, upwards for even `k`),
//! which gives an associated square whose rows already sum correctly.
//! Reversing a fixed set of rows then repairs the column sums.

use crate::cell::Cell;
use crate::error::{Error, Result};
use crate::order::{Order, OrderKind};
use crate::square::Square;
use crate::walk::{zigzag_is_left, Board};

/// The rearranged pairs for one column pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairList {
    /// Column index `1..=m`.
    pub k: usize,
    /// `n` pairs `(low, high)`; the `i`-th is `((k−1)n + i, 2p − kn + i)`.
    pub pairs: Vec<(i64, i64)>,
}

fn check(ord: &Order) -> Result<(usize, i64, usize)> {
    let (p, m) = ord.require(OrderKind::DoublyEven, 4)?;
    Ok((ord.n(), p, m))
}

fn to_square<T: Cell>(n: usize, cells: Vec<i64>) -> Result<Square<T>> {
    let cells = cells
        .into_iter()
        .map(T::from_i64)
        .collect::<Result<Vec<_>>>()?;
    Square::from_cells(n, cells)
}

pub fn rearranged_pairs(ord: &Order, k: usize) -> Result<PairList> {
    let (n, p, m) = check(ord)?;
    if !(1..=m).contains(&k) {
        return Err(Error::Domain(format!("column pair {k} is outside 1..={m}")));
    }
    let (n64, k64) = (n as i64, k as i64);
    let pairs = (1..=n64)
        .map(|i| ((k64 - 1) * n64 + i, 2 * p - k64 * n64 + i))
        .collect();
    Ok(PairList { k, pairs })
}

fn place_columns_raw(n: usize, p: i64, m: usize) -> Vec<i64> {
    let mut cells = vec![0i64; n * n];
    let n64 = n as i64;
    for k in 1..=m {
        let k64 = k as i64;
        for r in 1..=n {
            let r64 = r as i64;
            let (left, right) = if k % 2 == 1 {
                ((k64 - 1) * n64 + r64, 2 * p - k64 * n64 + r64)
            } else {
                (k64 * n64 - (r64 - 1), 2 * p - (k64 - 1) * n64 - (r64 - 1))
            };
            cells[(r - 1) * n + (k - 1)] = left;
            cells[(r - 1) * n + (n - k)] = right;
        }
    }
    cells
}

/// The associated but generally non-magic square before any rows are reversed.
pub fn place_columns<T: Cell>(ord: &Order) -> Result<Square<T>> {
    let (n, p, m) = check(ord)?;
    to_square(n, place_columns_raw(n, p, m))
}

/// Rows `2, 4, …, half` and `half+1, half+3, …, rows−1` (1-based).
pub fn swap_row_indices(rows: usize, half: usize) -> Result<Vec<usize>> {
    if rows == 0 || rows % 2 == 1 {
        return Err(Error::Domain(format!(
            "row swapping needs a positive even row count, got {rows}"
        )));
    }
    if half != rows / 2 || half % 2 == 1 {
        return Err(Error::Domain(format!(
            "half-count {half} must equal {rows}/2 and be even"
        )));
    }
    Ok((2..=half)
        .step_by(2)
        .chain((half + 1..rows).step_by(2))
        .collect())
}

/// Reverses the listed 1-based rows of a row-major `rows × width` block.
pub(crate) fn reverse_rows(cells: &mut [i64], width: usize, rows: &[usize]) {
    for &r in rows {
        cells[(r - 1) * width..r * width].reverse();
    }
}

/// The doubly-even magic square built column pair by column pair.
pub fn construct_doubly_even<T: Cell>(ord: &Order) -> Result<Square<T>> {
    let (n, p, m) = check(ord)?;
    let mut cells = place_columns_raw(n, p, m);
    reverse_rows(&mut cells, n, &swap_row_indices(n, m)?);
    to_square(n, cells)
}

/// The same square, written down one number at a time.
///
/// `1..=p` go down (or up) the column pairs from the outside in, alternating
/// sides; `p+1..=2p` then fill the remaining blank of every row from the
/// inside out, finishing in the bottom right corner.
pub fn walk_doubly_even<T: Cell>(ord: &Order) -> Result<Square<T>> {
    let (n, _, m) = check(ord)?;
    let rows_for = |k: usize| -> Vec<usize> {
        if k % 2 == 1 {
            (1..=n).collect()
        } else {
            (1..=n).rev().collect()
        }
    };
    let mut board = Board::new(n);
    let mut next = 1i64;
    for k in 1..=m {
        for (j, r) in rows_for(k).into_iter().enumerate() {
            let col = if zigzag_is_left(j + 1, n) {
                k
            } else {
                n + 1 - k
            };
            board.put(r, col, next);
            next += 1;
        }
    }
    for k in (1..=m).rev() {
        for r in rows_for(k) {
            board.fill_blank(r, k, n + 1 - k, next);
            next += 1;
        }
    }
    to_square(n, board.into_cells())
}
