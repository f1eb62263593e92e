//! Orders congruent to 2 mod 4.
//!
//! Rows `2..=n−1` form an `(n−2) × n` block filled like the doubly-even
//! case with every number except the `2n` middle ones. Those middle numbers
//! go into the first and last rows, each column holding a complementary
//! pair.

use crate::cell::Cell;
use crate::doubly_even::{reverse_rows, swap_row_indices};
use crate::error::{Error, Result};
use crate::order::{Order, OrderKind};
use crate::square::Square;
use crate::walk::{zigzag_is_left, Board};

/// The middle sequence reserved for the outer rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinglyLayout {
    pub ord: Order,
    /// `(n² − 2n)/2`: how many of the smallest numbers (and of the largest) the inner block uses.
    pub q: i64,
    /// `p−n+1, …, p+n`.
    pub a: Vec<i64>,
}

impl SinglyLayout {
    /// `a_j` for 1-based `j`.
    fn at(&self, j: usize) -> i64 {
        self.a[j - 1]
    }
}

/// Top and bottom rows of a singly-even square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterRows {
    pub r1: Vec<i64>,
    pub rn: Vec<i64>,
}

fn check(ord: &Order) -> Result<(usize, i64, usize)> {
    let (p, m) = ord.require(OrderKind::SinglyEven, 6)?;
    Ok((ord.n(), p, m))
}

pub fn middle_sequence(ord: &Order) -> Result<SinglyLayout> {
    let (n, p, _) = check(ord)?;
    let n64 = n as i64;
    Ok(SinglyLayout {
        ord: *ord,
        q: p - n64,
        a: (p - n64 + 1..=p + n64).collect(),
    })
}

/// The inner block before any rows are reversed, row-major `(n−2) × n`.
fn place_inner_raw(n: usize, p: i64, m: usize) -> Vec<i64> {
    let rows = n - 2;
    let mut cells = vec![0i64; rows * n];
    let h = rows as i64;
    for k in 1..=m {
        let k64 = k as i64;
        for r in 1..=rows {
            let r64 = r as i64;
            let (left, right) = if k == m {
                // Middle pair keeps its complementary pairs; m is odd so it runs downwards.
                ((k64 - 1) * h + r64, 2 * p - (k64 - 1) * h + 1 - r64)
            } else if k % 2 == 1 {
                ((k64 - 1) * h + r64, 2 * p - k64 * h + r64)
            } else {
                (k64 * h - (r64 - 1), 2 * p - (k64 - 1) * h - (r64 - 1))
            };
            cells[(r - 1) * n + (k - 1)] = left;
            cells[(r - 1) * n + (n - k)] = right;
        }
    }
    cells
}

fn to_rows<T: Cell>(width: usize, cells: Vec<i64>) -> Result<Vec<Vec<T>>> {
    cells
        .chunks(width)
        .map(|row| row.iter().map(|&v| T::from_i64(v)).collect())
        .collect()
}

/// The `(n−2) × n` inner block before row reversal.
pub fn place_inner_columns<T: Cell>(ord: &Order) -> Result<Vec<Vec<T>>> {
    let (n, p, m) = check(ord)?;
    to_rows(n, place_inner_raw(n, p, m))
}

fn inner_raw(n: usize, p: i64, m: usize) -> Result<Vec<i64>> {
    let mut cells = place_inner_raw(n, p, m);
    let rows = n - 2;
    reverse_rows(&mut cells, n, &swap_row_indices(rows, rows / 2)?);
    Ok(cells)
}

/// The `(n−2) × n` inner block, rows 2..=n−1 of the finished square.
pub fn inner_square<T: Cell>(ord: &Order) -> Result<Vec<Vec<T>>> {
    let (n, p, m) = check(ord)?;
    to_rows(n, inner_raw(n, p, m)?)
}

pub fn outer_rows(layout: &SinglyLayout) -> Result<OuterRows> {
    let (n, _, m) = check(&layout.ord)?;
    if layout.a.len() != 2 * n || layout.q != layout.a[0] - 1 {
        return Err(Error::Domain(format!(
            "middle sequence for order {n} must have {} terms starting at q+1",
            2 * n
        )));
    }
    if layout.a.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::Domain("middle sequence must step by 1".into()));
    }
    let pair_sum = layout.ord.cells() + 1;
    let mut top: Vec<Option<i64>> = vec![None; n + 1];
    let mut bottom: Vec<Option<i64>> = vec![None; n + 1];

    top[1] = Some(layout.at(n + 1));
    top[n] = Some(layout.at(n + 2));
    bottom[1] = Some(layout.at(n));
    for c in (2..=m + 1).step_by(2) {
        top[c] = Some(layout.at(c - 1));
    }
    for c in (m + 4..n).step_by(2) {
        top[c] = Some(layout.at(c - 1));
    }
    for c in (3..=m).step_by(2) {
        bottom[c] = Some(layout.at(c - 1));
    }
    bottom[m + 2] = Some(layout.at(m + 1));
    bottom[m + 3] = Some(layout.at(m + 2));
    for c in (m + 5..=n).step_by(2) {
        bottom[c] = Some(layout.at(c - 1));
    }

    let mut r1 = Vec::with_capacity(n);
    let mut rn = Vec::with_capacity(n);
    for c in 1..=n {
        let (t, b) = match (top[c], bottom[c]) {
            (Some(t), Some(b)) if t + b == pair_sum => (t, b),
            (Some(t), Some(b)) => {
                return Err(Error::Domain(format!(
                    "column {c} received {t} and {b}, which are not complements"
                )))
            }
            (Some(t), None) => (t, pair_sum - t),
            (None, Some(b)) => (pair_sum - b, b),
            (None, None) => {
                return Err(Error::Domain(format!("column {c} received no outer value")))
            }
        };
        r1.push(t);
        rn.push(b);
    }
    Ok(OuterRows { r1, rn })
}

/// The singly-even magic square: outer rows around the inner block.
pub fn construct_singly_even<T: Cell>(ord: &Order) -> Result<Square<T>> {
    let (n, p, m) = check(ord)?;
    let outer = outer_rows(&middle_sequence(ord)?)?;
    let mut cells = Vec::with_capacity(n * n);
    cells.extend(&outer.r1);
    cells.extend(inner_raw(n, p, m)?);
    cells.extend(&outer.rn);
    let cells = cells
        .into_iter()
        .map(T::from_i64)
        .collect::<Result<Vec<_>>>()?;
    Square::from_cells(n, cells)
}

/// The same square, written down one number at a time.
pub fn walk_singly_even<T: Cell>(ord: &Order) -> Result<Square<T>> {
    let (n, _, m) = check(ord)?;
    let height = n - 2;
    let rows_for = |k: usize| -> Vec<usize> {
        if k % 2 == 1 {
            (2..n).collect()
        } else {
            (2..n).rev().collect()
        }
    };
    let mut board = Board::new(n);
    let mut next = 1i64;
    let mut place = |board: &mut Board, r: usize, c: usize| {
        board.put(r, c, next);
        next += 1;
    };

    // Inner block, outside in: 1..=q.
    for k in 1..=m {
        for (j, r) in rows_for(k).into_iter().enumerate() {
            let col = if zigzag_is_left(j + 1, height) {
                k
            } else {
                n + 1 - k
            };
            place(&mut board, r, col);
        }
    }

    // q+1 ..= q+n−1 across columns 2..=n, alternating top and bottom with
    // q+m+1 and q+m+2 side by side.
    for i in 1..n {
        let on_top = if i <= m + 1 { i % 2 == 1 } else { i % 2 == 0 };
        place(&mut board, if on_top { 1 } else { n }, i + 1);
    }
    place(&mut board, n, 1);
    place(&mut board, 1, 1);
    place(&mut board, 1, n);

    // Remaining outer blanks, from column n−1 back to column 2.
    let mut value = next;
    for c in (2..n).rev() {
        board.fill_blank_in_column(c, 1, n, value);
        value += 1;
    }

    // Back into the inner block, inside out. The middle pair is traversed
    // upwards from beside q; every other pair in its original direction.
    for k in (1..=m).rev() {
        let rows: Vec<usize> = if k == m {
            rows_for(k).into_iter().rev().collect()
        } else {
            rows_for(k)
        };
        for r in rows {
            board.fill_blank(r, k, n + 1 - k, value);
            value += 1;
        }
    }
    debug_assert_eq!(value - 1, ord.cells());

    let cells = board
        .into_cells()
        .into_iter()
        .map(T::from_i64)
        .collect::<Result<Vec<_>>>()?;
    Square::from_cells(n, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_magic;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    #[test]
    fn middle_sequences() {
        let l = middle_sequence(&ord(10)).unwrap();
        assert_eq!(l.a, (41..=60).collect::<Vec<_>>());
        assert_eq!(l.q, 40);
        let l = middle_sequence(&ord(6)).unwrap();
        assert_eq!(l.a, (13..=24).collect::<Vec<_>>());
        assert_eq!(l.q, 12);
        for n in (6..=62).step_by(4) {
            let l = middle_sequence(&ord(n)).unwrap();
            assert_eq!(l.a.len(), 2 * n);
            assert_eq!(l.q, (n as i64 * n as i64 - 2 * n as i64) / 2);
            for j in 1..=2 * n {
                assert_eq!(l.at(j) + l.at(2 * n + 1 - j), ord(n).cells() + 1);
            }
        }
    }

    #[test]
    fn order_six_inner_block() {
        let inner: Vec<Vec<i64>> = inner_square(&ord(6)).unwrap();
        assert_eq!(
            inner,
            vec![
                vec![1, 8, 9, 28, 32, 33],
                vec![34, 31, 27, 10, 7, 2],
                vec![35, 30, 26, 11, 6, 3],
                vec![4, 5, 12, 25, 29, 36],
            ]
        );
        assert!(inner.iter().all(|r| r.iter().sum::<i64>() == 111));
        for c in 0..6 {
            assert_eq!(inner.iter().map(|r| r[c]).sum::<i64>(), 74);
        }
    }

    #[test]
    fn order_six_outer_rows() {
        let o = outer_rows(&middle_sequence(&ord(6)).unwrap()).unwrap();
        assert_eq!(o.r1, vec![19, 13, 23, 15, 21, 20]);
        assert_eq!(o.rn, vec![18, 24, 14, 22, 16, 17]);
        assert_eq!(o.r1.iter().sum::<i64>(), 111);
        assert_eq!(o.rn.iter().sum::<i64>(), 111);
    }

    #[test]
    fn order_ten_outer_rows() {
        let o = outer_rows(&middle_sequence(&ord(10)).unwrap()).unwrap();
        assert_eq!(o.r1, vec![51, 41, 59, 43, 57, 45, 55, 54, 48, 52]);
        assert_eq!(o.rn, vec![50, 60, 42, 58, 44, 56, 46, 47, 53, 49]);
    }

    #[test]
    fn outer_rows_reject_bad_layouts() {
        let mut l = middle_sequence(&ord(10)).unwrap();
        l.a.pop();
        assert!(matches!(outer_rows(&l), Err(Error::Domain(_))));
        let mut l = middle_sequence(&ord(10)).unwrap();
        l.a.swap(3, 4);
        assert!(matches!(outer_rows(&l), Err(Error::Domain(_))));
    }

    #[test]
    fn order_six_and_fourteen_are_magic() {
        let six: Square<i64> = construct_singly_even(&ord(6)).unwrap();
        let report = verify_magic(&six).unwrap();
        assert!(report.is_magic);
        assert!(report.row_sums.iter().all(|&s| s == 111));
        let fourteen: Square<i64> = construct_singly_even(&ord(14)).unwrap();
        let report = verify_magic(&fourteen).unwrap();
        assert!(report.is_magic);
        assert_eq!(report.magic_sum_expected, 1379);
    }

    #[test]
    fn walk_reaches_bottom_right() {
        let sq: Square<i64> = walk_singly_even(&ord(10)).unwrap();
        assert_eq!(sq.get(10, 10), 49);
    }

    #[test]
    fn middle_columns_hold_pairs_before_reversal() {
        for n in (6..=30).step_by(4) {
            let o = ord(n);
            let m = o.m().unwrap();
            let pre: Vec<Vec<i64>> = place_inner_columns(&o).unwrap();
            assert!(pre.iter().all(|r| r[m - 1] + r[m] == o.cells() + 1));
        }
    }

    #[test]
    fn rejects_other_orders() {
        for n in [2, 4, 5, 8, 12] {
            assert!(matches!(
                construct_singly_even::<i64>(&ord(n)),
                Err(Error::UnsupportedOrder { .. })
            ));
            assert!(walk_singly_even::<i64>(&ord(n)).is_err());
            assert!(middle_sequence(&ord(n)).is_err());
        }
    }
}
