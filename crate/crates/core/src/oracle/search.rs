//! Backtracking enumeration of primitive magic squares.
//!
//! Cells are filled in an order that completes lines as early as possible.
//! Whenever a cell is the last open cell of some row, column or diagonal its
//! value is forced, and every open line is bounded by the smallest and
//! largest sums its remaining cells could still reach.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::cell::Cell;
use crate::error::{Error, Result};
use crate::order::magic_constant;
use crate::square::Square;

use super::canonical_form;

/// Orders that run without an explicit acknowledgement.
pub const EXHAUSTIVE_ORDERS: [usize; 2] = [3, 4];

/// Largest order the search supports at all.
pub const MAX_OVERRIDE_ORDER: usize = 8;

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    /// Emit one canonical representative per symmetry class instead of every square.
    pub reduced: bool,
    /// Keep the emitted squares. Counting is unaffected.
    pub collect: bool,
    /// Stop keeping squares after this many. Counting is unaffected.
    pub limit: Option<usize>,
    /// Allow orders outside [`EXHAUSTIVE_ORDERS`].
    pub allow_long_run: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    pub order: usize,
    pub total_count: u64,
    /// Number of distinct dihedral orbits.
    pub reduced_count: u64,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct Enumeration<T> {
    pub stats: SearchStats,
    /// Squares in search order, or sorted canonical forms when `reduced` is set.
    pub squares: Vec<Square<T>>,
}

struct Plan {
    n: usize,
    target: i32,
    max_value: u16,
    order: Vec<usize>,
    /// Lines through each cell.
    lines_of: Vec<Vec<usize>>,
    /// For each step: lines this step closes.
    closes: Vec<Vec<usize>>,
    /// For each step and each line through the cell: open cells left after this step.
    remaining: Vec<Vec<(usize, usize)>>,
}

impl Plan {
    fn new(n: usize) -> Result<Self> {
        let target = magic_constant(n)? as i32;
        let mut lines: Vec<Vec<usize>> = Vec::new();
        for r in 0..n {
            lines.push((0..n).map(|c| r * n + c).collect());
        }
        for c in 0..n {
            lines.push((0..n).map(|r| r * n + c).collect());
        }
        lines.push((0..n).map(|i| i * n + i).collect());
        lines.push((0..n).map(|i| i * n + (n - 1 - i)).collect());
        // A 1×1 square's two diagonals coincide with its row; harmless.
        let mut lines_of = vec![Vec::new(); n * n];
        for (li, line) in lines.iter().enumerate() {
            for &cell in line {
                lines_of[cell].push(li);
            }
        }

        let mut filled = vec![false; n * n];
        let mut open: Vec<usize> = lines.iter().map(Vec::len).collect();
        let mut order = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            let score = |cell: usize| -> (bool, usize) {
                let closes = lines_of[cell].iter().any(|&l| open[l] == 1);
                let progress = lines_of[cell].iter().map(|&l| n - open[l]).sum();
                (closes, progress)
            };
            let best = (0..n * n)
                .filter(|&c| !filled[c])
                .max_by(|&a, &b| score(a).cmp(&score(b)).then(b.cmp(&a)))
                .expect("an open cell");
            filled[best] = true;
            for &l in &lines_of[best] {
                open[l] -= 1;
            }
            order.push(best);
        }

        let mut open: Vec<usize> = lines.iter().map(Vec::len).collect();
        let mut closes = Vec::with_capacity(n * n);
        let mut remaining = Vec::with_capacity(n * n);
        for &cell in &order {
            let mut c = Vec::new();
            let mut rem = Vec::new();
            for &l in &lines_of[cell] {
                open[l] -= 1;
                if open[l] == 0 {
                    c.push(l);
                } else {
                    rem.push((l, open[l]));
                }
            }
            closes.push(c);
            remaining.push(rem);
        }

        Ok(Plan {
            n,
            target,
            max_value: (n * n) as u16,
            order,
            lines_of,
            closes,
            remaining,
        })
    }
}

struct Worker<'a> {
    plan: &'a Plan,
    cells: Vec<u16>,
    used: u128,
    line_sums: Vec<i32>,
    nodes: u64,
    found: Vec<Vec<u16>>,
    count: u64,
    keep: Option<usize>,
}

impl<'a> Worker<'a> {
    fn new(plan: &'a Plan, keep: Option<usize>) -> Self {
        let n = plan.n;
        Worker {
            plan,
            cells: vec![0; n * n],
            used: 0,
            line_sums: vec![0; 2 * n + 2],
            nodes: 0,
            found: Vec::new(),
            count: 0,
            keep,
        }
    }

    /// Sum of the `k` smallest and `k` largest unused values.
    fn reach(&self, k: usize) -> (i32, i32) {
        let (mut lo, mut hi) = (0i32, 0i32);
        let mut taken = 0;
        for v in 1..=self.plan.max_value {
            if taken == k {
                break;
            }
            if self.used & (1u128 << v) == 0 {
                lo += v as i32;
                taken += 1;
            }
        }
        taken = 0;
        for v in (1..=self.plan.max_value).rev() {
            if taken == k {
                break;
            }
            if self.used & (1u128 << v) == 0 {
                hi += v as i32;
                taken += 1;
            }
        }
        (lo, hi)
    }

    fn feasible(&self, step: usize) -> bool {
        let target = self.plan.target;
        for &l in &self.plan.closes[step] {
            if self.line_sums[l] != target {
                return false;
            }
        }
        for &(l, left) in &self.plan.remaining[step] {
            let need = target - self.line_sums[l];
            let (lo, hi) = self.reach(left);
            if need < lo || need > hi {
                return false;
            }
        }
        true
    }

    fn place(&mut self, cell: usize, v: u16) {
        self.cells[cell] = v;
        self.used |= 1u128 << v;
        for &l in &self.plan.lines_of[cell] {
            self.line_sums[l] += v as i32;
        }
        self.nodes += 1;
    }

    fn unplace(&mut self, cell: usize, v: u16) {
        self.used &= !(1u128 << v);
        for &l in &self.plan.lines_of[cell] {
            self.line_sums[l] -= v as i32;
        }
    }

    fn try_value(&mut self, step: usize, v: u16) {
        let cell = self.plan.order[step];
        self.place(cell, v);
        if self.feasible(step) {
            self.descend(step + 1);
        }
        self.unplace(cell, v);
    }

    fn descend(&mut self, step: usize) {
        let plan = self.plan;
        if step == plan.order.len() {
            self.count += 1;
            if self.keep.is_none_or(|k| self.found.len() < k) {
                self.found.push(self.cells.clone());
            }
            return;
        }
        if let Some(&line) = plan.closes[step].first() {
            let v = plan.target - self.line_sums[line];
            if v >= 1 && v <= plan.max_value as i32 && self.used & (1u128 << v) == 0 {
                self.try_value(step, v as u16);
            }
            return;
        }
        for v in 1..=plan.max_value {
            if self.used & (1u128 << v) == 0 {
                self.try_value(step, v);
            }
        }
    }
}

/// Counts every primitive magic square of order `n` by exhaustive search.
///
/// Only orders 3 and 4 run by default; anything else up to
/// [`MAX_OVERRIDE_ORDER`] needs `allow_long_run`, and order 5 and up will
/// not finish in any reasonable time. The search is split across threads
/// by the value of the first cell; every result is independent of the
/// thread count.
pub fn enumerate<T: Cell>(n: usize, opts: &EnumerateOptions) -> Result<Enumeration<T>> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    if !EXHAUSTIVE_ORDERS.contains(&n) && !opts.allow_long_run {
        return Err(Error::unsupported(
            n,
            "exhaustive enumeration runs only for orders 3 and 4 without an explicit override",
        ));
    }
    if n > MAX_OVERRIDE_ORDER {
        return Err(Error::unsupported(
            n,
            format!("exhaustive enumeration is limited to orders up to {MAX_OVERRIDE_ORDER}"),
        ));
    }
    let start = Instant::now();
    let plan = Plan::new(n)?;

    // Squares are needed for orbit counting regardless of what the caller keeps.
    let branches: Vec<Worker> = (1..=plan.max_value)
        .into_par_iter()
        .map(|v| {
            let mut w = Worker::new(&plan, None);
            w.try_value(0, v);
            w
        })
        .collect();

    let mut total = 0u64;
    let mut nodes = 0u64;
    let mut all: Vec<Vec<u16>> = Vec::new();
    for w in branches {
        total += w.count;
        nodes += w.nodes;
        all.extend(w.found);
    }

    let to_square = |cells: &[u16]| -> Result<Square<T>> {
        let cells = cells
            .iter()
            .map(|&v| T::from_i64(v as i64))
            .collect::<Result<Vec<_>>>()?;
        Square::from_cells(n, cells)
    };

    let mut orbits: BTreeSet<Vec<u16>> = BTreeSet::new();
    for cells in &all {
        let sq = Square::from_cells(n, cells.iter().map(|&v| v as i32).collect())?;
        let canon = canonical_form(&sq);
        orbits.insert(canon.cells().iter().map(|&v| v as u16).collect());
    }

    let mut squares = Vec::new();
    if opts.collect {
        let keep = opts.limit.unwrap_or(usize::MAX);
        if opts.reduced {
            for cells in orbits.iter().take(keep) {
                squares.push(to_square(cells)?);
            }
        } else {
            for cells in all.iter().take(keep) {
                squares.push(to_square(cells)?);
            }
        }
    }

    Ok(Enumeration {
        stats: SearchStats {
            order: n,
            total_count: total,
            reduced_count: orbits.len() as u64,
            nodes_explored: nodes,
            elapsed: start.elapsed(),
        },
        squares,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_magic;

    #[test]
    fn plan_visits_each_cell_once() {
        for n in 1..=5 {
            let plan = Plan::new(n).unwrap();
            let mut seen = plan.order.clone();
            seen.sort_unstable();
            assert_eq!(seen, (0..n * n).collect::<Vec<_>>());
            // Each of the 2n+2 lines closes exactly once.
            let closed: usize = plan.closes.iter().map(Vec::len).sum();
            assert_eq!(closed, if n == 1 { 4 } else { 2 * n + 2 });
        }
    }

    #[test]
    fn order_three() {
        let e = enumerate::<i64>(
            3,
            &EnumerateOptions {
                collect: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(e.stats.total_count, 8);
        assert_eq!(e.stats.reduced_count, 1);
        assert_eq!(e.squares.len(), 8);
        assert!(e.squares.iter().all(|s| verify_magic(s).unwrap().is_magic));
    }

    #[test]
    fn tiny_orders_with_override() {
        let opts = EnumerateOptions {
            allow_long_run: true,
            ..Default::default()
        };
        let one = enumerate::<i64>(1, &opts).unwrap().stats;
        assert_eq!((one.total_count, one.reduced_count), (1, 1));
        let two = enumerate::<i64>(2, &opts).unwrap().stats;
        assert_eq!((two.total_count, two.reduced_count), (0, 0));
    }

    #[test]
    fn guards() {
        let opts = EnumerateOptions::default();
        for n in [1, 2, 5, 6] {
            assert!(matches!(
                enumerate::<i64>(n, &opts),
                Err(Error::UnsupportedOrder { .. })
            ));
        }
        let long = EnumerateOptions {
            allow_long_run: true,
            ..Default::default()
        };
        assert!(matches!(
            enumerate::<i64>(9, &long),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(matches!(
            enumerate::<i64>(0, &long),
            Err(Error::InvalidOrder(0))
        ));
    }

    #[test]
    fn limit_only_truncates_the_stream() {
        let e = enumerate::<i64>(
            3,
            &EnumerateOptions {
                collect: true,
                limit: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(e.squares.len(), 3);
        assert_eq!(e.stats.total_count, 8);
        let e = enumerate::<i64>(
            3,
            &EnumerateOptions {
                collect: true,
                reduced: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(e.squares.len(), 1);
        assert_eq!(e.squares[0].cells(), &[2, 7, 6, 9, 5, 1, 4, 3, 8]);
    }
}
