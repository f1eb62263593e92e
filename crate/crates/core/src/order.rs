//! Square orders and the arithmetic that follows from them.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order accepted from external input.
pub const MAX_ORDER: usize = 10_000;

/// Parity class of an order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Odd,
    /// Divisible by 4.
    DoublyEven,
    /// Divisible by 2 but not by 4.
    SinglyEven,
}

/// A validated side length together with its derived constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Order {
    n: usize,
    kind: OrderKind,
    half_cells: Option<i64>,
    half_side: Option<usize>,
    magic_sum: i64,
}

impl Order {
    pub fn new(n: usize) -> Result<Self> {
        let magic_sum = magic_constant(n)?;
        let kind = match n % 4 {
            0 => OrderKind::DoublyEven,
            2 => OrderKind::SinglyEven,
            _ => OrderKind::Odd,
        };
        let even = kind != OrderKind::Odd;
        let half_cells = if even { Some(cell_count(n)? / 2) } else { None };
        let half_side = if even { Some(n / 2) } else { None };
        Ok(Order {
            n,
            kind,
            half_cells,
            half_side,
            magic_sum,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn is_even(&self) -> bool {
        self.kind != OrderKind::Odd
    }

    /// `p = n²/2`, defined for even orders.
    pub fn p(&self) -> Option<i64> {
        self.half_cells
    }

    /// `m = n/2`, defined for even orders.
    pub fn m(&self) -> Option<usize> {
        self.half_side
    }

    /// The common line sum `n(n²+1)/2`.
    pub fn magic_sum(&self) -> i64 {
        self.magic_sum
    }

    /// `n²`.
    pub fn cells(&self) -> i64 {
        // Cannot fail: checked when the order was built.
        (self.n as i64) * (self.n as i64)
    }

    /// Returns `(p, m)` or an unsupported-order error for odd orders.
    pub(crate) fn even_constants(&self) -> Result<(i64, usize)> {
        match (self.half_cells, self.half_side) {
            (Some(p), Some(m)) => Ok((p, m)),
            _ => Err(Error::unsupported(self.n, "only even orders are supported")),
        }
    }

    pub(crate) fn require(&self, kind: OrderKind, min: usize) -> Result<(i64, usize)> {
        if self.kind != kind || self.n < min {
            let what = match kind {
                OrderKind::DoublyEven => "a multiple of 4",
                OrderKind::SinglyEven => "congruent to 2 mod 4",
                OrderKind::Odd => "odd",
            };
            return Err(Error::unsupported(
                self.n,
                format!("this construction needs an order {what} and at least {min}"),
            ));
        }
        self.even_constants()
    }
}

fn cell_count(n: usize) -> Result<i64> {
    i64::try_from(n)
        .ok()
        .and_then(|n| n.checked_mul(n))
        .ok_or_else(|| Error::Overflow(format!("n² for n = {n}")))
}

/// Returns `n(n²+1)/2`, the line sum of a primitive magic square of order `n`.
pub fn magic_constant(n: usize) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    cell_count(n)?
        .checked_add(1)
        .and_then(|v| v.checked_mul(n as i64))
        .map(|v| v / 2)
        .ok_or_else(|| Error::Overflow(format!("magic constant for n = {n}")))
}

/// Returns the complement `n² + 1 − a` of `a`.
pub fn complement(a: i64, n: usize) -> Result<i64> {
    let cells = Order::new(n)?.cells();
    if !(1..=cells).contains(&a) {
        return Err(Error::Domain(format!(
            "{a} is outside 1..={cells} for order {n}"
        )));
    }
    Ok(cells + 1 - a)
}

/// Builds the [`Order`] for `n`.
pub fn classify_order(n: usize) -> Result<Order> {
    Order::new(n)
}

/// All `n²/2` complementary pairs `(a, n²+1−a)` of an even order, smaller member first.
pub fn complementary_pairs(ord: &Order) -> Result<Vec<(i64, i64)>> {
    let (p, _) = ord.even_constants()?;
    Ok((1..=p).map(|a| (a, 2 * p + 1 - a)).collect())
}
