//! Even-order magic squares by consecutive numbering.
//!
//! Orders divisible by 4 are handled by [`doubly_even`], orders congruent to
//! 2 mod 4 by [`singly_even`]. Both modules offer a step-by-step
//! construction and a number-by-number walk that produce the same square.
//! [`verify`] checks and classifies arbitrary squares, [`oracle`] counts the
//! magic squares of orders 3 and 4 by exhaustive search, and [`io`] reads
//! and writes the grid, JSON and CSV encodings.
//!
//! Every construction is generic over the integer [`Cell`] type. The
//! aliases below fix it to `i64`.

mod cell;
pub mod doubly_even;
mod error;
pub mod io;
pub mod oracle;
pub mod order;
pub mod singly_even;
mod square;
pub mod verify;
mod walk;

pub use cell::Cell;
pub use doubly_even::{construct_doubly_even, walk_doubly_even};
pub use error::{Error, Result};
pub use io::{emit_square, parse_square, Format, GridDocument};
pub use order::{classify_order, complement, magic_constant, Order, OrderKind, MAX_ORDER};
pub use singly_even::{construct_singly_even, walk_singly_even};
pub use square::Square;
pub use verify::{classify, is_associated, is_parallel, verify_magic, Classification, MagicReport};

/// Square with `i64` cells.
pub type Square64 = Square<i64>;
/// Square with `i32` cells, enough for orders up to 46340.
pub type Square32 = Square<i32>;

/// Construction method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Place column pairs, then reverse rows.
    #[default]
    Step,
    /// Write the numbers down one at a time.
    Walk,
}

/// Builds the magic square of an even order `n ≥ 4` with the given method.
pub fn generate<T: Cell>(n: usize, method: Method) -> Result<Square<T>> {
    let ord = Order::new(n)?;
    match (ord.kind(), method) {
        (OrderKind::DoublyEven, Method::Step) => construct_doubly_even(&ord),
        (OrderKind::DoublyEven, Method::Walk) => walk_doubly_even(&ord),
        (OrderKind::SinglyEven, Method::Step) => construct_singly_even(&ord),
        (OrderKind::SinglyEven, Method::Walk) => walk_singly_even(&ord),
        (OrderKind::Odd, _) => Err(Error::UnsupportedOrder {
            n,
            reason: "only even orders of at least 4 are supported".into(),
        }),
    }
}

/// [`generate`] with `i64` cells.
pub fn generate64(n: usize, method: Method) -> Result<Square64> {
    generate(n, method)
}
