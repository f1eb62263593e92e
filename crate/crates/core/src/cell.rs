use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{NumCast, PrimInt, Signed};

use crate::error::{Error, Result};

/// Integer type usable as a square entry.
///
/// Any signed primitive integer qualifies. Values produced by the
/// constructions are range-checked on conversion, so a narrow type such as
/// `i16` works for small orders and reports [`Error::Overflow`] otherwise.
pub trait Cell:
    PrimInt + Signed + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Converts an `i64` into this type, failing if it does not fit.
    fn from_i64(value: i64) -> Result<Self> {
        <Self as NumCast>::from(value)
            .ok_or_else(|| Error::Overflow(format!("{value} does not fit the cell type")))
    }

    /// Widens to `i128`, which every signed primitive integer fits.
    fn wide(self) -> i128 {
        self.to_i128()
            .expect("signed primitive integers fit in i128")
    }
}

impl<T> Cell for T where
    T: PrimInt + Signed + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}
