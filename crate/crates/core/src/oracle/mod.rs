//! Brute-force machinery independent of the constructions: the dihedral
//! symmetries of a square and exhaustive enumeration of small orders.

mod dihedral;
mod search;

pub use dihedral::{canonical_form, dihedral_images};
pub use search::{
    enumerate, EnumerateOptions, Enumeration, SearchStats, EXHAUSTIVE_ORDERS, MAX_OVERRIDE_ORDER,
};
