//! Five-year yuga luni-solar calendar on exact rationals, the mixed-radix
//! time-segment naming scheme, token-level tally procedures, and the
//! large-number series of the early Indian number lists.

pub mod arith;
pub mod cli;
pub mod codec;
pub mod error;
pub mod names;
pub mod series;
pub mod tally;
pub mod yuga;

pub use error::{Error, Result};
