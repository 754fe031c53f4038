//! Exact arithmetic: arbitrary-precision naturals and reduced fractions.
//!
//! Nothing in the calendar or series code goes through floating point;
//! decimal text only appears via [`Rational::render_decimal`].

mod natural;
mod rational;

pub use natural::{digit_count, power, square_iterate, Natural};
pub use rational::{reduce, rule_of_three, MixedNumber, Rational};
