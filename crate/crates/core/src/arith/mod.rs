//! Exact arithmetic: dyadic rationals and matrices over GF(2).

mod dyadic;
mod gf2;

pub use dyadic::Dyadic;
pub use gf2::{corank_rows, rank_rows, Gf2Matrix};
