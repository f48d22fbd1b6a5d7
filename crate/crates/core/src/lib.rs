//! Exact computer algebra over the rational function field ℚ(x) ⊂ ℂ(x):
//! valuations, heights, S-units, multiplicative independence, and linear
//! recurrence sequences, together with a harness that scans the valuation
//! gap `μ(aGₙ − bHₘ) − μ(Gₙ)` over index grids and checks the unit-equation
//! inequalities behind it.

pub mod config;
pub mod effective;
pub mod error;
pub mod expr;
pub mod multindep;
pub mod par;
pub mod places;
pub mod polyalg;
pub mod recurrence;
mod util;
pub mod verify;

pub use error::{Error, Result};
pub use places::{ExtInt, Place, PlaceSet};
pub use polyalg::{Poly, Rational, RationalFunction};
pub use recurrence::LinearRecurrence;
