//! Dense exact polynomials in `x` and truncated power series in `t` whose
//! coefficients are such polynomials.

mod poly;
mod series;

pub use poly::{Coeff, GaussPoly, Poly};
pub use series::{series_elementary, PolySeries, SeriesKind};
