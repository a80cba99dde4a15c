//! Exact polynomial arithmetic: Laurent polynomials in q with half-integer
//! exponents, and the rational gl_n character ring with antisymmetrization
//! and the Demazure operator.

mod charpoly;
mod qpoly;

pub use charpoly::{CharPoly, CharRing, SeriesCap};
pub use qpoly::QPoly;
