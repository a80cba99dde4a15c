//! Exact computation of one-dimensional sums for affine crystals,
//! Kostka-Foulkes polynomials, K-polynomials, and Lusztig q-analogues of
//! weight multiplicity for the classical root systems, with exhaustive
//! desk-scale verification of the identities tying them together.

pub mod algebra;
pub mod crystal;
pub mod energy;
pub mod error;
pub mod kostka;
pub mod lusztig;
pub mod onedim;
pub mod verify;
pub mod weights;

pub use algebra::{CharPoly, CharRing, QPoly, SeriesCap};
pub use error::{Error, Result};
pub use weights::{ClassicalType, DominantWeight, Family, LValues, Partition, RootSystem};
