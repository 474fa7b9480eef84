//! Characteristic polynomials of endomorphisms of Drinfeld modules over finite
//! fields, computed from the matrix of the endomorphism on a truncated
//! crystalline cohomology module.
//!
//! All polynomial-like types store coefficients little-endian: index `i` is the
//! coefficient of `t^i`, `x^i`, `y^i`, `τ^i` or `Z^i`.

pub mod charpoly;
pub mod counters;
pub mod drinfeld;
pub mod error;
pub mod field;
pub mod linalg;
pub mod random;
pub mod skew;
pub mod wk;

pub use charpoly::{Algorithm, CharPolyOptions, CharPolyResult, PrecisionPlan};
pub use counters::{OpCounters, OpCounts};
pub use drinfeld::DrinfeldModule;
pub use error::{Error, Result};
pub use field::{FieldTower, Fq, FqElem, FqPoly, LElem, SubfieldDecomposition};
pub use skew::SkewPoly;
pub use wk::{WkElem, WkRing, YPoly};
