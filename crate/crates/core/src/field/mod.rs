//! Exact arithmetic in the tower F_p ⊆ F_q ⊆ L.

pub mod fq;
pub mod linsolve;
pub mod poly;
pub mod subfield;
pub mod tower;

pub use fq::{Fq, FqElem};
pub use poly::FqPoly;
pub use subfield::{Bivariate, SubfieldDecomposition};
pub use tower::{FieldTower, LElem};
