//! Exact construction and classification of D̃₅ simple elliptic
//! singularities from good slices of sl(2) ⊕ sl(2).

pub mod algebra;
pub mod deformation;
pub mod error;
pub mod json;
pub mod matrix;
pub mod numeric;
pub mod pencil;
pub mod slice;

pub use error::{Error, Result};
