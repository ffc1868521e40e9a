//! Exact computations for the braid group action on complexes over the type A
//! zigzag algebra: minimal models, stability data and thin-triangle
//! Grothendieck groups, and the comparison with the Lawrence-Krammer-Bigelow
//! representation.

pub mod braid;
pub mod complex;
pub mod error;
pub mod expr;
pub mod extriang;
pub mod homotopy;
pub mod linalg;
pub mod reps;
pub mod ring;
pub mod stability;
pub mod suites;
pub mod zigzag;

pub use error::{Error, Result};
