//! Exact generator calculus for elementary and elementary symplectic groups
//! over commutative rings in which 2 is invertible.

pub mod error;
pub mod identities;
pub mod matrix;
pub mod normal_forms;
pub mod orbits;
pub mod ring;
pub mod words;

pub use error::{Error, Result};
pub use matrix::{standard_form, Matrix};
pub use ring::{Elem, Ideal, Ring};
