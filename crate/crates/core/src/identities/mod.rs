//! Symbolic and sampled verification of the commutator calculus.

pub mod dilation;
pub mod exponent;
pub mod form_change;
pub mod relations;
pub mod roots;
pub mod splice;
pub mod square_ideal;
