//! Missing-label machinery for su(3) tensor products.
//!
//! The multiplicity space of `[m1'',m2'']` inside `[m1,m2] ⊗ [m1',m2']` carries a
//! pair of exact tridiagonal operators `X`, `Y`. This crate builds them, computes
//! their spectra, checks the order-144 symmetry group, the E6 Weyl-group picture
//! of the structure constants, the Heun–Hahn decomposition, the 4-face
//! representations and the Bethe-ansatz description of the spectrum of `X`.

pub mod bethe;
pub mod centralizer;
pub mod cli;
pub mod e6;
pub mod error;
pub mod faces;
pub mod hahn;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod symmetry;
pub mod tridiag;
pub mod weights;

pub use error::{Error, Result};
pub use rat::Q;
pub use weights::ParamSet;
