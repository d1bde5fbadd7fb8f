//! An exact-arithmetic workbench for weighted infinitesimal bialgebras.
//!
//! Structures are finite-dimensional and given by structure constants over
//! exact rationals. The crate represents algebras, coalgebras, and weighted
//! infinitesimal bialgebras; bimodules, bicomodules, and Hopf bimodules over
//! them; braided objects and their biproducts; Yang-Baxter elements and the
//! coproducts they derive; matched pairs, cocycle cross systems, and the
//! cocycle bicrossproduct; and unified products for the extension-
//! classification problem. Every defining axiom is a checkable property
//! returning an exact, zero-tolerance report with basis-indexed witnesses.

pub mod basis;
pub mod bialgebra;
pub mod error;
pub mod extending;
pub mod format;
pub mod hopf;
pub mod matrix;
pub mod mixed;
pub mod products;
pub mod qt;
pub mod report;
pub mod scalar;
pub mod space;
pub mod tensor;

pub use error::CoreError;
pub use report::{CheckReport, Violation};
pub use scalar::Rat;
pub use space::{Space, Vector};
pub use tensor::{Orientation, StructTensor3, Tensor};
