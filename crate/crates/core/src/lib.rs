//! Fractional Brauer configuration algebras: presentations by quiver and
//! relations, the configuration attached to a monomial algebra, trivial
//! extensions, and admissible cuts.

pub mod cuts;
pub mod ea;
pub mod engine;
pub mod error;
pub mod fbc;
pub mod fuzz;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod monomial;
pub mod presentation;
pub mod quiver;
pub mod suite;
pub mod trivext;

#[cfg(test)]
mod fixtures;
#[cfg(test)]
mod properties;

pub use error::{Error, Result};
pub use fbc::Fbc;
pub use monomial::MonomialAlgebra;
pub use presentation::QuiverPresentation;
pub use quiver::{ArrowId, Path, Quiver, VertexId};
