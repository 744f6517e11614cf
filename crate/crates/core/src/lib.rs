//! Pseudoknot invariants computed by substituting rational tangles for precrossings.

pub mod alexander;
pub mod bracket;
pub mod catalog;
pub mod cli;
pub mod diagram;
pub mod laurent;
pub mod moves;
pub mod pseudo;
pub mod tangle;
mod wiring;

pub use diagram::{DiagramError, Edge, Pseudodiagram, Site, SiteKind};
pub use laurent::{delta, AlgebraError, Coeff, LaurentPoly, RationalFunction, Var};
