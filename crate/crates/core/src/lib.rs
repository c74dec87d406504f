//! Exact computations in walled Brauer algebras `B_{r,s}(δ)`: diagrams and
//! their products, cycle types and class sums, Jucys–Murphy elements,
//! supersymmetric central elements, and the centre by two independent methods.

pub mod bounds;
pub mod central;
pub mod cli;
pub mod cycletype;
pub mod diagrams;
pub mod error;
pub mod scalars;
pub mod solver;
mod text;

pub use bounds::Bounds;
pub use error::Error;
