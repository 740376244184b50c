//! Skolemization for intermediate first-order logics: syntax, Skolem forms,
//! the LJ/LK/LJ++/LK++ calculi, proof transformations, finite Kripke models
//! and the lattice logic CD₅.

pub mod calculus;
pub mod cd5;
pub mod corpus;
pub mod gen;
pub mod kripke;
pub mod parser;
pub mod quant;
pub mod shift;
pub mod skolem;
pub mod syntax;
pub mod transform;

pub use syntax::{Formula, Sequent, Side, Term};
