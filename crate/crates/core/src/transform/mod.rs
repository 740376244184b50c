//! Proof and formula transformations: LJ++ correction, deSkolemization and
//! prenexification.

mod correct;
mod deskolem;
mod prenex;

pub use correct::{correct_ljpp, CorrectionError, CorrectionResult, HypothesisKind, Replacement};
pub use deskolem::{deskolemize, deskolemize_traced, DeskolemizationTrace, DeskolemizeError, Insertion};
pub use prenex::{is_prenex, ndq, prenexify, prenexify_traced, Prenexed, ShiftStep};
