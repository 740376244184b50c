//! Proof objects and checkers for LK, LJ, LK++, LJ++ and QFS.

mod check;
mod expand;
mod proof;
mod qfs;

pub use check::{
    check, check_with, quantifier_instance, trace_node, CheckOptions, CheckReport, Condition, Origin,
    PremiseTrace, SideVariableGraph, System, Verdict, Violation,
};
pub use expand::expand_axiom;
pub use proof::{format_path, Proof, Rule, Skeleton};
pub use qfs::{check_qfs, hypothesis_kinds};
