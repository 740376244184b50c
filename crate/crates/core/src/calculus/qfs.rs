use super::check::{check, CheckReport, Condition, System, Verdict, Violation};
use super::proof::Proof;
use crate::shift::{match_shift_instance, ShiftKind};
use crate::syntax::Formula;

/// The shift kind of each hypothesis (universal closures allowed), if any.
pub fn hypothesis_kinds(hyps: &[Formula]) -> Vec<Option<ShiftKind>> {
    hyps.iter().map(match_shift_instance).collect()
}

/// QFS as LJ with shift hypotheses: `p` must be an LJ proof of
/// `Δ, Π ⇒ Γ` where the declared `Δ` are CD/ED/SW instances or their
/// universal closures.
pub fn check_qfs(p: &Proof, hypotheses: &[Formula]) -> CheckReport {
    let mut r = check(p, System::LJ);
    r.system = "qfs".into();
    let mut ante = p.conclusion.antecedent.clone();
    for h in hypotheses {
        let message = if match_shift_instance(h).is_none() {
            Some(format!("hypothesis `{h}` is not an instance of CD, ED or SW"))
        } else if let Some(i) = ante.iter().position(|g| g == h) {
            ante.remove(i);
            None
        } else {
            Some(format!("hypothesis `{h}` is not in the end-sequent's antecedent"))
        };
        if let Some(message) = message {
            r.violations.push(Violation {
                path: Vec::new(),
                node: "root".into(),
                condition: Condition::ShiftHypothesis,
                message,
            });
        }
    }
    r.verdict = if r.violations.is_empty() { Verdict::Accepted } else { Verdict::Rejected };
    r
}
