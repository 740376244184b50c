use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{forcing::forces, Frame, KripkeError, Model};
use crate::shift::{shift_axiom, ShiftKind};
use crate::syntax::{Formula, Term};

pub const DEFAULT_MODEL_BUDGET: u128 = 5_000_000;

/// Frames above this many worlds are refused outright (upsets are bitmasks).
const MAX_WORLDS: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub struct FrameValidity {
    pub kind: ShiftKind,
    pub valid: bool,
    pub countermodel: Option<Model>,
    pub failing_world: Option<String>,
    pub models_checked: u64,
}

/// The schema instance with `A(x) := P(x)` and `B := Q`.
pub fn schema_instance(kind: ShiftKind) -> Formula {
    shift_axiom(kind, &Formula::atom("P", vec![Term::var("x")]), &Formula::prop("Q"), "x")
        .expect("Q has no free variables")
}

fn upsets_within(fr: &Frame, region: u64) -> Vec<u64> {
    let n = fr.len();
    let up: Vec<u64> = (0..n)
        .map(|w| fr.above(w).fold(0u64, |m, v| m | (1 << v)))
        .collect();
    let mut out = Vec::new();
    // Enumerate subsets of `region` in increasing order.
    let mut s: u64 = 0;
    loop {
        if (0..n).all(|w| s >> w & 1 == 0 || up[w] & !s == 0) {
            out.push(s);
        }
        if s == region {
            break;
        }
        s = (s.wrapping_sub(region)) & region;
    }
    out
}

/// Decides whether the shift schema is valid on `fr` by enumerating every
/// persistent valuation of `P/1` and `Q/0` and checking the instance at
/// every world.
pub fn axiom_valid_on_frame(fr: &Frame, kind: ShiftKind) -> Result<FrameValidity, KripkeError> {
    axiom_valid_on_frame_with_budget(fr, kind, DEFAULT_MODEL_BUDGET)
}

pub fn axiom_valid_on_frame_with_budget(
    fr: &Frame,
    kind: ShiftKind,
    budget: u128,
) -> Result<FrameValidity, KripkeError> {
    let n = fr.len();
    if n > MAX_WORLDS {
        return Err(KripkeError::Budget { needed: 1u128 << n.min(127), budget });
    }
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let q_choices = upsets_within(fr, all);
    let p_choices: Vec<Vec<u64>> = (0..fr.elements.len())
        .map(|e| {
            let region = (0..n).filter(|&w| fr.domains[w].contains(&e)).fold(0u64, |m, w| m | (1 << w));
            upsets_within(fr, region)
        })
        .collect();
    let needed = p_choices
        .iter()
        .fold(q_choices.len() as u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if needed > budget {
        return Err(KripkeError::Budget { needed, budget });
    }
    let instance = schema_instance(kind);
    let mut idx = vec![0usize; p_choices.len()];
    let mut checked = 0u64;
    for &q in &q_choices {
        idx.iter_mut().for_each(|i| *i = 0);
        loop {
            let p: Vec<u64> = idx.iter().zip(&p_choices).map(|(&i, c)| c[i]).collect();
            let m = build_model(fr, &p, q);
            checked += 1;
            for w in 0..n {
                if !forces(&m, w, &instance)? {
                    return Ok(FrameValidity {
                        kind,
                        valid: false,
                        failing_world: Some(fr.worlds[w].clone()),
                        countermodel: Some(m),
                        models_checked: checked,
                    });
                }
            }
            let mut k = 0;
            while k < idx.len() && idx[k] + 1 == p_choices[k].len() {
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
            idx[k] += 1;
        }
    }
    Ok(FrameValidity { kind, valid: true, countermodel: None, failing_world: None, models_checked: checked })
}

fn build_model(fr: &Frame, p: &[u64], q: u64) -> Model {
    let n = fr.len();
    let mut p_val = vec![BTreeSet::new(); n];
    let mut q_val = vec![BTreeSet::new(); n];
    for w in 0..n {
        for (e, mask) in p.iter().enumerate() {
            if mask >> w & 1 == 1 {
                p_val[w].insert(vec![e]);
            }
        }
        if q >> w & 1 == 1 {
            q_val[w].insert(Vec::new());
        }
    }
    let mut valuation = BTreeMap::new();
    valuation.insert(("P".to_string(), 1), p_val);
    valuation.insert(("Q".to_string(), 0), q_val);
    Model { frame: fr.clone(), valuation }
}
