//! Finite Kripke frames and models for intermediate predicate logics.
//!
//! Models are function-free: terms in forced formulas are either bound
//! variables or names of domain elements.

mod forcing;
mod frames;
mod incompleteness;
mod validity;

pub use forcing::{forces, forces_naive};
pub use frames::{
    classify_frame, enumerate_acceptance_frames, enumerate_posets, frame_properties, Classification,
    FrameReport,
};
pub use incompleteness::{
    atomic_shift_failures, check_incompleteness_witness, incompleteness_model, ClaimReport, IncompletenessReport,
    INCOMPLETENESS_MODEL, LIN_OEP_INSTANCE,
};
pub use validity::{axiom_valid_on_frame, axiom_valid_on_frame_with_budget, schema_instance, FrameValidity, DEFAULT_MODEL_BUDGET};

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KripkeError {
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("duplicate world `{0}`")]
    DuplicateWorld(String),
    #[error("order is not antisymmetric: `{0}` and `{1}` are mutually below each other")]
    NotAntisymmetric(String, String),
    #[error("world `{0}` has an empty domain")]
    EmptyDomain(String),
    #[error("domains are not monotone: `{element}` is in D_{below} but not in D_{above}")]
    DomainNotMonotone { below: String, above: String, element: String },
    #[error("atom {atom} at `{world}` uses `{element}`, which is not in that world's domain")]
    TupleOutsideDomain { world: String, atom: String, element: String },
    #[error("valuation is not persistent: {atom} holds at `{below}` but not at `{above}`")]
    NotPersistent { below: String, above: String, atom: String },
    #[error("constant `{constant}` is not in the domain of `{world}`")]
    ConstantOutsideDomain { world: String, constant: String },
    #[error("function symbol `{0}` cannot be interpreted: models are function-free")]
    FunctionSymbol(String),
    #[error("enumeration needs {needed} models, above the budget of {budget}")]
    Budget { needed: u128, budget: u128 },
}

/// A finite frame: worlds, a partial order (stored reflexive-transitively
/// closed) and monotone non-empty domains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub worlds: Vec<String>,
    /// `leq[u][v]` iff `u ≼ v`.
    pub leq: Vec<Vec<bool>>,
    pub elements: Vec<String>,
    /// Element indices per world.
    pub domains: Vec<BTreeSet<usize>>,
}

impl Frame {
    /// Builds a frame from order pairs `(u, v)` meaning `u ≼ v`; the
    /// reflexive-transitive closure is taken.
    pub fn new(
        worlds: Vec<String>,
        order: &[(String, String)],
        domains: Vec<Vec<String>>,
    ) -> Result<Frame, KripkeError> {
        let n = worlds.len();
        let mut seen = BTreeSet::new();
        for w in &worlds {
            if !seen.insert(w.clone()) {
                return Err(KripkeError::DuplicateWorld(w.clone()));
            }
        }
        let idx = |name: &str| {
            worlds
                .iter()
                .position(|w| w == name)
                .ok_or_else(|| KripkeError::UnknownWorld(name.to_string()))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (u, v) in order {
            leq[idx(u)?][idx(v)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i][j] && leq[j][i] {
                    return Err(KripkeError::NotAntisymmetric(worlds[i].clone(), worlds[j].clone()));
                }
            }
        }
        if domains.len() < n {
            return Err(KripkeError::EmptyDomain(worlds[domains.len()].clone()));
        }
        let mut elements: Vec<String> = Vec::new();
        let mut doms = Vec::with_capacity(n);
        for (w, d) in worlds.iter().zip(&domains) {
            if d.is_empty() {
                return Err(KripkeError::EmptyDomain(w.clone()));
            }
            let mut set = BTreeSet::new();
            for e in d {
                let i = match elements.iter().position(|x| x == e) {
                    Some(i) => i,
                    None => {
                        elements.push(e.clone());
                        elements.len() - 1
                    }
                };
                set.insert(i);
            }
            doms.push(set);
        }
        let frame = Frame { worlds, leq, elements, domains: doms };
        for u in 0..n {
            for v in frame.above(u) {
                if let Some(e) = frame.domains[u].difference(&frame.domains[v]).next() {
                    return Err(KripkeError::DomainNotMonotone {
                        below: frame.worlds[u].clone(),
                        above: frame.worlds[v].clone(),
                        element: frame.elements[*e].clone(),
                    });
                }
            }
        }
        Ok(frame)
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn world(&self, name: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w == name)
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// Worlds `v` with `w ≼ v`, including `w`.
    pub fn above(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&v| self.leq[w][v])
    }

    /// Order pairs of the covering relation (for printing).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && self.leq[u][v] && !(0..n).any(|k| k != u && k != v && self.leq[u][k] && self.leq[k][v]) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Disjoint union; world and element names of `other` get a suffix
    /// when they collide.
    pub fn disjoint_union(&self, other: &Frame) -> Frame {
        let rename = |name: &str, taken: &[String]| {
            let mut n = name.to_string();
            while taken.contains(&n) {
                n.push('\'');
            }
            n
        };
        let mut worlds = self.worlds.clone();
        let mut order = Vec::new();
        let mut domains: Vec<Vec<String>> = self
            .domains
            .iter()
            .map(|d| d.iter().map(|&e| self.elements[e].clone()).collect())
            .collect();
        for (u, v) in self.covers() {
            order.push((self.worlds[u].clone(), self.worlds[v].clone()));
        }
        let mut wmap = Vec::new();
        for w in &other.worlds {
            let n = rename(w, &worlds);
            worlds.push(n.clone());
            wmap.push(n);
        }
        let mut emap = Vec::new();
        for e in &other.elements {
            let n = rename(e, &self.elements);
            emap.push(n);
        }
        for (u, v) in other.covers() {
            order.push((wmap[u].clone(), wmap[v].clone()));
        }
        for d in &other.domains {
            domains.push(d.iter().map(|&e| emap[e].clone()).collect());
        }
        Frame::new(worlds, &order, domains).expect("disjoint union of frames is a frame")
    }
}

/// A model: a frame plus a persistent valuation. `valuation[(P, n)][w]` is
/// the set of element tuples satisfying `P` at `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub frame: Frame,
    pub valuation: BTreeMap<(String, usize), Vec<BTreeSet<Vec<usize>>>>,
}

impl Model {
    /// Builds a model from per-world lists of ground atoms `(P, args)`.
    pub fn new(
        frame: Frame,
        atoms: Vec<Vec<(String, Vec<String>)>>,
    ) -> Result<Model, KripkeError> {
        let n = frame.len();
        let mut valuation: BTreeMap<(String, usize), Vec<BTreeSet<Vec<usize>>>> = BTreeMap::new();
        for (w, list) in atoms.into_iter().enumerate() {
            for (p, args) in list {
                let mut tuple = Vec::new();
                for a in &args {
                    match frame.element(a).filter(|e| frame.domains[w].contains(e)) {
                        Some(e) => tuple.push(e),
                        None => {
                            return Err(KripkeError::TupleOutsideDomain {
                                world: frame.worlds[w].clone(),
                                atom: format_atom(&p, &args),
                                element: a.clone(),
                            })
                        }
                    }
                }
                valuation
                    .entry((p, args.len()))
                    .or_insert_with(|| vec![BTreeSet::new(); n])[w]
                    .insert(tuple);
            }
        }
        let model = Model { frame, valuation };
        model.check_persistence()?;
        Ok(model)
    }

    fn check_persistence(&self) -> Result<(), KripkeError> {
        let fr = &self.frame;
        for ((p, _), per_world) in &self.valuation {
            for u in 0..fr.len() {
                for v in fr.above(u) {
                    if let Some(t) = per_world[u].difference(&per_world[v]).next() {
                        let args: Vec<String> = t.iter().map(|&e| fr.elements[e].clone()).collect();
                        return Err(KripkeError::NotPersistent {
                            below: fr.worlds[u].clone(),
                            above: fr.worlds[v].clone(),
                            atom: format_atom(p, &args),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn holds(&self, pred: &str, w: usize, tuple: &[usize]) -> bool {
        self.valuation
            .get(&(pred.to_string(), tuple.len()))
            .is_some_and(|per| per[w].contains(tuple))
    }

    /// Ground atoms true at `w`, as `(predicate, element names)`.
    pub fn atoms_at(&self, w: usize) -> Vec<(String, Vec<String>)> {
        let mut out = Vec::new();
        for ((p, _), per) in &self.valuation {
            for t in &per[w] {
                out.push((p.clone(), t.iter().map(|&e| self.frame.elements[e].clone()).collect()));
            }
        }
        out
    }
}

/// Serialized as the frame plus, per world, the ground atoms true there.
impl Serialize for Model {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let atoms: BTreeMap<&str, Vec<String>> = (0..self.frame.len())
            .map(|w| {
                let list = self.atoms_at(w).iter().map(|(p, args)| format_atom(p, args)).collect();
                (self.frame.worlds[w].as_str(), list)
            })
            .collect();
        let mut st = s.serialize_struct("Model", 2)?;
        st.serialize_field("frame", &self.frame)?;
        st.serialize_field("atoms", &atoms)?;
        st.end()
    }
}

pub(crate) fn format_atom(p: &str, args: &[String]) -> String {
    if args.is_empty() {
        p.to_string()
    } else {
        format!("{p}({})", args.join(","))
    }
}
