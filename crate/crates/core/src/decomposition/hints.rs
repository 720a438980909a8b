//! Realizability facts and cover hints consulted by the decomposition.
//!
//! A hint file is JSON:
//!
//! ```json
//! {
//!   "realizable": [{ "matroid": REF, "realizable": false }],
//!   "covers": [{ "parent": REF, "matroid": REF, "by": ["parent", "truncation", "self"] }]
//! }
//! ```
//!
//! `REF` is a catalog name, a 64-digit canonical hash, an inline matroid
//! `{"d","n","circuits"}`, or a derived matroid
//! `{"base": REF, "identify": [[..]], "edges": [{"set","type"}], "loop": k, "truncate": bool}`.
//! A derived matroid adds the identifications (Type-1 edges) and extra
//! edges to the hypergraph of the base and takes the unique loopless
//! maximal matroid below it; `loop` and `truncate` apply afterwards.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::degenerations::min_above_hyp;
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, LabeledHypergraph};
use crate::io::{EdgeJson, MatroidJson};
use crate::isomorphism::canonical_form;
use crate::matroid::Matroid;
use crate::set::Set;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Realizability {
    Yes,
    No,
    Unknown,
}

/// What the circuit variety of a degeneration is known to lie inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverTarget {
    /// The matroid variety of the parent.
    Parent,
    /// The matroid variety of the parent's truncation.
    Truncation,
    /// Its own matroid variety (circuit and matroid variety agree).
    #[serde(rename = "self")]
    Itself,
}

#[derive(Deserialize)]
#[serde(untagged)]
pub enum MatroidRef {
    Name(String),
    Inline(MatroidJson),
    Derived(Box<Derived>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Derived {
    pub base: MatroidRef,
    #[serde(default)]
    pub identify: Vec<Vec<usize>>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
    #[serde(default, rename = "loop")]
    pub loop_point: Option<usize>,
    #[serde(default)]
    pub truncate: bool,
}

#[derive(Deserialize)]
struct RealizableEntry {
    matroid: MatroidRef,
    realizable: bool,
    #[serde(default)]
    #[allow(dead_code)]
    note: Option<String>,
}

#[derive(Deserialize)]
struct CoverEntry {
    parent: MatroidRef,
    matroid: MatroidRef,
    by: Vec<CoverTarget>,
    #[serde(default)]
    #[allow(dead_code)]
    note: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HintFile {
    #[serde(default)]
    realizable: Vec<RealizableEntry>,
    #[serde(default)]
    covers: Vec<CoverEntry>,
}

const SHIPPED: &str = include_str!("../../hints/shipped.json");

/// Realizability facts keyed by the canonical hash of the simplification,
/// cover hints keyed by the (parent, degeneration) canonical hashes.
#[derive(Clone, Debug, Default)]
pub struct Hints {
    realizable: HashMap<String, bool>,
    covers: HashMap<(String, String), Vec<CoverTarget>>,
}

impl Hints {
    /// No facts beyond the structural ones (uniform, rank ≤ 2).
    pub fn none() -> Hints {
        Hints::default()
    }

    /// Standard facts: the catalog matroids of known realizability over ℂ.
    /// The Fano plane is left unknown (it is realizable in characteristic 2).
    pub fn facts() -> Hints {
        let mut h = Hints::none();
        for name in ["qs", "threelines", "grid", "k33dual", "k33", "sixpoint"] {
            h.set_realizable(&catalog::catalog(name).expect("catalog entry"), true);
        }
        for name in ["vamos", "steiner348", "fanodual"] {
            h.set_realizable(&catalog::catalog(name).expect("catalog entry"), false);
        }
        h
    }

    /// The standard facts plus the shipped hint file: Fano not realizable
    /// over ℂ, and the covers for the dual of `M(K_{3,3})`.
    pub fn shipped() -> Hints {
        let mut h = Hints::facts();
        h.merge_json(SHIPPED).expect("shipped hint file is valid");
        h
    }

    pub fn from_json(text: &str) -> Result<Hints> {
        let mut h = Hints::facts();
        h.merge_json(text)?;
        Ok(h)
    }

    pub fn merge_json(&mut self, text: &str) -> Result<()> {
        let file: HintFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("hints: {e}")))?;
        for r in file.realizable {
            let key = match &r.matroid {
                MatroidRef::Name(s) if is_hash(s) => s.to_ascii_lowercase(),
                other => realizability_key(&resolve(other)?),
            };
            self.realizable.insert(key, r.realizable);
        }
        for c in file.covers {
            let parent = hash_key(&c.parent)?;
            let child = hash_key(&c.matroid)?;
            if c.by.is_empty() {
                return Err(Error::Parse("hints: a cover needs at least one target".into()));
            }
            self.covers.insert((parent, child), c.by);
        }
        Ok(())
    }

    pub fn set_realizable(&mut self, m: &Matroid, value: bool) {
        self.realizable.insert(realizability_key(m), value);
    }

    /// Loops and parallel points do not affect realizability, so the
    /// lookup goes through the simplification.
    pub fn realizability(&self, m: &Matroid) -> Realizability {
        let (s, _) = m.simplify();
        if s.rank() <= 2 || s.small_circuits().is_empty() {
            return Realizability::Yes;
        }
        match self.realizable.get(&canonical_form(&s).hash()) {
            Some(true) => Realizability::Yes,
            Some(false) => Realizability::No,
            None => Realizability::Unknown,
        }
    }

    pub fn cover(&self, parent_hash: &str, child: &Matroid) -> Option<&[CoverTarget]> {
        if self.covers.is_empty() {
            return None;
        }
        let key = (parent_hash.to_string(), canonical_form(child).hash());
        self.covers.get(&key).map(|v| v.as_slice())
    }

    pub fn is_empty(&self) -> bool {
        self.realizable.is_empty() && self.covers.is_empty()
    }
}

fn is_hash(s: &str) -> bool {
    s.len() == 64 && s.bytes().all(|b| b.is_ascii_hexdigit())
}

fn realizability_key(m: &Matroid) -> String {
    canonical_form(&m.simplify().0).hash()
}

fn hash_key(r: &MatroidRef) -> Result<String> {
    match r {
        MatroidRef::Name(s) if is_hash(s) => Ok(s.to_ascii_lowercase()),
        other => Ok(canonical_form(&resolve(other)?).hash()),
    }
}

pub fn resolve(r: &MatroidRef) -> Result<Matroid> {
    match r {
        MatroidRef::Name(s) if is_hash(s) => Err(Error::Parse(format!("hints: hash {s} cannot be used as a base matroid"))),
        MatroidRef::Name(s) => catalog::catalog(s),
        MatroidRef::Inline(j) => Matroid::try_from(j),
        MatroidRef::Derived(dv) => {
            let base = resolve(&dv.base)?;
            let mut m = if dv.identify.is_empty() && dv.edges.is_empty() {
                base
            } else {
                degenerate(&base, dv)?
            };
            if let Some(k) = dv.loop_point {
                if k == 0 || k > m.d() {
                    return Err(Error::PointOutOfRange { point: k, d: m.d() });
                }
                m = m.designate_loop(k - 1);
            }
            if dv.truncate {
                m = m.truncation();
            }
            Ok(m)
        }
    }
}

fn to_set(labels: &[usize], d: usize) -> Result<Set> {
    labels.iter().try_fold(Set::EMPTY, |s, &l| {
        if l == 0 || l > d {
            Err(Error::PointOutOfRange { point: l, d })
        } else {
            Ok(s.with(l - 1))
        }
    })
}

fn degenerate(base: &Matroid, dv: &Derived) -> Result<Matroid> {
    let (d, n) = (base.d(), base.rank());
    let mut raw: Vec<Edge> = LabeledHypergraph::of_matroid(base, n).edges().to_vec();
    for group in &dv.identify {
        let g = to_set(group, d)?;
        if g.len() < 2 {
            return Err(Error::Parse("hints: an identified group needs two points".into()));
        }
        raw.push(Edge::new(g, 1));
    }
    for e in &dv.edges {
        if e.ty >= n.max(1) {
            return Err(Error::Parse(format!("hints: edge type {} is not below n = {n}", e.ty)));
        }
        raw.push(Edge::new(to_set(&e.set, d)?, e.ty));
    }
    let lambda = LabeledHypergraph::induce(d, n, raw);
    let found: Vec<Matroid> = min_above_hyp(&lambda)
        .into_iter()
        .filter(|m| m.loops().is_empty())
        .collect();
    match found.as_slice() {
        [m] => Ok(m.clone()),
        _ => Err(Error::Parse(format!(
            "hints: derived matroid is not unique ({} loopless maximal matroids)",
            found.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_hints_load() {
        let h = Hints::shipped();
        assert_eq!(h.realizability(&catalog::fano()), Realizability::No);
        assert_eq!(Hints::facts().realizability(&catalog::fano()), Realizability::Unknown);
        assert_eq!(h.realizability(&catalog::k33_dual()), Realizability::Yes);
        assert_eq!(h.realizability(&Matroid::uniform(3, 7)), Realizability::Yes);
        assert_eq!(h.covers.len(), 5);
    }

    #[test]
    fn derived_refs() {
        let r: MatroidRef = serde_json::from_str(r#"{"base":"fano","loop":3}"#).unwrap();
        assert_eq!(resolve(&r).unwrap(), catalog::fano().designate_loop(2));
        let r: MatroidRef = serde_json::from_str(r#"{"base":"k33dual","identify":[[1,4],[2,5],[3,6]]}"#).unwrap();
        let m = resolve(&r).unwrap();
        assert!(crate::weak_order::compare(&m, &catalog::k33_dual()).unwrap());
        assert_eq!(m.circuits_of_size(2).count(), 3);
    }

    #[test]
    fn bad_hints() {
        assert!(Hints::from_json(r#"{"realizable":[{"matroid":"nope","realizable":true}]}"#).is_err());
        assert!(Hints::from_json(r#"{"other":[]}"#).is_err());
    }
}
