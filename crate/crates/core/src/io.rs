//! Interchange formats. Points are printed 1-based.
//!
//! Text: a header line `d n`, then one circuit per line as space-separated
//! labels; `#` starts a comment. A listing without circuits of size `n+1`
//! is completed with every independent `(n+1)`-set, and the writer lists
//! only circuits of size at most `n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, LabeledHypergraph};
use crate::matroid::Matroid;
use crate::set::Set;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub d: usize,
    pub n: usize,
    pub circuits: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub set: Vec<usize>,
    #[serde(rename = "type")]
    pub ty: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub d: usize,
    pub n: usize,
    pub edges: Vec<EdgeJson>,
}

impl From<&Matroid> for MatroidJson {
    fn from(m: &Matroid) -> MatroidJson {
        MatroidJson {
            d: m.d(),
            n: m.rank(),
            circuits: m.circuits().iter().map(|c| c.labels()).collect(),
        }
    }
}

impl TryFrom<&MatroidJson> for Matroid {
    type Error = Error;

    fn try_from(j: &MatroidJson) -> Result<Matroid> {
        let circuits = j
            .circuits
            .iter()
            .map(|c| labels_to_set(c, j.d))
            .collect::<Result<Vec<Set>>>()?;
        build(j.d, j.n, circuits)
    }
}

impl From<&LabeledHypergraph> for HypergraphJson {
    fn from(h: &LabeledHypergraph) -> HypergraphJson {
        HypergraphJson {
            d: h.d(),
            n: h.n(),
            edges: h
                .edges()
                .iter()
                .map(|e| EdgeJson {
                    set: e.set.labels(),
                    ty: e.ty,
                })
                .collect(),
        }
    }
}

impl TryFrom<&HypergraphJson> for LabeledHypergraph {
    type Error = Error;

    fn try_from(j: &HypergraphJson) -> Result<LabeledHypergraph> {
        check_size(j.d)?;
        let mut raw = Vec::with_capacity(j.edges.len());
        for e in &j.edges {
            if e.ty >= j.n.max(1) {
                return Err(Error::Parse(format!("edge type {} is not below n = {}", e.ty, j.n)));
            }
            raw.push(Edge::new(labels_to_set(&e.set, j.d)?, e.ty));
        }
        Ok(LabeledHypergraph::induce(j.d, j.n, raw))
    }
}

fn check_size(d: usize) -> Result<()> {
    if d > crate::set::MAX_POINTS {
        return Err(Error::GroundSetTooLarge(d));
    }
    Ok(())
}

fn labels_to_set(labels: &[usize], d: usize) -> Result<Set> {
    check_size(d)?;
    let mut s = Set::EMPTY;
    for &l in labels {
        if l == 0 || l > d {
            return Err(Error::PointOutOfRange { point: l, d });
        }
        s = s.with(l - 1);
    }
    Ok(s)
}

fn build(d: usize, n: usize, circuits: Vec<Set>) -> Result<Matroid> {
    if n > d {
        return Err(Error::Parse(format!("rank {n} exceeds ground set size {d}")));
    }
    if circuits.iter().any(|c| c.len() > n + 1 || c.is_empty()) {
        return Err(Error::Parse(format!("circuit sizes must lie in 1..={}", n + 1)));
    }
    if circuits.iter().any(|c| c.len() == n + 1) {
        Matroid::from_circuits(d, n, circuits, true)
    } else {
        Matroid::from_small_circuits(d, n, circuits, true)
    }
}

pub fn to_text(m: &Matroid) -> String {
    let mut out = format!("{} {}\n", m.d(), m.rank());
    for c in m.small_circuits() {
        let labels: Vec<String> = c.labels().iter().map(|l| l.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(text: &str) -> Result<Matroid> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing `d n` header".into()))?;
    let nums = parse_numbers(header)?;
    let [d, n] = nums[..] else {
        return Err(Error::Parse(format!("header `{header}` should be `d n`")));
    };
    check_size(d)?;
    let circuits = lines
        .map(|l| labels_to_set(&parse_numbers(l)?, d))
        .collect::<Result<Vec<Set>>>()?;
    build(d, n, circuits)
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("`{t}` is not a non-negative integer"))))
        .collect()
}

pub fn to_json(m: &Matroid) -> String {
    serde_json::to_string(&MatroidJson::from(m)).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Matroid> {
    let j: MatroidJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Matroid::try_from(&j)
}

pub fn hypergraph_to_json(h: &LabeledHypergraph) -> String {
    serde_json::to_string(&HypergraphJson::from(h)).expect("plain data serializes")
}

pub fn hypergraph_from_json(text: &str) -> Result<LabeledHypergraph> {
    let j: HypergraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    LabeledHypergraph::try_from(&j)
}

/// Reads either format, deciding by the first non-blank character.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}
