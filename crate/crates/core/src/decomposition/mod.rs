//! Recursive decomposition of a matroid's circuit variety into candidate
//! matroid varieties.
//!
//! The driver simplifies, tests the two base cases (paving, degree at most
//! two, nilpotent or with all proper submatroids nilpotent), and otherwise
//! recurses into each maximal degeneration. Components are reported with
//! provenance and with any other component lying above them, which marks a
//! possible redundancy in the union.

mod hints;

use std::collections::HashMap;

use serde::Serialize;

use crate::degenerations::{min_above_general_with, min_above_rank4_with, DegenerationReport, SearchOptions};
use crate::error::Result;
use crate::isomorphism::canonical_labeling;
use crate::matroid::Matroid;
use crate::structure::{is_inductively_connected, is_nilpotent, is_paving, max_degree, proper_submatroids_all_nilpotent};
use crate::weak_order::compare;

pub use hints::{resolve, CoverTarget, Derived, Hints, MatroidRef, Realizability};

#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    /// Recursion depth below the input; reaching it leaves an unresolved
    /// component and marks the run incomplete.
    pub max_depth: usize,
    /// Total search nodes over all degeneration searches.
    pub node_budget: Option<u64>,
    pub search: SearchOptions,
}

impl Default for DecomposeOptions {
    fn default() -> DecomposeOptions {
        DecomposeOptions {
            max_depth: 3,
            node_budget: None,
            search: SearchOptions::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Paving, degree at most two, nilpotent.
    Nilpotent,
    /// Paving, degree at most two, proper submatroids nilpotent: the matroid.
    SubmatroidsNilpotent,
    /// The uniform matroid added alongside the previous rule.
    UniformCompanion,
    /// The matroid itself, kept before recursing into its degenerations.
    Source,
    /// Recursed into a maximal degeneration.
    Degeneration,
    /// Added from a cover hint.
    Cover,
    /// Depth or budget ran out here.
    Unresolved,
}

/// One level of the derivation: the rule applied and the canonical hash of
/// the simplified matroid it was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub rule: Rule,
    pub matroid: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Realizable and inductively connected, so its matroid variety is
    /// irreducible.
    IrreducibleProven,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct DecompositionComponent {
    pub matroid: Matroid,
    pub status: Status,
    pub realizable: Realizability,
    /// Circuit variety known to equal the matroid variety.
    pub closed: bool,
    pub provenance: Vec<Step>,
    /// Indices of other components lying above this one in the weak order.
    pub possibly_redundant_below: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub source: Matroid,
    /// Sorted canonically.
    pub components: Vec<DecompositionComponent>,
    /// Components dropped because a closed component lies above them.
    pub pruned: usize,
    pub nodes: u64,
    /// False when the depth limit or node budget cut the recursion.
    pub complete: bool,
}

#[derive(Clone, Debug)]
struct Part {
    matroid: Matroid,
    closed: bool,
    provenance: Vec<Step>,
}

struct Memo {
    depth: usize,
    parts: Vec<Part>,
    complete: bool,
}

struct Driver<'a> {
    hints: &'a Hints,
    opts: &'a DecomposeOptions,
    memo: HashMap<String, Memo>,
    nodes: u64,
    pruned: usize,
    complete: bool,
}

pub fn decompose(m: &Matroid, hints: &Hints, opts: &DecomposeOptions) -> Result<Decomposition> {
    let mut driver = Driver {
        hints,
        opts,
        memo: HashMap::new(),
        nodes: 0,
        pruned: 0,
        complete: true,
    };
    let mut parts = driver.solve(m, 0)?;
    parts.sort_by(|a, b| a.matroid.cmp(&b.matroid));
    let mut components: Vec<DecompositionComponent> = parts
        .into_iter()
        .map(|p| {
            let realizable = hints.realizability(&p.matroid);
            let connected = is_inductively_connected(&p.matroid.simplify().0);
            DecompositionComponent {
                status: if realizable == Realizability::Yes && connected {
                    Status::IrreducibleProven
                } else {
                    Status::Unknown
                },
                realizable,
                closed: p.closed,
                provenance: p.provenance,
                matroid: p.matroid,
                possibly_redundant_below: Vec::new(),
            }
        })
        .collect();
    for i in 0..components.len() {
        let above: Vec<usize> = (0..components.len())
            .filter(|&j| j != i && leq(&components[i].matroid, &components[j].matroid))
            .collect();
        components[i].possibly_redundant_below = above;
    }
    Ok(Decomposition {
        source: m.clone(),
        components,
        pruned: driver.pruned,
        nodes: driver.nodes,
        complete: driver.complete,
    })
}

fn leq(a: &Matroid, b: &Matroid) -> bool {
    compare(a, b).unwrap_or(false)
}

impl Driver<'_> {
    /// Components for `m`, in the labeling of `m`.
    fn solve(&mut self, m: &Matroid, depth: usize) -> Result<Vec<Part>> {
        let (s, q) = m.simplify();
        let (lab, form) = canonical_labeling(&s);
        let key = form.hash();
        let reusable = self
            .memo
            .get(&key)
            .is_some_and(|e| e.complete || e.depth <= depth);
        if !reusable {
            let canon = s.relabel(&lab);
            let before = self.complete;
            self.complete = true;
            let parts = self.solve_simple(&canon, &key, depth)?;
            let complete = self.complete;
            self.complete = before && complete;
            self.memo.insert(key.clone(), Memo { depth, parts, complete });
        }
        let mut inv = vec![0; lab.len()];
        for (p, &c) in lab.iter().enumerate() {
            inv[c] = p;
        }
        let cached = &self.memo[&key];
        if !cached.complete {
            self.complete = false;
        }
        Ok(cached
            .parts
            .iter()
            .map(|p| Part {
                matroid: q.lift(&p.matroid.relabel(&inv)),
                closed: p.closed,
                provenance: p.provenance.clone(),
            })
            .collect())
    }

    /// `s` is simple and canonically labeled with hash `key`.
    fn solve_simple(&mut self, s: &Matroid, key: &str, depth: usize) -> Result<Vec<Part>> {
        let step = |rule| vec![Step { rule, matroid: key.to_string() }];
        let keep_self = self.hints.realizability(s) != Realizability::No;
        if is_paving(s) && max_degree(s) <= 2 {
            if is_nilpotent(s) {
                return Ok(if keep_self {
                    vec![Part { matroid: s.clone(), closed: true, provenance: step(Rule::Nilpotent) }]
                } else {
                    Vec::new()
                });
            }
            if proper_submatroids_all_nilpotent(s) {
                let mut out = Vec::new();
                if keep_self {
                    out.push(Part {
                        matroid: s.clone(),
                        closed: false,
                        provenance: step(Rule::SubmatroidsNilpotent),
                    });
                }
                out.push(Part {
                    matroid: Matroid::uniform(s.rank().saturating_sub(1), s.d()),
                    closed: true,
                    provenance: step(Rule::UniformCompanion),
                });
                return Ok(out);
            }
        }
        let remaining = self.opts.node_budget.map(|b| b.saturating_sub(self.nodes));
        if depth >= self.opts.max_depth || remaining == Some(0) {
            self.complete = false;
            return Ok(vec![Part { matroid: s.clone(), closed: false, provenance: step(Rule::Unresolved) }]);
        }
        let report = self.degenerations(s, remaining)?;
        self.nodes += report.stats.nodes;
        if !report.complete {
            self.complete = false;
        }
        let mut out = Vec::new();
        if keep_self {
            out.push(Part { matroid: s.clone(), closed: false, provenance: step(Rule::Source) });
        }
        for n in &report.maximal {
            if let Some(targets) = self.hints.cover(key, n) {
                for t in targets {
                    let (matroid, closed) = match t {
                        CoverTarget::Itself => (n.clone(), true),
                        CoverTarget::Parent => (s.clone(), false),
                        CoverTarget::Truncation => (s.truncation(), false),
                    };
                    if self.hints.realizability(&matroid) != Realizability::No {
                        out.push(Part { matroid, closed, provenance: step(Rule::Cover) });
                    }
                }
                continue;
            }
            for mut part in self.solve(n, depth + 1)? {
                let mut prov = step(Rule::Degeneration);
                prov.append(&mut part.provenance);
                part.provenance = prov;
                out.push(part);
            }
        }
        Ok(self.prune(out))
    }

    fn degenerations(&self, s: &Matroid, remaining: Option<u64>) -> Result<DegenerationReport> {
        let mut search = self.opts.search.clone();
        if let Some(r) = remaining {
            search.node_limit = Some(search.node_limit.map_or(r, |l| l.min(r)));
        }
        if s.rank() == 4 {
            min_above_rank4_with(s, &search)
        } else {
            Ok(min_above_general_with(s, &search))
        }
    }

    /// Merges duplicates and drops parts lying below a closed part.
    fn prune(&mut self, parts: Vec<Part>) -> Vec<Part> {
        let mut merged: Vec<Part> = Vec::with_capacity(parts.len());
        for p in parts {
            match merged.iter_mut().find(|m| m.matroid == p.matroid) {
                Some(m) => m.closed |= p.closed,
                None => merged.push(p),
            }
        }
        let keep: Vec<bool> = (0..merged.len())
            .map(|i| {
                !(0..merged.len())
                    .any(|j| j != i && merged[j].closed && leq(&merged[i].matroid, &merged[j].matroid))
            })
            .collect();
        let before = merged.len();
        let out: Vec<Part> = merged
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect();
        self.pruned += before - out.len();
        out
    }
}
