//! Degenerations in arbitrary rank: a depth-first search over labeled
//! hypergraphs, one root per independent set declared dependent.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use super::{Budget, DegenerationReport, SearchOptions, SearchStats, MAX_LISTED_GROUP};
use crate::isomorphism::{automorphisms, Perm};
use crate::hypergraph::{Edge, LabeledHypergraph};
use crate::matroid::{Matroid, QuotientMap};
use crate::set::{k_subsets, Set};
use crate::weak_order::maximal_elements_counted;

/// Maximal matroids of rank at most `n` below `lambda`.
pub fn min_above_hyp(lambda: &LabeledHypergraph) -> Vec<Matroid> {
    min_above_hyp_with(lambda, &SearchOptions::default()).0
}

/// Returns the maximal matroids and whether the search finished.
pub fn min_above_hyp_with(lambda: &LabeledHypergraph, opts: &SearchOptions) -> (Vec<Matroid>, bool) {
    let budget = Budget::new(opts);
    let root = (normalize(lambda), QuotientMap::identity(lambda.d()));
    let found = explore(root, false, &budget);
    let (max, _) = maximal_elements_counted(found);
    (max, !budget.exhausted())
}

pub fn min_above_general(m: &Matroid) -> DegenerationReport {
    min_above_general_with(m, &SearchOptions::default())
}

/// Declares each independent set dependent in turn and keeps the maximal
/// matroids among all results.
///
/// Anything with a loop `i` lies below `M(i)`, so the loop designations are
/// added directly and the searches drop every branch that forces a loop.
/// Parallel pairs are identified as soon as they appear. Loops of `M` stay
/// loops in everything below it, so they are deleted first and put back.
pub fn min_above_general_with(m: &Matroid, opts: &SearchOptions) -> DegenerationReport {
    let loops = m.loops();
    if !loops.is_empty() {
        let rest = m.ground() - loops;
        let q = QuotientMap {
            d: m.d(),
            removed_loops: loops,
            classes: rest.iter().map(Set::singleton).collect(),
        };
        let mut report = min_above_general_with(&m.restriction(rest).0, opts);
        let mut maximal: Vec<Matroid> = report.maximal.iter().map(|n| q.lift(n)).collect();
        maximal.sort();
        report.maximal = maximal;
        report.source = m.clone();
        return report;
    }
    let start = Instant::now();
    let n = m.rank();
    let budget = Budget::new(opts);
    let delta = LabeledHypergraph::of_matroid(m, n);
    let roots: Vec<Set> = (2..=n)
        .flat_map(|k| k_subsets(m.ground(), k))
        .filter(|e| m.is_independent(*e))
        .collect();
    let group = if opts.orbit_roots {
        automorphisms(m).elements(MAX_LISTED_GROUP)
    } else {
        None
    };
    let roots = match &group {
        Some(elements) => orbit_representatives(roots, elements),
        None => roots,
    };
    let run = |e: &Set| {
        let root = delta.with_edge(Edge::new(*e, e.len() - 1));
        match settle(normalize(&root), &QuotientMap::identity(m.d()), true) {
            Some(state) => maximal_elements_counted(explore(state, true, &budget)),
            None => (Vec::new(), 0),
        }
    };
    let per_root: Vec<(Vec<Matroid>, usize)> = if opts.parallel {
        roots.par_iter().map(run).collect()
    } else {
        roots.iter().map(run).collect()
    };
    let mut found: Vec<Matroid> = (0..m.d())
        .filter(|&i| !m.loops().contains(i))
        .map(|i| m.designate_loop(i))
        .collect();
    let mut comparisons = 0;
    for (max, c) in per_root {
        comparisons += c;
        match &group {
            Some(elements) => {
                let images: HashSet<Matroid> = max.iter().flat_map(|n| elements.iter().map(|g| n.relabel(g))).collect();
                found.extend(images);
            }
            None => found.extend(max),
        }
    }
    let candidates = found.len();
    let (maximal, c) = maximal_elements_counted(found);
    comparisons += c;
    DegenerationReport {
        source: m.clone(),
        maximal,
        strata: None,
        stats: SearchStats {
            nodes: budget.nodes(),
            candidates,
            comparisons,
            wall: start.elapsed(),
        },
        complete: !budget.exhausted(),
    }
}

/// The first root of each orbit, in the given order.
fn orbit_representatives(roots: Vec<Set>, elements: &[Perm]) -> Vec<Set> {
    let mut covered: HashSet<Set> = HashSet::new();
    let mut reps = Vec::new();
    for r in roots {
        if covered.contains(&r) {
            continue;
        }
        covered.extend(elements.iter().map(|g| r.map(g)));
        reps.push(r);
    }
    reps
}

fn normalize(h: &LabeledHypergraph) -> LabeledHypergraph {
    LabeledHypergraph::normalized(h.d(), h.n(), h.edges().to_vec())
}

type State = (LabeledHypergraph, QuotientMap);

fn replace(h: &LabeledHypergraph, old: Option<Edge>, new: Edge) -> LabeledHypergraph {
    let mut raw: Vec<Edge> = h.edges().iter().copied().filter(|e| Some(*e) != old).collect();
    raw.push(new);
    LabeledHypergraph::normalized(h.d(), h.n(), raw)
}

/// In loopless mode, drops hypergraphs with a Type-0 edge and identifies
/// the points of Type-1 edges.
fn settle(h: LabeledHypergraph, q: &QuotientMap, loopless: bool) -> Option<State> {
    if !loopless {
        return Some((h, q.clone()));
    }
    if h.of_type(0).next().is_some() {
        return None;
    }
    if h.of_type(1).next().is_none() {
        return Some((h, q.clone()));
    }
    let (red, q2) = h.reduce().expect("no Type-0 edges");
    Some((normalize(&red), q.compose(&q2)))
}

/// The hypergraphs to visit next, or `None` when the pairwise conditions
/// hold. Pairs are scanned in edge order; the first firing case wins.
///
/// Edges implied by a containing edge of no larger type are normalized
/// away, which is the first case (nested edges, smaller edge of larger
/// type) applied eagerly.
fn branch(h: &LabeledHypergraph) -> Option<Vec<LabeledHypergraph>> {
    let edges = h.edges();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            for (e1, e2) in [(edges[a], edges[b]), (edges[b], edges[a])] {
                if e1.set.is_proper_subset(e2.set) {
                    let bound = e1.ty + (e2.set - e1.set).len();
                    if e2.ty > bound {
                        return Some(vec![replace(h, Some(e2), Edge::new(e2.set, bound))]);
                    }
                }
            }
            let (e1, e2) = (edges[a], edges[b]);
            let (cap, cup) = (e1.set & e2.set, e1.set | e2.set);
            let (v_cap, v_cup) = (h.valuation(cap), h.valuation(cup));
            let s = (v_cap + v_cup) as isize - (e1.ty + e2.ty) as isize;
            if s > 0 {
                let half = (s as usize).div_ceil(2);
                let mut out = Vec::with_capacity(2);
                if v_cup >= half {
                    out.push(replace(h, None, Edge::new(cup, v_cup - half)));
                }
                if v_cap >= half {
                    out.push(replace(h, None, Edge::new(cap, v_cap - half)));
                }
                return Some(out);
            }
        }
    }
    None
}

/// Every lifted `M_Δ` reached from `root`.
fn explore(root: State, loopless: bool, budget: &Budget) -> Vec<Matroid> {
    let mut stack = vec![root];
    let mut seen: HashSet<State> = HashSet::new();
    let mut out = HashSet::new();
    while let Some(state) = stack.pop() {
        if seen.contains(&state) {
            continue;
        }
        if !budget.tick() {
            break;
        }
        let (h, q) = &state;
        match branch(h) {
            Some(next) => stack.extend(next.into_iter().filter_map(|g| settle(g, q, loopless))),
            None => {
                out.insert(q.lift(&h.matroid_unchecked()));
            }
        }
        seen.insert(state);
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hypergraph_of_a_matroid_gives_itself() {
        let fano = catalog::fano();
        let h = LabeledHypergraph::of_matroid(&fano, 3);
        assert_eq!(min_above_hyp(&h), vec![fano]);
        let top = LabeledHypergraph::induce(6, 3, vec![Edge::new(Set::full(6), 2)]);
        assert_eq!(min_above_hyp(&top), vec![Matroid::uniform(2, 6)]);
    }

    #[test]
    fn fano_with_a_double_point() {
        let mut raw = vec![Edge::new(Set::from_labels(&[3, 7]), 1)];
        raw.extend(catalog::fano().small_circuits().iter().map(|c| Edge::new(*c, 2)));
        let h = LabeledHypergraph::induce(7, 3, raw);
        let out = min_above_hyp(&h);
        assert!(out.iter().all(|m| h.dominates(m)));
        // 3 or 7 as a loop, plus four loopless ones.
        assert_eq!(out.len(), 6);
        assert_eq!(out.iter().filter(|m| m.loops().is_empty()).count(), 4);
    }

    #[test]
    fn fano_has_22() {
        let r = min_above_general(&catalog::fano());
        assert!(r.complete);
        assert_eq!(r.maximal.len(), 22);
        let with_loop = r.maximal.iter().filter(|m| !m.loops().is_empty()).count();
        assert_eq!(with_loop, 7);
        assert!(r.maximal.contains(&Matroid::uniform(2, 7)));
    }
}
