//! The rank-4 search, stratified by the size of the first new circuit.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use super::{Budget, DegenerationReport, SearchOptions, SearchStats, Strata};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, LabeledHypergraph};
use crate::matroid::{Matroid, QuotientMap};
use crate::set::{k_subsets, Set};
use crate::weak_order::{compare, maximal_elements_counted};

type State = (LabeledHypergraph, QuotientMap);

/// Maximal matroids of stratum `v` below a reduced rank-4 hypergraph.
pub fn stratum_min(lambda: &LabeledHypergraph, v: usize) -> Vec<Matroid> {
    stratum_min_with(lambda, v, &SearchOptions::default()).0
}

pub fn stratum_min_with(lambda: &LabeledHypergraph, v: usize, opts: &SearchOptions) -> (Vec<Matroid>, bool) {
    assert!((2..=4).contains(&v), "strata 2 to 4 are searched");
    let budget = Budget::new(opts);
    let root = (normalize(lambda), QuotientMap::identity(lambda.d()));
    let (max, _) = maximal_elements_counted(explore(root, v, &budget));
    (max, !budget.exhausted())
}

pub fn min_above_rank4(m: &Matroid) -> Result<DegenerationReport> {
    min_above_rank4_with(m, &SearchOptions::default())
}

pub fn min_above_rank4_with(m: &Matroid, opts: &SearchOptions) -> Result<DegenerationReport> {
    if m.rank() != 4 {
        return Err(Error::NotRankFour(m.rank()));
    }
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let start = Instant::now();
    let budget = Budget::new(opts);
    let delta = LabeledHypergraph::of_matroid(m, 4);
    let mut stats = SearchStats::default();

    let loops: Vec<Matroid> = (0..m.d()).map(|i| m.designate_loop(i)).collect();
    let mut strata: [Vec<Matroid>; 4] = [loops, Vec::new(), Vec::new(), Vec::new()];
    for v in 2..=4 {
        let candidates: Vec<Set> = k_subsets(m.ground(), v).filter(|x| m.is_independent(*x)).collect();
        let run = |x: &Set| {
            let lambda = delta.with_edge(Edge::new(*x, v - 1));
            let root = if v == 2 {
                let (red, q) = lambda.reduce().expect("simple matroids have no Type-0 edges");
                (normalize(&red), q)
            } else {
                (normalize(&lambda), QuotientMap::identity(m.d()))
            };
            let mut found = explore(root, v, &budget);
            found.sort();
            found.dedup();
            found
        };
        let per_root: Vec<Vec<Matroid>> = if opts.parallel {
            candidates.par_iter().map(run).collect()
        } else {
            candidates.iter().map(run).collect()
        };
        let found: Vec<Matroid> = per_root.into_iter().flatten().collect();
        stats.candidates += found.len();
        let (max, c) = maximal_elements_counted(found);
        stats.comparisons += c;
        strata[v - 1] = max;
    }

    let mut kept: Vec<Matroid> = strata[3].clone();
    for v in [3, 2, 1] {
        let survivors: Vec<Matroid> = strata[v - 1]
            .iter()
            .filter(|n| {
                !kept.iter().any(|k| {
                    stats.comparisons += 1;
                    compare(n, k).expect("same ground set")
                })
            })
            .cloned()
            .collect();
        kept.extend(survivors);
    }
    kept.sort();
    stats.nodes = budget.nodes();
    stats.wall = start.elapsed();
    Ok(DegenerationReport {
        source: m.clone(),
        maximal: kept,
        strata: Some(Strata { maximal: strata }),
        stats,
        complete: !budget.exhausted(),
    })
}

fn normalize(h: &LabeledHypergraph) -> LabeledHypergraph {
    LabeledHypergraph::normalized(h.d(), h.n(), h.edges().to_vec())
}

fn add(h: &LabeledHypergraph, e: Edge) -> LabeledHypergraph {
    let mut raw = h.edges().to_vec();
    raw.push(e);
    LabeledHypergraph::normalized(h.d(), h.n(), raw)
}

/// Adds `cap` as a double point and identifies its points.
fn add_double_point(state: &State, cap: Set) -> State {
    let (h, q) = state;
    let with = add(h, Edge::new(cap, 1));
    let (red, q2) = with.reduce().expect("no Type-0 edges in the rank-4 search");
    (normalize(&red), q.compose(&q2))
}

fn contained_in(s: Set, family: &[Set]) -> bool {
    family.iter().any(|f| s.is_subset(*f))
}

/// The states to visit next, or `None` when the rank-4 conditions hold.
fn branch(state: &State, v: usize) -> Option<Vec<State>> {
    let (h, q) = state;
    let planes: Vec<Set> = h.of_type(3).collect();
    let lines: Vec<Set> = h.of_type(2).collect();
    let with = |e: Edge| (add(h, e), q.clone());
    let edges = h.edges();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (x, y) = (edges[a], edges[b]);
            let (cap, cup) = (x.set & y.set, x.set | y.set);
            match (x.ty, y.ty) {
                (3, 3) => {
                    if cap.len() >= 3 && !contained_in(cap, &lines) {
                        let mut out = vec![with(Edge::new(cup, 3))];
                        if v <= 3 {
                            out.push(with(Edge::new(cap, 2)));
                        }
                        return Some(out);
                    }
                }
                (2, 3) | (3, 2) => {
                    let (plane, line) = if x.ty == 3 { (x.set, y.set) } else { (y.set, x.set) };
                    if cap.len() >= 2 && !line.is_subset(plane) {
                        let mut out = vec![with(Edge::new(cup, 3))];
                        if v == 2 {
                            out.push(add_double_point(state, cap));
                        }
                        return Some(out);
                    }
                }
                (2, 2) => {
                    if cap.len() >= 2 {
                        let mut out = vec![with(Edge::new(cup, 2))];
                        if v == 2 {
                            out.push(add_double_point(state, cap));
                        }
                        return Some(out);
                    }
                    if cap.len() == 1 && !contained_in(cup, &planes) {
                        return Some(vec![with(Edge::new(cup, 3))]);
                    }
                }
                _ => unreachable!("rank-4 hypergraphs carry Type-2 and Type-3 edges only"),
            }
        }
    }
    None
}

/// Every lifted `M_Δ` reached from `root`.
fn explore(root: State, v: usize, budget: &Budget) -> Vec<Matroid> {
    let mut stack = vec![root];
    let mut seen: HashSet<State> = HashSet::new();
    let mut out = Vec::new();
    while let Some(state) = stack.pop() {
        if seen.contains(&state) {
            continue;
        }
        if !budget.tick() {
            break;
        }
        match branch(&state, v) {
            Some(next) => stack.extend(next),
            None => out.push(state.1.lift(&state.0.matroid_unchecked())),
        }
        seen.insert(state);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s(l: &[usize]) -> Set {
        Set::from_labels(l)
    }

    #[test]
    fn six_point_example_has_ten() {
        let r = min_above_rank4(&catalog::six_point()).unwrap();
        assert_eq!(r.maximal.len(), 10, "{:?}", r.maximal);
        assert!(r.maximal.contains(&Matroid::uniform(3, 6)));
        let doubles = r.maximal.iter().filter(|m| m.circuits_of_size(2).count() > 0).count();
        assert_eq!(doubles, 3);
    }

    #[test]
    fn lambda_example_has_three() {
        let lambda = LabeledHypergraph::induce(
            6,
            4,
            vec![
                Edge::new(s(&[1, 3, 4]), 2),
                Edge::new(s(&[1, 2, 5, 6]), 3),
                Edge::new(s(&[3, 4, 5, 6]), 3),
            ],
        );
        let out = stratum_min(&lambda, 2);
        assert_eq!(out.len(), 3, "{out:?}");
        assert!(out.iter().any(|m| m.rank() == 3 && m.small_circuits() == [s(&[1, 3, 4])]));
        assert!(out.iter().any(|m| m.circuits_of_size(2).eq([s(&[3, 4])])));
        assert!(out.iter().any(|m| m.coloops() == s(&[2])));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(min_above_rank4(&catalog::fano()), Err(Error::NotRankFour(3))));
        let m = catalog::six_point().designate_loop(0).truncation().truncation();
        assert!(min_above_rank4(&m).is_err());
    }
}
