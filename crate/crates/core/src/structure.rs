//! Subspaces, point degrees and the predicates built on them: paving,
//! nilpotent, inductively connected.
//!
//! Subspaces are classes of non-spanning circuits with equal closure. The
//! class of a circuit does not change when passing to a restriction that
//! contains it, so restrictions are handled on the original labels.

use std::collections::HashSet;

use crate::matroid::Matroid;
use crate::set::{subsets, Set};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    /// Points lying on some circuit of the class.
    pub points: Set,
    pub closure: Set,
    pub rank: usize,
    pub circuits: Vec<Set>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceTable {
    pub subspaces: Vec<Subspace>,
    /// Degree of each point (0-based index).
    pub degrees: Vec<usize>,
}

impl SubspaceTable {
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

pub fn subspace_table(m: &Matroid) -> SubspaceTable {
    let mut subspaces: Vec<Subspace> = Vec::new();
    for &c in m.small_circuits() {
        let cl = m.closure(c);
        match subspaces.iter_mut().find(|s| s.closure == cl) {
            Some(s) => {
                s.points = s.points | c;
                s.circuits.push(c);
            }
            None => subspaces.push(Subspace {
                points: c,
                closure: cl,
                rank: c.len() - 1,
                circuits: vec![c],
            }),
        }
    }
    subspaces.sort_by_key(|s| s.closure);
    let mut degrees = vec![0; m.d()];
    for s in &subspaces {
        for p in s.points.iter() {
            degrees[p] += 1;
        }
    }
    SubspaceTable { subspaces, degrees }
}

/// Non-spanning circuits tagged with their subspace, for repeated degree
/// queries on restrictions.
pub struct ClassIndex<'a> {
    m: &'a Matroid,
    circuits: Vec<(Set, usize)>,
}

impl<'a> ClassIndex<'a> {
    pub fn new(m: &'a Matroid) -> ClassIndex<'a> {
        let mut closures: Vec<Set> = Vec::new();
        let circuits = m
            .small_circuits()
            .iter()
            .map(|&c| {
                let cl = m.closure(c);
                let id = match closures.iter().position(|x| *x == cl) {
                    Some(i) => i,
                    None => {
                        closures.push(cl);
                        closures.len() - 1
                    }
                };
                (c, id)
            })
            .collect();
        ClassIndex { m, circuits }
    }

    /// Point sets of the subspaces of `M|S`.
    fn subspace_points_within(&self, s: Set) -> Vec<(usize, Set)> {
        let r = self.m.rank_of(s);
        let mut out: Vec<(usize, Set)> = Vec::new();
        for &(c, id) in &self.circuits {
            if c.len() <= r && c.is_subset(s) {
                match out.iter_mut().find(|(i, _)| *i == id) {
                    Some((_, pts)) => *pts = *pts | c,
                    None => out.push((id, c)),
                }
            }
        }
        out
    }

    /// Degrees of the points of `M|S`, indexed by original point.
    pub fn degrees_within(&self, s: Set) -> Vec<usize> {
        let mut deg = vec![0; self.m.d()];
        for (_, pts) in self.subspace_points_within(s) {
            for p in pts.iter() {
                deg[p] += 1;
            }
        }
        deg
    }

    /// Degree of `p` in `M|S` when `S` has full rank.
    fn degree_full_rank(&self, s: Set, p: usize) -> usize {
        let mut ids: Vec<usize> = self
            .circuits
            .iter()
            .filter(|(c, _)| c.contains(p) && c.is_subset(s))
            .map(|&(_, id)| id)
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    /// Whether the nilpotent chain of `M|S` reaches the empty set.
    pub fn nilpotent_within(&self, mut s: Set) -> bool {
        loop {
            if s.is_empty() {
                return true;
            }
            let deg = self.degrees_within(s);
            let next = Set::from_points(s.iter().filter(|&p| deg[p] > 1));
            if next == s {
                return false;
            }
            s = next;
        }
    }
}

/// Every circuit has size `n` or `n+1`.
pub fn is_paving(m: &Matroid) -> bool {
    m.small_circuits().iter().all(|c| c.len() >= m.rank())
}

/// Closures of the `n`-circuits; for a paving matroid these are its
/// dependent hyperplanes.
pub fn dependent_hyperplanes(m: &Matroid) -> Vec<Set> {
    let mut out: Vec<Set> = m
        .circuits_of_size(m.rank())
        .map(|c| m.closure(c))
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn max_degree(m: &Matroid) -> usize {
    subspace_table(m).max_degree()
}

pub fn is_nilpotent(m: &Matroid) -> bool {
    ClassIndex::new(m).nilpotent_within(m.ground())
}

/// Restrictions deleting a single point are all nilpotent.
///
/// Degrees can only drop on passing to a restriction, so the nilpotent
/// chain of `M|S` stays inside that of `M|T` for `S ⊆ T`; checking the
/// maximal proper subsets is therefore enough.
pub fn proper_submatroids_all_nilpotent(m: &Matroid) -> bool {
    let idx = ClassIndex::new(m);
    let full = m.ground();
    full.iter().all(|p| idx.nilpotent_within(full.without(p)))
}

/// Checks every proper subset; exponential, meant for validation.
pub fn proper_submatroids_all_nilpotent_exhaustive(m: &Matroid) -> bool {
    let idx = ClassIndex::new(m);
    let full = m.ground();
    subsets(full)
        .filter(|s| *s != full)
        .all(|s| idx.nilpotent_within(s))
}

/// A build order witnessing inductive connectivity, if one exists.
///
/// Depth-first search over the set of points placed so far; whether the
/// remaining points can be placed depends only on that set, so failed
/// sets are memoized.
pub fn inductive_order(m: &Matroid) -> Option<Vec<usize>> {
    let idx = ClassIndex::new(m);
    let full = m.ground();
    let mut dead: HashSet<u64> = HashSet::new();
    for b in m.bases() {
        let mut order: Vec<usize> = b.iter().collect();
        if extend(&idx, full, b, &mut order, &mut dead) {
            return Some(order);
        }
    }
    None
}

fn extend(idx: &ClassIndex, full: Set, s: Set, order: &mut Vec<usize>, dead: &mut HashSet<u64>) -> bool {
    if s == full {
        return true;
    }
    if dead.contains(&s.0) {
        return false;
    }
    for p in (full - s).iter() {
        let t = s.with(p);
        if idx.degree_full_rank(t, p) <= 2 {
            order.push(p);
            if extend(idx, full, t, order, dead) {
                return true;
            }
            order.pop();
        }
    }
    dead.insert(s.0);
    false
}

pub fn is_inductively_connected(m: &Matroid) -> bool {
    inductive_order(m).is_some()
}

/// Greedy placement in point order; a `None` here is not a proof that no
/// order exists.
pub fn inductive_order_greedy(m: &Matroid) -> Option<Vec<usize>> {
    let idx = ClassIndex::new(m);
    let full = m.ground();
    let b = m.basis_of(full);
    let mut s = b;
    let mut order: Vec<usize> = b.iter().collect();
    while s != full {
        let p = (full - s).iter().find(|&p| idx.degree_full_rank(s.with(p), p) <= 2)?;
        s = s.with(p);
        order.push(p);
    }
    Some(order)
}

/// Checks a build order against the definition.
pub fn is_valid_inductive_order(m: &Matroid, order: &[usize]) -> bool {
    let n = m.rank();
    if order.len() != m.d() || Set::from_points(order.iter().copied()) != m.ground() {
        return false;
    }
    if !m.is_independent(Set::from_points(order[..n].iter().copied())) {
        return false;
    }
    let idx = ClassIndex::new(m);
    let mut s = Set::from_points(order[..n].iter().copied());
    for &p in &order[n..] {
        s = s.with(p);
        if idx.degrees_within(s)[p] > 2 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(l: &[usize]) -> Set {
        Set::from_labels(l)
    }

    fn rank3(d: usize, lines: &[&[usize]]) -> Matroid {
        Matroid::from_small_circuits(
            d,
            3,
            lines
                .iter()
                .flat_map(|l| crate::set::k_subsets(s(l), 3))
                .collect(),
            true,
        )
        .unwrap()
    }

    fn qs() -> Matroid {
        rank3(6, &[&[1, 2, 3], &[1, 5, 6], &[3, 4, 5], &[2, 4, 6]])
    }

    fn three_lines() -> Matroid {
        rank3(7, &[&[1, 2, 7], &[3, 4, 7], &[5, 6, 7]])
    }

    fn fano() -> Matroid {
        rank3(
            7,
            &[&[1, 2, 4], &[1, 3, 7], &[1, 5, 6], &[2, 3, 5], &[4, 5, 7], &[2, 6, 7], &[3, 4, 6]],
        )
    }

    #[test]
    fn subspace_examples() {
        let t = subspace_table(&qs());
        assert_eq!(t.subspaces.len(), 4);
        assert!(t.degrees.iter().all(|&d| d == 2));
        let t = subspace_table(&three_lines());
        assert_eq!(t.subspaces.len(), 3);
        assert_eq!(t.degrees[6], 3);
        assert!(subspace_table(&Matroid::uniform(3, 8)).subspaces.is_empty());
    }

    #[test]
    fn paving_and_hyperplanes() {
        assert!(is_paving(&fano()));
        assert_eq!(dependent_hyperplanes(&fano()).len(), 7);
        let big_line = rank3(6, &[&[1, 2, 3, 4]]);
        assert_eq!(dependent_hyperplanes(&big_line), vec![s(&[1, 2, 3, 4])]);
        assert!(!is_paving(&fano().designate_loop(0)));
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&three_lines()));
        assert!(!is_nilpotent(&qs()));
        assert!(is_nilpotent(&Matroid::uniform(3, 3)));
        assert!(!is_nilpotent(&fano()));
    }

    #[test]
    fn proper_submatroids() {
        assert!(proper_submatroids_all_nilpotent(&qs()));
        assert!(!proper_submatroids_all_nilpotent(&fano()));
        assert!(proper_submatroids_all_nilpotent_exhaustive(&qs()));
        assert!(!proper_submatroids_all_nilpotent_exhaustive(&fano()));
    }

    #[test]
    fn inductive_connectivity() {
        let order = inductive_order(&qs()).expect("QS is inductively connected");
        assert!(is_valid_inductive_order(&qs(), &order));
        assert!(is_inductively_connected(&three_lines()));
        assert!(!is_inductively_connected(&fano()));
        assert!(is_inductively_connected(&Matroid::uniform(2, 6)));
    }
}
