//! Matroids given by their circuits, with a greedy rank oracle.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::{k_subsets, minimal_sets, Set, MAX_POINTS};

/// A matroid on `[d]`, stored as its rank and its circuits of size at most
/// the rank. Every `(rank+1)`-set without one of those is a circuit too;
/// the full family is built on demand.
///
/// The small circuits are indexed per point; they are the only ones the
/// rank oracle needs, since an independent set of size below the rank can
/// only be closed up by a non-spanning circuit.
#[derive(Clone)]
pub struct Matroid {
    d: usize,
    rank: usize,
    small: Vec<Set>,
    through: Vec<Vec<Set>>,
    all: OnceLock<Vec<Set>>,
    flats: OnceLock<Vec<(Set, usize)>>,
}

impl Matroid {
    /// Builds a matroid from its full circuit family.
    ///
    /// With `validate` the elimination axiom is checked exhaustively.
    pub fn from_circuits(d: usize, n: usize, circuits: Vec<Set>, validate: bool) -> Result<Matroid> {
        check_family(d, &circuits)?;
        let mut family = circuits;
        family.sort();
        family.dedup();
        for (i, a) in family.iter().enumerate() {
            if let Some(b) = family[i + 1..].iter().find(|b| a.is_subset(**b)) {
                return Err(Error::Precondition(format!("{a} and {b} are nested circuits")));
            }
        }
        if validate {
            check_elimination(&family)?;
        }
        let m = Matroid::from_circuits_unchecked(d, family);
        if m.rank != n {
            return Err(Error::RankMismatch {
                declared: n,
                actual: m.rank,
            });
        }
        Ok(m)
    }

    /// Builds a rank-`n` matroid from its circuits of size at most `n`;
    /// the spanning circuits are every `(n+1)`-set containing none of them.
    pub fn from_small_circuits(d: usize, n: usize, small: Vec<Set>, validate: bool) -> Result<Matroid> {
        check_family(d, &small)?;
        if n > d {
            return Err(Error::RankMismatch {
                declared: n,
                actual: d,
            });
        }
        let small = minimal_sets(small);
        let full = complete_spanning(d, n, small);
        Matroid::from_circuits(d, n, full, validate)
    }

    /// Trusts `circuits` to be the circuit family of a matroid.
    pub fn from_circuits_unchecked(d: usize, circuits: Vec<Set>) -> Matroid {
        assert!(d <= MAX_POINTS, "ground set too large");
        let mut circuits = circuits;
        circuits.sort();
        circuits.dedup();
        let rank = greedy_rank(d, &circuits, Set::full(d), d);
        let small = circuits.partition_point(|c| c.len() <= rank);
        let m = Matroid::from_parts(d, rank, circuits[..small].to_vec());
        let _ = m.all.set(circuits);
        m
    }

    /// The matroid whose small circuits are the minimal members of
    /// `candidates`, with every `(n+1)`-set dependent. Trusts the result to
    /// be a matroid; the rank may come out below `n`.
    pub fn from_rank_bound(d: usize, n: usize, candidates: Vec<Set>) -> Matroid {
        assert!(d <= MAX_POINTS, "ground set too large");
        let family = minimal_sets(candidates.into_iter().filter(|c| c.len() <= n).collect());
        let rank = greedy_rank(d, &family, Set::full(d), n);
        let small = family.into_iter().filter(|c| c.len() <= rank).collect();
        Matroid::from_parts(d, rank, small)
    }

    fn from_parts(d: usize, rank: usize, mut small: Vec<Set>) -> Matroid {
        small.sort();
        small.dedup();
        let mut through = vec![Vec::new(); d];
        for c in &small {
            for p in c.iter() {
                through[p].push(*c);
            }
        }
        Matroid {
            d,
            rank,
            small,
            through,
            all: OnceLock::new(),
            flats: OnceLock::new(),
        }
    }

    /// Builds the matroid whose dependent sets are those accepted by `dep`.
    ///
    /// `dep` must be the dependence predicate of a matroid of rank at most
    /// `max_rank`; circuits are found among sets of size up to `max_rank+1`.
    pub fn from_dependence<F: Fn(Set) -> bool>(d: usize, max_rank: usize, dep: F) -> Matroid {
        let full = Set::full(d);
        let mut circuits = Vec::new();
        for k in 1..=(max_rank + 1).min(d) {
            for s in k_subsets(full, k) {
                if dep(s) && s.iter().all(|x| !dep(s.without(x))) {
                    circuits.push(s);
                }
            }
        }
        Matroid::from_circuits_unchecked(d, circuits)
    }

    pub fn uniform(n: usize, d: usize) -> Matroid {
        assert!(n <= d);
        Matroid::from_parts(d, n, Vec::new())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> Set {
        Set::full(self.d)
    }

    /// Circuits in canonical order (size, then lexicographic).
    pub fn circuits(&self) -> &[Set] {
        self.all.get_or_init(|| {
            let mut all = complete_spanning(self.d, self.rank, self.small.clone());
            all.sort();
            all
        })
    }

    /// Circuits of size at most the rank.
    pub fn small_circuits(&self) -> &[Set] {
        &self.small
    }

    pub fn circuits_of_size(&self, k: usize) -> impl Iterator<Item = Set> + '_ {
        let family = if k <= self.rank { &self.small[..] } else { self.circuits() };
        family.iter().copied().filter(move |c| c.len() == k)
    }

    /// Whether `indep + x` is dependent, for independent `indep` smaller than the rank.
    fn closes(&self, indep: Set, x: usize) -> bool {
        let t = indep.with(x);
        self.through[x].iter().any(|c| c.is_subset(t))
    }

    /// A maximal independent subset of `a`, built greedily in point order.
    pub fn basis_of(&self, a: Set) -> Set {
        let mut indep = Set::EMPTY;
        let mut r = 0;
        for x in a.iter() {
            if r == self.rank {
                break;
            }
            if !self.closes(indep, x) {
                indep = indep.with(x);
                r += 1;
            }
        }
        indep
    }

    pub fn rank_of(&self, a: Set) -> usize {
        self.basis_of(a).len()
    }

    pub fn is_independent(&self, a: Set) -> bool {
        a.len() <= self.rank && !self.small_circuits().iter().any(|c| c.is_subset(a))
    }

    pub fn is_dependent(&self, a: Set) -> bool {
        !self.is_independent(a)
    }

    pub fn closure(&self, a: Set) -> Set {
        let b = self.basis_of(a);
        if b.len() == self.rank {
            return self.ground();
        }
        let mut cl = a;
        for x in (self.ground() - a).iter() {
            if self.closes(b, x) {
                cl = cl.with(x);
            }
        }
        cl
    }

    pub fn loops(&self) -> Set {
        if self.rank == 0 {
            return self.ground();
        }
        self.small
            .iter()
            .take_while(|c| c.len() == 1)
            .fold(Set::EMPTY, |s, c| s | *c)
    }

    pub fn coloops(&self) -> Set {
        Set::from_points((0..self.d).filter(|&p| self.rank_of(self.ground().without(p)) < self.rank))
    }

    pub fn is_simple(&self) -> bool {
        let first = if self.rank >= 2 { self.small.first() } else { self.circuits().first() };
        first.is_none_or(|c| c.len() > 2)
    }

    /// Every basis, in lexicographic order.
    pub fn bases(&self) -> Vec<Set> {
        k_subsets(self.ground(), self.rank)
            .filter(|b| self.is_independent(*b))
            .collect()
    }

    /// Cyclic flats with their ranks, sorted canonically.
    ///
    /// The loop set is included (rank 0) only when nonempty; the empty set
    /// is never listed.
    pub fn cyclic_flats(&self) -> &[(Set, usize)] {
        self.flats.get_or_init(|| self.compute_cyclic_flats())
    }

    fn compute_cyclic_flats(&self) -> Vec<(Set, usize)> {
        let mut flats: Vec<Set> = Vec::new();
        let spanning_seen = self.d > 0 && self.coloops().is_empty();
        for c in self.small_circuits() {
            let f = self.closure(*c);
            if !flats.contains(&f) {
                flats.push(f);
            }
        }
        if spanning_seen && !flats.contains(&self.ground()) {
            flats.push(self.ground());
        }
        // Joins of cyclic flats are cyclic flats; every cyclic flat is a
        // join of circuit closures.
        let mut i = 0;
        while i < flats.len() {
            for j in 0..i {
                let f = self.closure(flats[i] | flats[j]);
                if !flats.contains(&f) {
                    flats.push(f);
                }
            }
            i += 1;
        }
        let mut out: Vec<(Set, usize)> = flats.into_iter().map(|f| (f, self.rank_of(f))).collect();
        out.sort();
        out
    }

    /// `M|S`, relabeled onto `[|S|]`; the second value maps new points to old.
    pub fn restriction(&self, s: Set) -> (Matroid, Vec<usize>) {
        let old: Vec<usize> = s.iter().collect();
        let mut new_of = vec![usize::MAX; self.d];
        for (i, &p) in old.iter().enumerate() {
            new_of[p] = i;
        }
        let circuits = self
            .small
            .iter()
            .filter(|c| c.is_subset(s))
            .map(|c| c.map(&new_of))
            .collect();
        (Matroid::from_rank_bound(old.len(), self.rank, circuits), old)
    }

    pub fn deletion(&self, s: Set) -> (Matroid, Vec<usize>) {
        self.restriction(self.ground() - s)
    }

    /// Circuits of `M|S` kept on the original labels.
    pub fn restricted_circuits(&self, s: Set) -> impl Iterator<Item = Set> + '_ {
        self.circuits().iter().copied().filter(move |c| c.is_subset(s))
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        Matroid::from_dependence(self.d, self.d - self.rank, |x| {
            self.rank_of(full - x) < self.rank
        })
    }

    /// Independent sets are those of `M` of size at most `n-1`.
    pub fn truncation(&self) -> Matroid {
        assert!(self.rank >= 1, "truncation needs rank at least 1");
        let n = self.rank;
        Matroid::from_dependence(self.d, n - 1, |x| x.len() >= n || self.is_dependent(x))
    }

    /// `M(k)`: circuits of `M\k` together with the loop `{k}`.
    pub fn designate_loop(&self, k: usize) -> Matroid {
        let mut circuits: Vec<Set> = self.small.iter().copied().filter(|c| !c.contains(k)).collect();
        circuits.push(Set::singleton(k));
        Matroid::from_rank_bound(self.d, self.rank, circuits)
    }

    /// Direct sum, with the points of `other` placed after those of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let shift: Vec<usize> = (0..other.d).map(|p| p + self.d).collect();
        let mut circuits = self.circuits().to_vec();
        circuits.extend(other.circuits().iter().map(|c| c.map(&shift)));
        Matroid::from_circuits_unchecked(self.d + other.d, circuits)
    }

    /// Relabels point `p` as `perm[p]`.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        let small = self.small.iter().map(|c| c.map(perm)).collect();
        Matroid::from_parts(self.d, self.rank, small)
    }

    /// Removes loops and collapses parallel classes onto their minima.
    pub fn simplify(&self) -> (Matroid, QuotientMap) {
        let q = QuotientMap::of_matroid(self);
        let reps = q.representatives();
        (self.restriction(reps).0, q)
    }

    /// Every circuit-elimination instance holds.
    pub fn satisfies_axioms(&self) -> bool {
        check_elimination(self.circuits()).is_ok()
    }
}

fn check_family(d: usize, family: &[Set]) -> Result<()> {
    if d > MAX_POINTS {
        return Err(Error::GroundSetTooLarge(d));
    }
    let full = Set::full(d);
    for c in family {
        if !c.is_subset(full) {
            return Err(Error::PointOutOfRange {
                point: (*c - full).first().unwrap() + 1,
                d,
            });
        }
        if c.is_empty() {
            return Err(Error::Precondition("the empty set cannot be a circuit".into()));
        }
    }
    Ok(())
}

/// Adds every `(n+1)`-set containing none of `small`.
pub(crate) fn complete_spanning(d: usize, n: usize, mut small: Vec<Set>) -> Vec<Set> {
    small.retain(|c| c.len() <= n + 1);
    let extra: Vec<Set> = k_subsets(Set::full(d), n + 1)
        .filter(|s| !small.iter().any(|c| c.is_subset(*s)))
        .collect();
    small.extend(extra);
    small
}

fn greedy_rank(d: usize, circuits: &[Set], a: Set, cap: usize) -> usize {
    let mut through = vec![Vec::new(); d];
    for c in circuits {
        for p in c.iter() {
            through[p].push(*c);
        }
    }
    let mut indep = Set::EMPTY;
    for x in a.iter() {
        if indep.len() == cap {
            break;
        }
        let t = indep.with(x);
        if !through[x].iter().any(|c: &Set| c.is_subset(t)) {
            indep = t;
        }
    }
    indep.len()
}

fn check_elimination(circuits: &[Set]) -> Result<()> {
    for (i, &a) in circuits.iter().enumerate() {
        for &b in &circuits[i + 1..] {
            let common = a & b;
            for p in common.iter() {
                let rest = (a | b).without(p);
                if !circuits.iter().any(|c| c.is_subset(rest)) {
                    return Err(Error::AxiomViolation {
                        c1: a.to_string(),
                        c2: b.to_string(),
                        point: p + 1,
                    });
                }
            }
        }
    }
    Ok(())
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.rank == other.rank && self.small == other.small
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.d.hash(state);
        self.rank.hash(state);
        self.small.hash(state);
    }
}

impl Ord for Matroid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d
            .cmp(&other.d)
            .then(self.rank.cmp(&other.rank))
            .then_with(|| self.small.cmp(&other.small))
    }
}

impl PartialOrd for Matroid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(d={}, n={}, small=[", self.d, self.rank)?;
        for (i, c) in self.small_circuits().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("])")
    }
}

/// Removed loops and identified parallel classes, enough to lift results
/// computed on the simplification back to the original ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientMap {
    pub d: usize,
    pub removed_loops: Set,
    /// Classes sorted by their minimum, which is the representative.
    pub classes: Vec<Set>,
}

impl QuotientMap {
    pub fn identity(d: usize) -> QuotientMap {
        QuotientMap {
            d,
            removed_loops: Set::EMPTY,
            classes: (0..d).map(Set::singleton).collect(),
        }
    }

    pub fn of_matroid(m: &Matroid) -> QuotientMap {
        let loops = m.loops();
        let mut q = QuotientMap::identity(m.d());
        q = q.remove_points(loops);
        let pairs: Vec<Set> = m.circuits_of_size(2).collect();
        q.merge(&pairs)
    }

    pub fn representatives(&self) -> Set {
        self.classes
            .iter()
            .fold(Set::EMPTY, |s, c| s.with(c.first().unwrap()))
    }

    pub fn is_identity(&self) -> bool {
        self.removed_loops.is_empty() && self.classes.iter().all(|c| c.len() == 1)
    }

    /// Representative of point `p`, if `p` is not a removed loop.
    pub fn rep(&self, p: usize) -> Option<usize> {
        self.classes
            .iter()
            .find(|c| c.contains(p))
            .map(|c| c.first().unwrap())
    }

    /// Image of a set under the representative map.
    pub fn image(&self, s: Set) -> Set {
        self.classes
            .iter()
            .filter(|c| c.intersects(s))
            .fold(Set::EMPTY, |acc, c| acc.with(c.first().unwrap()))
    }

    /// Turns the classes of the given representatives into removed loops.
    pub fn remove_points(&self, reps: Set) -> QuotientMap {
        let mut loops = self.removed_loops;
        let mut classes = Vec::new();
        for c in &self.classes {
            if reps.contains(c.first().unwrap()) {
                loops = loops | *c;
            } else {
                classes.push(*c);
            }
        }
        QuotientMap {
            d: self.d,
            removed_loops: loops,
            classes,
        }
    }

    /// Merges classes whose representatives are linked by the given groups
    /// (transitively).
    pub fn merge(&self, groups: &[Set]) -> QuotientMap {
        let k = self.classes.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in groups {
            let idx: Vec<usize> = (0..k).filter(|&i| self.classes[i].intersects(*g)).collect();
            for w in idx.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut merged = vec![Set::EMPTY; k];
        for i in 0..k {
            let r = find(&mut parent, i);
            merged[r] = merged[r] | self.classes[i];
        }
        let mut classes: Vec<Set> = merged.into_iter().filter(|c| !c.is_empty()).collect();
        classes.sort_by_key(|c| c.first());
        QuotientMap {
            d: self.d,
            removed_loops: self.removed_loops,
            classes,
        }
    }

    /// `then` applied after `self`, where `then` acts on `[classes.len()]`.
    pub fn compose(&self, then: &QuotientMap) -> QuotientMap {
        assert_eq!(then.d, self.classes.len(), "quotient maps do not chain");
        let expand = |s: Set| s.iter().fold(Set::EMPTY, |acc, j| acc | self.classes[j]);
        QuotientMap {
            d: self.d,
            removed_loops: self.removed_loops | expand(then.removed_loops),
            classes: then.classes.iter().map(|c| expand(*c)).collect(),
        }
    }

    /// Lifts a matroid on `[classes.len()]` back to `[d]`: removed loops
    /// become loops and every class member becomes a copy of its class.
    pub fn lift(&self, m: &Matroid) -> Matroid {
        assert_eq!(m.d(), self.classes.len(), "lift expects one point per class");
        if self.is_identity() {
            return m.clone();
        }
        let mut candidates: Vec<Set> = self.removed_loops.iter().map(Set::singleton).collect();
        for c in &self.classes {
            candidates.extend(crate::set::k_subsets(*c, 2));
        }
        for circuit in m.small_circuits() {
            let mut partial = vec![Set::EMPTY];
            for j in circuit.iter() {
                let mut next = Vec::with_capacity(partial.len() * self.classes[j].len());
                for s in &partial {
                    for p in self.classes[j].iter() {
                        next.push(s.with(p));
                    }
                }
                partial = next;
            }
            candidates.extend(partial);
        }
        Matroid::from_rank_bound(self.d, m.rank(), candidates)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(l: &[usize]) -> Set {
        Set::from_labels(l)
    }

    fn fano() -> Matroid {
        let lines = [[1, 2, 4], [1, 3, 7], [1, 5, 6], [2, 3, 5], [4, 5, 7], [2, 6, 7], [3, 4, 6]];
        Matroid::from_small_circuits(7, 3, lines.iter().map(|l| s(l)).collect(), true).unwrap()
    }

    fn qs() -> Matroid {
        let lines = [[1, 2, 3], [1, 5, 6], [3, 4, 5], [2, 4, 6]];
        Matroid::from_small_circuits(6, 3, lines.iter().map(|l| s(l)).collect(), true).unwrap()
    }

    #[test]
    fn uniform_from_circuits() {
        let m = Matroid::from_circuits(6, 2, k_subsets(Set::full(6), 3).collect(), true).unwrap();
        assert_eq!(m, Matroid::uniform(2, 6));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn elimination_failure_is_reported() {
        let r = Matroid::from_circuits(4, 2, vec![s(&[1, 2, 3]), s(&[1, 2, 4])], true);
        assert!(matches!(r, Err(Error::AxiomViolation { .. })));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let r = Matroid::from_circuits(4, 3, k_subsets(Set::full(4), 3).collect(), false);
        assert_eq!(r, Err(Error::RankMismatch { declared: 3, actual: 2 }));
    }

    #[test]
    fn fano_rank_and_closure() {
        let f = fano();
        assert_eq!(f.circuits().len(), 7 + 7);
        assert_eq!(f.rank_of(s(&[1, 2, 4])), 2);
        assert_eq!(f.closure(s(&[1, 2])), s(&[1, 2, 4]));
        assert_eq!(Matroid::uniform(2, 7).rank_of(s(&[1, 2, 3])), 2);
        assert_eq!(Matroid::uniform(3, 8).closure(s(&[1, 2])), s(&[1, 2]));
    }

    #[test]
    fn qs_rank_and_closure() {
        let m = qs();
        assert_eq!(m.rank_of(s(&[1, 2, 3, 4])), 3);
        assert_eq!(m.closure(s(&[1, 2])), s(&[1, 2, 3]));
    }

    #[test]
    fn cyclic_flats_examples() {
        let f = fano();
        let flats = f.cyclic_flats();
        assert_eq!(flats.len(), 8);
        assert_eq!(flats.iter().filter(|(_, r)| *r == 2).count(), 7);
        assert_eq!(flats.last().unwrap(), &(Set::full(7), 3));
        assert_eq!(Matroid::uniform(2, 6).cyclic_flats(), &[(Set::full(6), 2)]);
        let free = Matroid::uniform(4, 4);
        assert!(free.cyclic_flats().is_empty());
        let with_loop = f.designate_loop(0);
        assert_eq!(with_loop.cyclic_flats()[0], (s(&[1]), 0));
    }

    #[test]
    fn restriction_and_deletion() {
        let f = fano();
        let (line, map) = f.restriction(s(&[1, 2, 4]));
        assert_eq!(line, Matroid::uniform(2, 3));
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(f.deletion(Set::EMPTY).0, f);
    }

    #[test]
    fn dual_and_truncation() {
        assert_eq!(Matroid::uniform(2, 6).dual(), Matroid::uniform(4, 6));
        let f = fano();
        assert_eq!(f.dual().dual(), f);
        assert_eq!(f.dual().rank(), 4);
        assert_eq!(f.truncation(), Matroid::uniform(2, 7));
    }

    #[test]
    fn designated_loop_has_rank_zero_point() {
        let m = fano().designate_loop(5);
        assert!(m.circuits().contains(&Set::singleton(5)));
        assert_eq!(m.rank_of(Set::singleton(5)), 0);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn simplify_and_lift_round_trip() {
        let f = fano();
        let (simple, q) = f.simplify();
        assert_eq!(simple, f);
        assert!(q.is_identity());

        // three double points on a line plus a free point
        let q0 = QuotientMap::identity(7).merge(&[s(&[2, 4]), s(&[3, 7]), s(&[5, 6])]);
        let line_plus_point = Matroid::from_small_circuits(4, 3, vec![s(&[2, 3, 4])], true).unwrap();
        let b = q0.lift(&line_plus_point);
        assert!(b.satisfies_axioms());
        assert_eq!(b.circuits_of_size(2).count(), 3);
        assert_eq!(b.circuits_of_size(3).count(), 8);
        let (simple, q) = b.simplify();
        assert_eq!(simple, line_plus_point);
        assert_eq!(q, q0);
        assert_eq!(q.lift(&simple), b);

        let par = Matroid::uniform(1, 5);
        let (simple, q) = par.simplify();
        assert_eq!(simple, Matroid::uniform(1, 1));
        assert_eq!(q.classes, vec![Set::full(5)]);
        assert_eq!(q.lift(&simple), par);
    }

    #[test]
    fn lift_with_loops() {
        let m = fano().designate_loop(2);
        let (simple, q) = m.simplify();
        assert_eq!(simple.d(), 6);
        assert_eq!(q.removed_loops, Set::singleton(2));
        assert_eq!(q.lift(&simple), m);
    }

    #[test]
    fn direct_sum_ranks_add() {
        let m = Matroid::uniform(1, 1).direct_sum(&qs());
        assert_eq!(m.d(), 7);
        assert_eq!(m.rank(), 4);
        assert_eq!(m.coloops(), Set::singleton(0));
    }
}
