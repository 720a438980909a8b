//! Labeled hypergraphs: edges carrying a Type `i`, read as "rank at most `i`".

use crate::error::{Error, Result};
use crate::matroid::{Matroid, QuotientMap};
use crate::set::{k_subsets, Set};

/// An edge of Type `ty`. Ordered by type, then canonically by set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub ty: usize,
    pub set: Set,
}

impl Edge {
    pub fn new(set: Set, ty: usize) -> Edge {
        Edge { ty, set }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledHypergraph {
    d: usize,
    n: usize,
    edges: Vec<Edge>,
}

impl LabeledHypergraph {
    pub fn empty(d: usize, n: usize) -> LabeledHypergraph {
        LabeledHypergraph { d, n, edges: Vec::new() }
    }

    /// The induced hypergraph: drops edges with `|e| <= i`, then edges
    /// strictly inside another edge of the same type.
    pub fn induce(d: usize, n: usize, raw: Vec<Edge>) -> LabeledHypergraph {
        let mut edges: Vec<Edge> = raw.into_iter().filter(|e| e.set.len() > e.ty).collect();
        edges.sort();
        edges.dedup();
        let kept: Vec<Edge> = edges
            .iter()
            .filter(|e| {
                !edges
                    .iter()
                    .any(|f| f.ty == e.ty && e.set.is_proper_subset(f.set))
            })
            .copied()
            .collect();
        LabeledHypergraph { d, n, edges: kept }
    }

    /// Like [`induce`](Self::induce), but also drops any edge implied by a
    /// distinct edge of lower or equal type containing it.
    pub fn normalized(d: usize, n: usize, raw: Vec<Edge>) -> LabeledHypergraph {
        let mut edges: Vec<Edge> = raw.into_iter().filter(|e| e.set.len() > e.ty).collect();
        edges.sort();
        edges.dedup();
        let kept: Vec<Edge> = edges
            .iter()
            .filter(|e| {
                !edges
                    .iter()
                    .any(|f| f != *e && f.ty <= e.ty && e.set.is_subset(f.set))
            })
            .copied()
            .collect();
        LabeledHypergraph { d, n, edges: kept }
    }

    /// `Δ_M`: Type-`i` edges are the cyclic flats of rank `i < n`.
    pub fn of_matroid(m: &Matroid, n: usize) -> LabeledHypergraph {
        assert!(m.rank() <= n, "matroid rank exceeds the ambient bound");
        let edges = m
            .cyclic_flats()
            .iter()
            .filter(|(_, r)| *r < n)
            .map(|&(f, r)| Edge::new(f, r))
            .collect();
        LabeledHypergraph::induce(m.d(), n, edges)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn of_type(&self, i: usize) -> impl Iterator<Item = Set> + '_ {
        self.edges.iter().filter(move |e| e.ty == i).map(|e| e.set)
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The hypergraph induced by `self ∪ {extra}`.
    pub fn with_edge(&self, extra: Edge) -> LabeledHypergraph {
        let mut raw = self.edges.clone();
        raw.push(extra);
        LabeledHypergraph::induce(self.d, self.n, raw)
    }

    /// `N ⪯ Δ`: every Type-`i` edge has rank at most `i` in `N`.
    pub fn dominates(&self, m: &Matroid) -> bool {
        m.d() == self.d
            && m.rank() <= self.n
            && self.edges.iter().all(|e| m.rank_of(e.set) <= e.ty)
    }

    /// Upper bound on the rank of `a` in any matroid below the hypergraph.
    pub fn valuation(&self, a: Set) -> usize {
        self.edges
            .iter()
            .map(|e| (a - e.set).len() + e.ty)
            .fold(a.len().min(self.n), usize::min)
    }

    /// Removes point `k`, relabeling the points above it down by one.
    pub fn remove_vertex(&self, k: usize) -> LabeledHypergraph {
        self.remove_vertices(Set::singleton(k))
    }

    pub fn remove_vertices(&self, gone: Set) -> LabeledHypergraph {
        let keep = Set::full(self.d) - gone;
        let mut new_of = vec![usize::MAX; self.d];
        for (i, p) in keep.iter().enumerate() {
            new_of[p] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| (e.set - gone).len() > e.ty)
            .map(|e| Edge::new((e.set - gone).map(&new_of), e.ty))
            .collect();
        LabeledHypergraph::induce(keep.len(), self.n, edges)
    }

    /// Identifies the points joined by Type-1 edges. The result lives on
    /// one point per class, in the order of the returned map.
    pub fn reduce(&self) -> Result<(LabeledHypergraph, QuotientMap)> {
        if self.of_type(0).next().is_some() {
            return Err(Error::Precondition("reduction needs a hypergraph without Type-0 edges".into()));
        }
        let groups: Vec<Set> = self.of_type(1).collect();
        let q = QuotientMap::identity(self.d).merge(&groups);
        Ok((self.through_quotient(&q), q))
    }

    /// Rewrites the edges through a quotient of `[d]`, onto `[classes]`.
    /// Edges of Type at most 1 vanish.
    pub fn through_quotient(&self, q: &QuotientMap) -> LabeledHypergraph {
        let mut index = vec![usize::MAX; self.d];
        for (j, c) in q.classes.iter().enumerate() {
            for p in c.iter() {
                index[p] = j;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.ty >= 2)
            .map(|e| Edge::new((e.set - q.removed_loops).map(&index), e.ty))
            .collect();
        LabeledHypergraph::induce(q.classes.len(), self.n, edges)
    }

    /// Every pair of edges satisfies `i + j >= v(e1 ∩ e2) + v(e1 ∪ e2)`.
    pub fn satisfies_conditions(&self) -> bool {
        let e = &self.edges;
        (0..e.len()).all(|a| {
            (a + 1..e.len()).all(|b| {
                let (x, y) = (e[a], e[b]);
                x.ty + y.ty >= self.valuation(x.set & y.set) + self.valuation(x.set | y.set)
            })
        })
    }

    /// The rank-4 conditions on a hypergraph with Type-2 and Type-3 edges.
    pub fn satisfies_rank4_conditions(&self) -> bool {
        if self.n != 4 || self.edges.iter().any(|e| e.ty < 2 || e.ty > 3) {
            return false;
        }
        let planes: Vec<Set> = self.of_type(3).collect();
        let lines: Vec<Set> = self.of_type(2).collect();
        for (a, &p) in planes.iter().enumerate() {
            for &q in &planes[a + 1..] {
                let c = p & q;
                if c.len() >= 3 && !lines.iter().any(|l| c.is_subset(*l)) {
                    return false;
                }
            }
            for &l in &lines {
                if (p & l).len() >= 2 && !l.is_subset(p) {
                    return false;
                }
            }
        }
        for (a, &l) in lines.iter().enumerate() {
            for &k in &lines[a + 1..] {
                match (l & k).len() {
                    0 => {}
                    1 => {
                        if !planes.iter().any(|p| (l | k).is_subset(*p)) {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    /// `M_Δ`, after checking the pairwise conditions.
    pub fn matroid(&self) -> Result<Matroid> {
        if !self.satisfies_conditions() {
            return Err(Error::ConditionsFailed);
        }
        Ok(self.matroid_unchecked())
    }

    /// `M_Δ`: minimal sets among the `(i+1)`-subsets of Type-`i` edges and
    /// the `(n+1)`-subsets of `[d]`. Only a matroid when the conditions hold.
    pub fn matroid_unchecked(&self) -> Matroid {
        let small: Vec<Set> = self
            .edges
            .iter()
            .flat_map(|e| k_subsets(e.set, e.ty + 1))
            .collect();
        Matroid::from_rank_bound(self.d, self.n, small)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s(l: &[usize]) -> Set {
        Set::from_labels(l)
    }

    fn e(l: &[usize], ty: usize) -> Edge {
        Edge::new(s(l), ty)
    }

    fn fano_delta_with_double_point() -> LabeledHypergraph {
        let mut raw = vec![e(&[3, 7], 1)];
        raw.extend(catalog::fano().small_circuits().iter().map(|c| Edge::new(*c, 2)));
        LabeledHypergraph::induce(7, 3, raw)
    }

    #[test]
    fn induce_rules() {
        let h = LabeledHypergraph::induce(4, 3, vec![e(&[1, 2, 3], 2), e(&[1, 2, 3, 4], 2)]);
        assert_eq!(h.edges(), &[e(&[1, 2, 3, 4], 2)]);
        assert!(LabeledHypergraph::induce(4, 3, vec![e(&[1, 2], 2)]).is_empty());
        let mixed = LabeledHypergraph::induce(4, 3, vec![e(&[1, 2], 1), e(&[1, 2, 3], 2)]);
        assert_eq!(mixed.edges().len(), 2);
    }

    #[test]
    fn delta_of_fano_and_uniform() {
        let h = LabeledHypergraph::of_matroid(&catalog::fano(), 3);
        assert_eq!(h.edges().len(), 7);
        assert!(h.edges().iter().all(|e| e.ty == 2 && e.set.len() == 3));
        assert!(LabeledHypergraph::of_matroid(&Matroid::uniform(3, 8), 3).is_empty());
        let h = LabeledHypergraph::of_matroid(&Matroid::uniform(3, 8), 4);
        assert_eq!(h.edges(), &[Edge::new(Set::full(8), 3)]);
        assert!(LabeledHypergraph::of_matroid(&Matroid::uniform(4, 4), 4).is_empty());
    }

    #[test]
    fn remove_vertex_rules() {
        let h = LabeledHypergraph::induce(5, 3, vec![e(&[1, 2, 3], 2), e(&[2, 3, 4, 5], 2)]);
        let r = h.remove_vertex(0);
        assert_eq!(r.d(), 4);
        assert_eq!(r.edges(), &[e(&[1, 2, 3, 4], 2)]);
    }

    #[test]
    fn reduction_identifies_double_points() {
        let (red, q) = fano_delta_with_double_point().reduce().unwrap();
        assert_eq!(red.d(), 6);
        assert_eq!(q.classes[2], s(&[3, 7]));
        let mut want = vec![
            e(&[1, 2, 4], 2),
            e(&[1, 5, 6], 2),
            e(&[2, 3, 5], 2),
            e(&[3, 4, 5], 2),
            e(&[3, 4, 6], 2),
            e(&[2, 3, 6], 2),
        ];
        want.sort();
        assert_eq!(red.edges(), want.as_slice());
        let chained = LabeledHypergraph::induce(4, 3, vec![e(&[1, 2], 1), e(&[2, 3], 1)]);
        assert_eq!(chained.reduce().unwrap().1.classes[0], s(&[1, 2, 3]));
        let with_loop = LabeledHypergraph::induce(3, 3, vec![e(&[1], 0)]);
        assert!(with_loop.reduce().is_err());
    }

    #[test]
    fn valuation_examples() {
        let h = LabeledHypergraph::empty(7, 3);
        assert_eq!(h.valuation(s(&[1, 2, 3, 4])), 3);
        let h = LabeledHypergraph::induce(7, 3, vec![Edge::new(Set::full(7), 2)]);
        assert_eq!(h.valuation(s(&[1, 2, 3, 4])), 2);
        assert_eq!(fano_delta_with_double_point().valuation(s(&[1, 3, 7])), 2);
        assert_eq!(fano_delta_with_double_point().valuation(s(&[3, 7])), 1);
    }

    #[test]
    fn matroid_of_hypergraph() {
        assert_eq!(LabeledHypergraph::empty(5, 3).matroid().unwrap(), Matroid::uniform(3, 5));
        let fano = catalog::fano();
        assert_eq!(LabeledHypergraph::of_matroid(&fano, 3).matroid().unwrap(), fano);
        let top = LabeledHypergraph::induce(6, 3, vec![Edge::new(Set::full(6), 2)]);
        assert_eq!(top.matroid().unwrap(), Matroid::uniform(2, 6));
        let six = LabeledHypergraph::induce(6, 4, vec![e(&[1, 2, 3, 4], 3), e(&[3, 4, 5, 6], 3)]);
        assert!(six.satisfies_conditions() && six.satisfies_rank4_conditions());
        let bad = LabeledHypergraph::induce(6, 4, vec![e(&[1, 2, 3, 4], 2), e(&[3, 4, 5, 6], 2)]);
        assert!(!bad.satisfies_conditions());
        assert!(!bad.satisfies_rank4_conditions());
        assert!(matches!(bad.matroid(), Err(Error::ConditionsFailed)));
    }

    #[test]
    fn order_against_matroids() {
        let fano = catalog::fano();
        let h = LabeledHypergraph::of_matroid(&fano, 3);
        assert!(h.dominates(&fano));
        assert!(h.dominates(&Matroid::uniform(2, 7)));
        assert!(!h.dominates(&Matroid::uniform(3, 7)));
    }
}
