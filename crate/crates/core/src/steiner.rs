//! The expected maximal degenerations of a Steiner-system matroid, and the
//! experiment checking them against the general search on finite planes.

use serde::Serialize;

use crate::catalog;
use crate::degenerations::{min_above_general_with, DegenerationReport, SearchOptions};
use crate::error::Result;
use crate::matroid::Matroid;
use crate::set::{k_subsets, Set};

/// `M_b`: the points outside block `b` collapsed to one.
pub fn block_collapse(d: usize, n: usize, b: Set) -> Matroid {
    let outside = Set::full(d) - b;
    let mut small: Vec<Set> = k_subsets(b, n).collect();
    small.extend(k_subsets(outside, 2));
    Matroid::from_rank_bound(d, n, small)
}

/// `M_i`: `i` as a coloop beside the derived system on the other points,
/// whose hyperplanes are the blocks through `i` minus `i`.
pub fn point_split(d: usize, n: usize, blocks: &[Set], i: usize) -> Matroid {
    let rest = Set::full(d).without(i);
    let mut small: Vec<Set> = blocks
        .iter()
        .filter(|b| b.contains(i))
        .flat_map(|b| k_subsets(b.without(i), n - 1))
        .collect();
    small.extend(k_subsets(rest, n));
    Matroid::from_rank_bound(d, n, small)
}

/// `{M_b} ∪ {M_i} ∪ {M(i)} ∪ {U_{n-1,d}}`, sorted.
pub fn expected_degenerations(d: usize, n: usize, blocks: &[Set]) -> Vec<Matroid> {
    let m = catalog::steiner_matroid(d, n, blocks).expect("blocks form a Steiner system");
    let mut out: Vec<Matroid> = blocks.iter().map(|b| block_collapse(d, n, *b)).collect();
    out.extend((0..d).map(|i| point_split(d, n, blocks, i)));
    out.extend((0..d).map(|i| m.designate_loop(i)));
    out.push(Matroid::uniform(n - 1, d));
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaneKind {
    Projective,
    Affine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Timeout,
}

#[derive(Clone, Debug)]
pub struct SteinerReport {
    pub kind: PlaneKind,
    pub q: usize,
    pub d: usize,
    pub blocks: usize,
    pub expected: Vec<Matroid>,
    pub search: DegenerationReport,
    /// Expected but not found.
    pub missing: Vec<Matroid>,
    /// Found but not expected.
    pub unexpected: Vec<Matroid>,
    pub verdict: Verdict,
}

pub fn steiner_experiment(kind: PlaneKind, q: usize, opts: &SearchOptions) -> Result<SteinerReport> {
    let blocks = match kind {
        PlaneKind::Projective => catalog::projective_plane_lines(q)?,
        PlaneKind::Affine => catalog::affine_plane_lines(q)?,
    };
    let d = blocks.iter().fold(Set::EMPTY, |s, b| s | *b).len();
    let m = catalog::steiner_matroid(d, 3, &blocks)?;
    let expected = expected_degenerations(d, 3, &blocks);
    let search = min_above_general_with(&m, opts);
    let missing: Vec<Matroid> = expected
        .iter()
        .filter(|e| search.maximal.binary_search(e).is_err())
        .cloned()
        .collect();
    let unexpected: Vec<Matroid> = search
        .maximal
        .iter()
        .filter(|f| expected.binary_search(f).is_err())
        .cloned()
        .collect();
    let verdict = if !search.complete {
        Verdict::Timeout
    } else if missing.is_empty() && unexpected.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(SteinerReport {
        kind,
        q,
        d,
        blocks: blocks.len(),
        expected,
        search,
        missing,
        unexpected,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak_order::compare;

    #[test]
    fn fano_family_matches_its_degenerations() {
        let blocks = catalog::projective_plane_lines(2).unwrap();
        let expected = expected_degenerations(7, 3, &blocks);
        assert_eq!(expected.len(), 22);
        let fano = catalog::projective_plane(2).unwrap();
        assert!(expected.iter().all(|e| e.satisfies_axioms() && compare(e, &fano).unwrap()));
    }

    #[test]
    fn point_split_has_a_coloop() {
        let blocks = catalog::affine_plane_lines(3).unwrap();
        let m = point_split(9, 3, &blocks, 4);
        assert_eq!(m.coloops(), Set::singleton(4));
        assert_eq!(m.rank(), 3);
        // Four lines through each point of AG(2,3).
        assert_eq!(m.circuits_of_size(2).count(), 4);
    }

    #[test]
    fn small_planes_pass() {
        for (kind, q, count) in [(PlaneKind::Projective, 2, 22), (PlaneKind::Affine, 3, 31)] {
            let r = steiner_experiment(kind, q, &SearchOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{kind:?} {q}");
            assert_eq!(r.search.maximal.len(), count);
        }
    }
}
