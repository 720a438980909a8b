//! Fixed-width subsets of a ground set of at most 64 points.
//!
//! Point `i` (0-based) is bit `i`. Everything user-facing prints points
//! 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

/// Largest supported ground set.
pub const MAX_POINTS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Set(pub u64);

impl Set {
    pub const EMPTY: Set = Set(0);

    /// The full ground set `{0, .., d-1}`.
    pub fn full(d: usize) -> Set {
        debug_assert!(d <= MAX_POINTS);
        if d == 64 {
            Set(u64::MAX)
        } else {
            Set((1u64 << d) - 1)
        }
    }

    pub fn singleton(i: usize) -> Set {
        Set(1u64 << i)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Set {
        points.into_iter().fold(Set::EMPTY, |s, p| s.with(p))
    }

    /// Builds a set from 1-based labels.
    pub fn from_labels(labels: &[usize]) -> Set {
        Set::from_points(labels.iter().map(|&l| l - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Set {
        Set(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Set {
        Set(self.0 & !(1u64 << i))
    }

    pub fn is_subset(self, other: Set) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Set) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(self, other: Set) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|p| p + 1).collect()
    }

    /// Lexicographic comparison of the sorted point lists.
    pub fn lex_cmp(self, other: Set) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let a_has = self.0 & low != 0;
        // The set owning the first differing point is smaller unless the
        // other one has run out of points before it.
        let below = low - 1;
        let a_rest = self.0 & !below;
        let b_rest = other.0 & !below;
        if a_has {
            if b_rest == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if a_rest == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Applies a point map to every element.
    pub fn map(self, f: &[usize]) -> Set {
        self.iter().fold(Set::EMPTY, |s, p| s.with(f[p]))
    }
}

/// Canonical order: size first, then lexicographic.
impl Ord for Set {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for Set {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        f.write_str("}")
    }
}

impl BitOr for Set {
    type Output = Set;
    fn bitor(self, rhs: Set) -> Set {
        Set(self.0 | rhs.0)
    }
}

impl BitAnd for Set {
    type Output = Set;
    fn bitand(self, rhs: Set) -> Set {
        Set(self.0 & rhs.0)
    }
}

impl BitXor for Set {
    type Output = Set;
    fn bitxor(self, rhs: Set) -> Set {
        Set(self.0 ^ rhs.0)
    }
}

impl Sub for Set {
    type Output = Set;
    fn sub(self, rhs: Set) -> Set {
        Set(self.0 & !rhs.0)
    }
}

impl Not for Set {
    type Output = Set;
    fn not(self) -> Set {
        Set(!self.0)
    }
}

/// Points of a set in increasing order.
#[derive(Clone)]
pub struct Points(u64);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

/// All `k`-subsets of `within`, in lexicographic order.
pub fn k_subsets(within: Set, k: usize) -> KSubsets {
    let points: Vec<usize> = within.iter().collect();
    let idx = if k <= points.len() {
        Some((0..k).collect())
    } else {
        None
    };
    KSubsets { points, idx }
}

pub struct KSubsets {
    points: Vec<usize>,
    idx: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = Set;

    fn next(&mut self) -> Option<Set> {
        let idx = self.idx.as_mut()?;
        let out = Set::from_points(idx.iter().map(|&i| self.points[i]));
        let n = self.points.len();
        let k = idx.len();
        let mut j = k;
        loop {
            if j == 0 {
                self.idx = None;
                break;
            }
            j -= 1;
            if idx[j] < n - k + j {
                idx[j] += 1;
                for t in j + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Every subset of `of`, starting from the empty set (carry-rippler order).
pub fn subsets(of: Set) -> Subsets {
    Subsets {
        mask: of.0,
        cur: 0,
        done: false,
    }
}

pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Set;

    fn next(&mut self) -> Option<Set> {
        if self.done {
            return None;
        }
        let out = Set(self.cur);
        self.cur = self.cur.wrapping_sub(self.mask) & self.mask;
        if self.cur == 0 {
            self.done = true;
        }
        Some(out)
    }
}

/// Keeps the inclusion-minimal members of a family, sorted canonically.
pub fn minimal_sets(mut family: Vec<Set>) -> Vec<Set> {
    family.sort();
    family.dedup();
    let mut kept: Vec<Set> = Vec::with_capacity(family.len());
    for s in family {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v = [
            Set::from_labels(&[2, 3]),
            Set::from_labels(&[1, 2, 3]),
            Set::from_labels(&[1, 4]),
            Set::from_labels(&[1, 3]),
        ];
        v.sort();
        let labels: Vec<Vec<usize>> = v.iter().map(|s| s.labels()).collect();
        assert_eq!(labels, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn lex_cmp_handles_prefixes() {
        let a = Set::from_labels(&[1, 2]);
        let b = Set::from_labels(&[1, 2, 3]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(a), Ordering::Greater);
        let c = Set::from_labels(&[1, 5]);
        assert_eq!(b.lex_cmp(c), Ordering::Less);
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(Set::full(7), 3).count(), 35);
        assert_eq!(k_subsets(Set::full(4), 0).count(), 1);
        assert_eq!(k_subsets(Set::full(3), 4).count(), 0);
        let s = Set::from_labels(&[2, 5, 9]);
        let got: Vec<Set> = k_subsets(s, 2).collect();
        assert_eq!(got.len(), 3);
        assert!(got.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = Set::from_labels(&[1, 3, 6]);
        let all: Vec<Set> = subsets(s).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(subsets(Set::EMPTY).count(), 1);
    }

    #[test]
    fn minimal_sets_drops_supersets() {
        let fam = vec![
            Set::from_labels(&[1, 2, 3]),
            Set::from_labels(&[1, 2]),
            Set::from_labels(&[3, 4]),
            Set::from_labels(&[1, 2]),
        ];
        assert_eq!(
            minimal_sets(fam),
            vec![Set::from_labels(&[1, 2]), Set::from_labels(&[3, 4])]
        );
    }
}
