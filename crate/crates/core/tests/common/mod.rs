//! Test oracles built from basis families, independent of the hypergraph
//! machinery. A matroid on `d ≤ 6` points is stored as the bitmask of its
//! independent sets over all `2^d` subsets.

#![allow(dead_code)]

use matdegen::{Matroid, Set};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeled {
    pub d: usize,
    pub rank: usize,
    /// Bit `s` set iff the subset with bitmask `s` is independent.
    pub indep: u64,
}

impl Labeled {
    pub fn is_independent(&self, s: u64) -> bool {
        self.indep >> s & 1 == 1
    }

    pub fn matroid(&self) -> Matroid {
        Matroid::from_dependence(self.d, self.rank, |s| !self.is_independent(s.0))
    }

    pub fn of(m: &Matroid) -> Labeled {
        assert!(m.d() <= 6);
        let mut indep = 0u64;
        for s in 0..1u64 << m.d() {
            if m.is_independent(Set(s)) {
                indep |= 1 << s;
            }
        }
        Labeled { d: m.d(), rank: m.rank(), indep }
    }

    /// Weak order: every dependent set of `other` is dependent here.
    pub fn leq(&self, other: &Labeled) -> bool {
        self.d == other.d && self.indep & !other.indep == 0
    }
}

fn r_subsets(d: usize, r: usize) -> Vec<u64> {
    (0..1u64 << d).filter(|s| s.count_ones() as usize == r).collect()
}

/// Every matroid on `[d]` of the given rank, via the basis exchange axiom.
pub fn matroids_of_rank(d: usize, r: usize) -> Vec<Labeled> {
    let subsets = r_subsets(d, r);
    let k = subsets.len();
    let mut index = vec![usize::MAX; 1 << d];
    for (i, s) in subsets.iter().enumerate() {
        index[*s as usize] = i;
    }
    let mut out = Vec::new();
    for family in 1u32..(1u64 << k) as u32 {
        let member = |s: u64| family >> index[s as usize] & 1 == 1;
        let bases: Vec<u64> = (0..k).filter(|i| family >> i & 1 == 1).map(|i| subsets[i]).collect();
        let exchange = bases.iter().all(|&b1| {
            bases.iter().all(|&b2| {
                let only1 = b1 & !b2;
                let only2 = b2 & !b1;
                (0..d).filter(|x| only1 >> x & 1 == 1).all(|x| {
                    (0..d)
                        .filter(|y| only2 >> y & 1 == 1)
                        .any(|y| member((b1 & !(1 << x)) | 1 << y))
                })
            })
        });
        if !exchange {
            continue;
        }
        let mut indep = 0u64;
        for s in 0..1u64 << d {
            if bases.iter().any(|b| s & !b == 0) {
                indep |= 1 << s;
            }
        }
        out.push(Labeled { d, rank: r, indep });
    }
    out
}

pub fn matroids_up_to_rank(d: usize, max_rank: usize) -> Vec<Labeled> {
    (0..=max_rank.min(d)).flat_map(|r| matroids_of_rank(d, r)).collect()
}

/// The maximal members of `{N ∈ all : N < m}`.
pub fn min_above(m: &Labeled, all: &[Labeled]) -> Vec<Labeled> {
    let below: Vec<&Labeled> = all.iter().filter(|n| *n != m && n.leq(m)).collect();
    let mut out: Vec<Labeled> = below
        .iter()
        .filter(|n| !below.iter().any(|o| o != *n && n.leq(o)))
        .map(|n| **n)
        .collect();
    out.sort();
    out
}
