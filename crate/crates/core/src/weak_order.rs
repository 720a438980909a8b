//! The weak order: `N <= M` when every dependent set of `M` is dependent
//! in `N`.

use crate::error::{Error, Result};
use crate::hypergraph::LabeledHypergraph;
use crate::matroid::Matroid;
use crate::set::{k_subsets, Set};

/// Decides `mp <= m` from the cyclic flats of both matroids.
pub fn compare(mp: &Matroid, m: &Matroid) -> Result<bool> {
    if mp.d() != m.d() {
        return Err(Error::GroundSetMismatch(mp.d(), m.d()));
    }
    if mp.rank() > m.rank() {
        return Ok(false);
    }
    let n = m.rank();

    let loops_p = mp.loops();
    if !m.loops().is_subset(loops_p) {
        return Ok(false);
    }
    // Dependent sets meeting a loop of `mp` are dependent there anyway.
    let (m, _) = m.deletion(loops_p);
    let (mp, _) = mp.deletion(loops_p);
    let delta = LabeledHypergraph::of_matroid(&m, n);
    let delta_p = LabeledHypergraph::of_matroid(&mp, n);

    let parallel_p: Vec<Set> = delta_p.of_type(1).collect();
    if !delta.of_type(1).all(|x| parallel_p.iter().any(|y| x.is_subset(*y))) {
        return Ok(false);
    }

    let (red_p, q) = delta_p.reduce()?;
    let red = delta.through_quotient(&q);
    // `rank(x) <= i` in the simple reduction of `mp` iff removing some
    // `A ⊆ x` leaves `x \ A` inside a cyclic flat of rank at most
    // `i - |A|`; the best `A` for a given flat `y` is `x \ y`.
    Ok(red.edges().iter().all(|x| {
        red_p
            .edges()
            .iter()
            .any(|y| y.ty <= x.ty && (x.set - y.set).len() <= x.ty - y.ty)
    }))
}

/// `mp <= m` by checking every set of size at most `n+1`.
pub fn brute_force_leq(mp: &Matroid, m: &Matroid) -> Result<bool> {
    if mp.d() != m.d() {
        return Err(Error::GroundSetMismatch(mp.d(), m.d()));
    }
    let n = mp.rank().max(m.rank());
    let full = m.ground();
    for k in 1..=(n + 1).min(m.d()) {
        for s in k_subsets(full, k) {
            if m.is_dependent(s) && mp.is_independent(s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `mp <= m` by checking that every circuit of `m` is dependent in `mp`.
pub fn leq_by_circuits(mp: &Matroid, m: &Matroid) -> bool {
    mp.d() == m.d() && m.circuits().iter().all(|c| mp.is_dependent(*c))
}

/// The weak-order maximal members, sorted canonically.
pub fn maximal_elements(items: Vec<Matroid>) -> Vec<Matroid> {
    maximal_elements_counted(items).0
}

/// Same as [`maximal_elements`], also returning the number of comparisons.
pub fn maximal_elements_counted(mut items: Vec<Matroid>) -> (Vec<Matroid>, usize) {
    items.sort();
    items.dedup();
    let mut count = 0;
    let mut leq = |a: &Matroid, b: &Matroid| {
        count += 1;
        compare(a, b).expect("matroids share a ground set")
    };
    let mut antichain: Vec<Matroid> = Vec::new();
    for m in items {
        if antichain.iter().any(|a| leq(&m, a)) {
            continue;
        }
        antichain.retain(|a| !leq(a, &m));
        antichain.push(m);
    }
    antichain.sort();
    (antichain, count)
}
