//! Canonical labeling and automorphism groups by individualization and
//! refinement on the point/small-circuit incidence structure.
//!
//! A matroid is fixed by its rank and its circuits of size at most the
//! rank, so permutations preserving those are exactly the automorphisms.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::matroid::Matroid;
use crate::set::Set;

/// A permutation of `[d]`, `p[i]` being the image of point `i`.
pub type Perm = Vec<usize>;

/// The relabeled circuit list shared by all isomorphic matroids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub d: usize,
    pub rank: usize,
    pub small_circuits: Vec<Set>,
}

impl CanonicalForm {
    pub fn matroid(&self) -> Matroid {
        Matroid::from_small_circuits(self.d, self.rank, self.small_circuits.clone(), false)
            .expect("canonical forms come from matroids")
    }

    /// Hex SHA-256 of the textual form, usable as a stable name.
    pub fn hash(&self) -> String {
        let mut text = format!("{} {}\n", self.d, self.rank);
        for c in &self.small_circuits {
            text.push_str(&format!("{c}\n"));
        }
        let digest = Sha256::digest(text.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub d: usize,
    pub generators: Vec<Perm>,
    pub order: BigUint,
}

impl AutomorphismGroup {
    /// All elements, sorted, or `None` when the order exceeds `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<Perm>> {
        if self.order > BigUint::from(limit) {
            return None;
        }
        let id: Perm = (0..self.d).collect();
        let mut seen = std::collections::HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q: Perm = p.iter().map(|&x| g[x]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let mut all: Vec<Perm> = seen.into_iter().collect();
        all.sort();
        Some(all)
    }

    /// Orbits of the points, each sorted, listed by smallest point.
    pub fn orbits(&self) -> Vec<Set> {
        orbit_partition(self.d, &self.generators)
    }
}

fn orbit_partition(d: usize, gens: &[Perm]) -> Vec<Set> {
    let mut owner: Vec<Option<usize>> = vec![None; d];
    let mut orbits = Vec::new();
    for p in 0..d {
        if owner[p].is_some() {
            continue;
        }
        let orbit = orbit_of(Set::singleton(p), gens);
        for x in orbit.iter() {
            owner[x] = Some(orbits.len());
        }
        orbits.push(orbit);
    }
    orbits
}

fn orbit_of(start: Set, gens: &[Perm]) -> Set {
    let mut orbit = start;
    let mut frontier: Vec<usize> = start.iter().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            if !orbit.contains(g[x]) {
                orbit = orbit.with(g[x]);
                frontier.push(g[x]);
            }
        }
    }
    orbit
}

fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

struct Leaf {
    labeling: Perm,
    cert: Vec<Set>,
    path: Vec<usize>,
}

struct Search<'a> {
    d: usize,
    circuits: &'a [Set],
    through: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
}

impl<'a> Search<'a> {
    fn new(m: &'a Matroid) -> Search<'a> {
        let circuits = m.small_circuits();
        let mut through = vec![Vec::new(); m.d()];
        for (k, c) in circuits.iter().enumerate() {
            for p in c.iter() {
                through[p].push(k);
            }
        }
        Search {
            d: m.d(),
            circuits,
            through,
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    /// Equitable refinement: colours are dense ranks of signatures.
    fn refine(&self, colours: &mut Vec<u32>) {
        let mut cells = count_cells(colours);
        loop {
            let circuit_sigs: Vec<Vec<u32>> = self
                .circuits
                .iter()
                .map(|c| {
                    let mut v: Vec<u32> = c.iter().map(|p| colours[p]).collect();
                    v.sort_unstable();
                    v.insert(0, c.len() as u32);
                    v
                })
                .collect();
            let circuit_ids = dense_ranks(&circuit_sigs);
            let point_sigs: Vec<(u32, Vec<u32>)> = (0..self.d)
                .map(|p| {
                    let mut v: Vec<u32> = self.through[p].iter().map(|&k| circuit_ids[k]).collect();
                    v.sort_unstable();
                    (colours[p], v)
                })
                .collect();
            *colours = dense_ranks(&point_sigs);
            let now = count_cells(colours);
            if now == cells {
                return;
            }
            cells = now;
        }
    }

    /// Explores the subtree; `Some(level)` asks ancestors deeper than
    /// `level` to abandon their remaining children.
    fn search(&mut self, mut colours: Vec<u32>, prefix: &mut Vec<usize>) -> Option<usize> {
        self.refine(&mut colours);
        let Some(cell) = target_cell(&colours) else {
            return self.leaf(colours, prefix);
        };
        let level = prefix.len();
        let mut explored = Set::EMPTY;
        for x in cell.iter() {
            if !explored.is_empty() {
                let fixing: Vec<Perm> = self
                    .generators
                    .iter()
                    .filter(|g| prefix.iter().all(|&p| g[p] == p))
                    .cloned()
                    .collect();
                if orbit_of(explored, &fixing).contains(x) {
                    continue;
                }
            }
            explored = explored.with(x);
            prefix.push(x);
            let jump = self.search(individualize(&colours, x), prefix);
            prefix.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, colours: Vec<u32>, prefix: &[usize]) -> Option<usize> {
        let labeling: Perm = colours.iter().map(|&c| c as usize).collect();
        let mut cert: Vec<Set> = self.circuits.iter().map(|c| c.map(&labeling)).collect();
        cert.sort();
        let leaf = Leaf {
            labeling,
            cert,
            path: prefix.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                labeling: leaf.labeling.clone(),
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        for other in [first, self.best.as_ref().unwrap()] {
            if other.cert == leaf.cert {
                let back = inverse(&other.labeling);
                let gamma: Perm = leaf.labeling.iter().map(|&l| back[l]).collect();
                let common = other.path.iter().zip(&leaf.path).take_while(|(a, b)| a == b).count();
                if !self.generators.contains(&gamma) {
                    self.generators.push(gamma);
                }
                return Some(common);
            }
        }
        if leaf.cert < self.best.as_ref().unwrap().cert {
            self.best = Some(leaf);
        }
        None
    }
}

fn count_cells(colours: &[u32]) -> usize {
    let mut v = colours.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn dense_ranks<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut distinct = sigs.to_vec();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(s).unwrap() as u32)
        .collect()
}

/// The first smallest non-singleton cell, in colour order.
fn target_cell(colours: &[u32]) -> Option<Set> {
    let mut cells: HashMap<u32, Set> = HashMap::new();
    for (p, &c) in colours.iter().enumerate() {
        let e = cells.entry(c).or_default();
        *e = e.with(p);
    }
    let mut keys: Vec<u32> = cells.keys().copied().collect();
    keys.sort_unstable();
    keys.iter()
        .map(|k| cells[k])
        .filter(|c| c.len() > 1)
        .min_by_key(|c| c.len())
}

/// Splits `x` off its cell, placing it first.
fn individualize(colours: &[u32], x: usize) -> Vec<u32> {
    let mut out: Vec<u32> = colours.iter().map(|&c| 2 * c + 1).collect();
    out[x] -= 1;
    dense_ranks(&out)
}

struct Outcome {
    labeling: Perm,
    form: CanonicalForm,
    group: AutomorphismGroup,
}

fn run(m: &Matroid) -> Outcome {
    let mut search = Search::new(m);
    let mut prefix = Vec::new();
    search.search(vec![0; m.d()], &mut prefix);
    let first = search.first.take().expect("the search reaches a leaf");
    let best = search.best.take().expect("the search reaches a leaf");

    // Orbit of each first-path vertex under the automorphisms fixing the
    // vertices before it; the product is the group order.
    let mut order = BigUint::from(1u32);
    for (k, &v) in first.path.iter().enumerate() {
        let fixing: Vec<Perm> = search
            .generators
            .iter()
            .filter(|g| first.path[..k].iter().all(|&p| g[p] == p))
            .cloned()
            .collect();
        order *= BigUint::from(orbit_of(Set::singleton(v), &fixing).len());
    }
    let mut generators = search.generators;
    generators.sort();
    Outcome {
        labeling: best.labeling,
        form: CanonicalForm {
            d: m.d(),
            rank: m.rank(),
            small_circuits: best.cert,
        },
        group: AutomorphismGroup {
            d: m.d(),
            generators,
            order,
        },
    }
}

pub fn canonical_form(m: &Matroid) -> CanonicalForm {
    run(m).form
}

/// A labeling taking `m` to its canonical form.
pub fn canonical_labeling(m: &Matroid) -> (Perm, CanonicalForm) {
    let o = run(m);
    (o.labeling, o.form)
}

pub fn are_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    isomorphism(a, b).is_some()
}

/// A permutation `p` with `a.relabel(p) == b`.
pub fn isomorphism(a: &Matroid, b: &Matroid) -> Option<Perm> {
    if a.d() != b.d() || a.rank() != b.rank() || a.small_circuits().len() != b.small_circuits().len() {
        return None;
    }
    let (la, fa) = canonical_labeling(a);
    let (lb, fb) = canonical_labeling(b);
    if fa != fb {
        return None;
    }
    let back = inverse(&lb);
    Some(la.iter().map(|&l| back[l]).collect())
}

pub fn automorphisms(m: &Matroid) -> AutomorphismGroup {
    run(m).group
}

/// Matroids of a list grouped into orbits under a permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryClass {
    pub representative: Matroid,
    /// Positions in the input list.
    pub members: Vec<usize>,
}

/// Groups `items` by the action of `generators`; images falling outside
/// the list are ignored. Classes are ordered by their first member.
pub fn group_by_symmetry(items: &[Matroid], generators: &[Perm]) -> Vec<SymmetryClass> {
    let index: HashMap<&Matroid, usize> = items.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut class_of: Vec<Option<usize>> = vec![None; items.len()];
    let mut classes: Vec<SymmetryClass> = Vec::new();
    for start in 0..items.len() {
        if class_of[start].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[start] = Some(id);
        let mut members = vec![start];
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for g in generators {
                if let Some(&j) = index.get(&items[i].relabel(g)) {
                    if class_of[j].is_none() {
                        class_of[j] = Some(id);
                        members.push(j);
                        frontier.push(j);
                    }
                }
            }
        }
        members.sort_unstable();
        let representative = members.iter().map(|&i| &items[i]).min().unwrap().clone();
        classes.push(SymmetryClass { representative, members });
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn order(m: &Matroid) -> u64 {
        automorphisms(m).order.try_into().unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(order(&catalog::fano()), 168);
        assert_eq!(order(&Matroid::uniform(3, 6)), 720);
        assert_eq!(order(&Matroid::uniform(2, 12)), 479_001_600);
        assert_eq!(order(&catalog::k33_dual()), 72);
        assert_eq!(order(&catalog::steiner348()), 1344);
        assert_eq!(order(&catalog::qs()), 24);
    }

    #[test]
    fn plane_group_orders() {
        assert_eq!(order(&catalog::affine_plane(3).unwrap()), 432);
        assert_eq!(order(&catalog::projective_plane(3).unwrap()), 5616);
        assert_eq!(order(&catalog::affine_plane(4).unwrap()), 5760);
    }

    #[test]
    fn relabeling_preserves_the_form() {
        let f = catalog::fano();
        let perm = vec![3, 0, 6, 1, 5, 2, 4];
        let g = f.relabel(&perm);
        assert_eq!(canonical_form(&f), canonical_form(&g));
        let p = isomorphism(&f, &g).unwrap();
        assert_eq!(f.relabel(&p), g);
        assert!(are_isomorphic(&catalog::projective_plane(2).unwrap(), &f));
        assert!(!are_isomorphic(&f, &catalog::fano_dual().truncation()));
    }

    #[test]
    fn generators_are_automorphisms() {
        let m = catalog::k33_dual();
        let g = automorphisms(&m);
        assert!(g.generators.iter().all(|p| m.relabel(p) == m));
        let all = g.elements(1000).unwrap();
        assert_eq!(all.len(), 72);
        assert_eq!(g.orbits(), vec![Set::full(9)]);
    }

    #[test]
    fn symmetry_classes() {
        let f = catalog::fano();
        let loops: Vec<Matroid> = (0..7).map(|i| f.designate_loop(i)).collect();
        let g = automorphisms(&f);
        let classes = group_by_symmetry(&loops, &g.generators);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 7);
    }
}
