//! Named matroids and the finite-plane generators.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{k_subsets, Set};

fn sets(lists: &[&[usize]]) -> Vec<Set> {
    lists.iter().map(|l| Set::from_labels(l)).collect()
}

/// The `n`-paving matroid whose dependent hyperplanes are the given sets.
pub fn paving_from_hyperplanes(d: usize, n: usize, hyperplanes: &[Set]) -> Result<Matroid> {
    let small = hyperplanes.iter().flat_map(|h| k_subsets(*h, n)).collect();
    Matroid::from_small_circuits(d, n, small, true)
}

/// The `n`-paving matroid of a Steiner system `S(n-1, k, d)`: blocks are
/// the dependent hyperplanes.
pub fn steiner_matroid(d: usize, n: usize, blocks: &[Set]) -> Result<Matroid> {
    paving_from_hyperplanes(d, n, blocks)
}

pub fn fano() -> Matroid {
    let lines = sets(&[&[1, 2, 4], &[1, 3, 7], &[1, 5, 6], &[2, 3, 5], &[4, 5, 7], &[2, 6, 7], &[3, 4, 6]]);
    paving_from_hyperplanes(7, 3, &lines).unwrap()
}

/// Quadrilateral set.
pub fn qs() -> Matroid {
    let lines = sets(&[&[1, 2, 3], &[1, 5, 6], &[3, 4, 5], &[2, 4, 6]]);
    paving_from_hyperplanes(6, 3, &lines).unwrap()
}

pub fn three_concurrent_lines() -> Matroid {
    let lines = sets(&[&[1, 2, 7], &[3, 4, 7], &[5, 6, 7]]);
    paving_from_hyperplanes(7, 3, &lines).unwrap()
}

pub fn vamos() -> Matroid {
    paving_from_hyperplanes(8, 4, &vamos_hyperplanes()).unwrap()
}

pub fn vamos_hyperplanes() -> Vec<Set> {
    sets(&[&[1, 2, 3, 4], &[3, 4, 5, 6], &[5, 6, 7, 8], &[7, 8, 1, 2], &[3, 4, 7, 8]])
}

/// Vámos with the missing hyperplane `{1,2,5,6}` added.
pub fn vamos_a() -> Matroid {
    let mut h = vamos_hyperplanes();
    h.push(Set::from_labels(&[1, 2, 5, 6]));
    paving_from_hyperplanes(8, 4, &h).unwrap()
}

pub fn steiner348_blocks() -> Vec<Set> {
    sets(&[
        &[1, 2, 4, 8],
        &[2, 3, 5, 8],
        &[3, 4, 6, 8],
        &[4, 5, 7, 8],
        &[1, 5, 6, 8],
        &[2, 6, 7, 8],
        &[1, 3, 7, 8],
        &[3, 5, 6, 7],
        &[1, 4, 6, 7],
        &[1, 2, 5, 7],
        &[1, 2, 3, 6],
        &[2, 3, 4, 7],
        &[1, 3, 4, 5],
        &[2, 4, 5, 6],
    ])
}

pub fn steiner348() -> Matroid {
    steiner_matroid(8, 4, &steiner348_blocks()).unwrap()
}

pub fn fano_dual() -> Matroid {
    let h = sets(&[
        &[4, 5, 6, 7],
        &[2, 3, 5, 6],
        &[2, 3, 4, 7],
        &[1, 3, 5, 7],
        &[1, 3, 4, 6],
        &[1, 2, 4, 5],
        &[1, 2, 6, 7],
    ]);
    paving_from_hyperplanes(7, 4, &h).unwrap()
}

pub fn grid_lines() -> Vec<Set> {
    sets(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[1, 4, 7], &[2, 5, 8], &[3, 6, 9]])
}

/// Dual of the graphic matroid of `K_{3,3}`.
pub fn k33_dual() -> Matroid {
    let mut small = grid_lines();
    small.extend(sets(&[
        &[2, 3, 4, 7],
        &[1, 3, 5, 8],
        &[1, 2, 6, 9],
        &[1, 5, 6, 7],
        &[2, 4, 6, 8],
        &[3, 4, 5, 9],
        &[1, 4, 8, 9],
        &[2, 5, 7, 9],
        &[3, 6, 7, 8],
    ]));
    Matroid::from_small_circuits(9, 4, small, true).unwrap()
}

/// The 3×3 grid: nine points, six lines.
pub fn grid() -> Matroid {
    paving_from_hyperplanes(9, 3, &grid_lines()).unwrap()
}

/// Graphic matroid of `K_{3,3}`; edge `u_i v_j` is labeled `3(i-1)+j`.
pub fn graphic_k33() -> Matroid {
    let edges: Vec<(usize, usize)> = (0..9).map(|e| (e / 3, 3 + e % 3)).collect();
    graphic(6, &edges)
}

/// Graphic matroid of a multigraph on `vertices` vertices.
pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Matroid {
    let dep = |s: Set| {
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in s.iter() {
            let (a, b) = (find(&mut parent, edges[e].0), find(&mut parent, edges[e].1));
            if a == b {
                return true;
            }
            parent[a] = b;
        }
        false
    };
    Matroid::from_dependence(edges.len(), vertices.saturating_sub(1), dep)
}

/// Rank-4 matroid on six points with dependent hyperplanes
/// `{1,2,3,4}`, `{3,4,5,6}`, `{1,2,5,6}`.
pub fn six_point() -> Matroid {
    let h = sets(&[&[1, 2, 3, 4], &[3, 4, 5, 6], &[1, 2, 5, 6]]);
    paving_from_hyperplanes(6, 4, &h).unwrap()
}

/// Arithmetic in `GF(q)` for prime `q` and `q = 2^k`, `k ≤ 3`.
#[derive(Clone, Debug)]
pub struct Field {
    q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

type Op = fn(usize, usize, usize) -> usize;

impl Field {
    pub fn new(q: usize) -> Result<Field> {
        let (add, mul): (Op, Op) = match q {
            2 | 3 | 5 | 7 | 11 | 13 => (|a, b, q| (a + b) % q, |a, b, q| a * b % q),
            4 | 8 => (|a, b, _| a ^ b, gf2k_mul),
            _ => return Err(Error::Precondition(format!("no field of order {q} available"))),
        };
        let table = |f: Op| -> Vec<Vec<usize>> {
            (0..q).map(|a| (0..q).map(|b| f(a, b, q)).collect()).collect()
        };
        Ok(Field {
            q,
            add: table(add),
            mul: table(mul),
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }
}

/// Carry-less product reduced by `x²+x+1` (q = 4) or `x³+x+1` (q = 8).
fn gf2k_mul(a: usize, b: usize, q: usize) -> usize {
    let (k, poly) = if q == 4 { (2, 0b111) } else { (3, 0b1011) };
    let mut prod = 0usize;
    for i in 0..k {
        if b >> i & 1 == 1 {
            prod ^= a << i;
        }
    }
    for i in (k..2 * k).rev() {
        if prod >> i & 1 == 1 {
            prod ^= poly << (i - k);
        }
    }
    prod
}

/// Normalized projective points of `PG(2,q)`: first nonzero coordinate is 1.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for b in 0..q {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Lines of `PG(2,q)` as point sets, on points `0..q²+q+1`.
pub fn projective_plane_lines(q: usize) -> Result<Vec<Set>> {
    let f = Field::new(q)?;
    let pts = projective_points(q);
    if pts.len() > 64 {
        return Err(Error::GroundSetTooLarge(pts.len()));
    }
    let dot = |u: &[usize; 3], v: &[usize; 3]| {
        (0..3).fold(0, |acc, i| f.add(acc, f.mul(u[i], v[i])))
    };
    let mut lines: Vec<Set> = pts
        .iter()
        .map(|l| Set::from_points((0..pts.len()).filter(|&p| dot(&pts[p], l) == 0)))
        .collect();
    lines.sort();
    Ok(lines)
}

pub fn projective_plane(q: usize) -> Result<Matroid> {
    let lines = projective_plane_lines(q)?;
    steiner_matroid(q * q + q + 1, 3, &lines)
}

/// Lines of `AG(2,q)`: `PG(2,q)` with its last line and that line's points
/// removed, points relabeled in order.
pub fn affine_plane_lines(q: usize) -> Result<Vec<Set>> {
    let lines = projective_plane_lines(q)?;
    let d = q * q + q + 1;
    let infinity = *lines.last().unwrap();
    let keep = Set::full(d) - infinity;
    let mut new_of = vec![usize::MAX; d];
    for (i, p) in keep.iter().enumerate() {
        new_of[p] = i;
    }
    let mut out: Vec<Set> = lines[..lines.len() - 1]
        .iter()
        .map(|l| (*l & keep).map(&new_of))
        .collect();
    out.sort();
    Ok(out)
}

pub fn affine_plane(q: usize) -> Result<Matroid> {
    let lines = affine_plane_lines(q)?;
    steiner_matroid(q * q, 3, &lines)
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "fano", description: "Fano plane, rank 3 on 7 points" },
    CatalogEntry { name: "fanodual", description: "dual of the Fano plane, rank 4 on 7 points" },
    CatalogEntry { name: "qs", description: "quadrilateral set, rank 3 on 6 points" },
    CatalogEntry { name: "threelines", description: "three concurrent lines, rank 3 on 7 points" },
    CatalogEntry { name: "vamos", description: "Vámos matroid, rank 4 on 8 points" },
    CatalogEntry { name: "vamosa", description: "Vámos with {1,2,5,6} dependent, rank 4 on 8 points" },
    CatalogEntry { name: "steiner348", description: "S(3,4,8) paving matroid, rank 4 on 8 points" },
    CatalogEntry { name: "k33dual", description: "dual of M(K3,3), rank 4 on 9 points" },
    CatalogEntry { name: "k33", description: "graphic matroid of K3,3, rank 5 on 9 points" },
    CatalogEntry { name: "grid", description: "3x3 grid, rank 3 on 9 points" },
    CatalogEntry { name: "sixpoint", description: "rank 4 on 6 points with hyperplanes 1234, 3456, 1256" },
    CatalogEntry { name: "pg2_<q>", description: "projective plane PG(2,q), q in {2,3,4,5,7}" },
    CatalogEntry { name: "ag2_<q>", description: "affine plane AG(2,q), q in {2,3,4,5,7,8}" },
    CatalogEntry { name: "u<n>_<d>", description: "uniform matroid U_{n,d} (also u<n><d> for one-digit n)" },
];

pub fn catalog(name: &str) -> Result<Matroid> {
    let name = name.to_ascii_lowercase();
    let m = match name.as_str() {
        "fano" => fano(),
        "fanodual" | "fano_dual" => fano_dual(),
        "qs" => qs(),
        "threelines" | "three_lines" => three_concurrent_lines(),
        "vamos" => vamos(),
        "vamosa" | "vamos_a" => vamos_a(),
        "steiner348" => steiner348(),
        "k33dual" | "k33_dual" => k33_dual(),
        "k33" => graphic_k33(),
        "grid" => grid(),
        "sixpoint" | "six_point" => six_point(),
        other => return parametric(other).ok_or_else(|| Error::UnknownCatalog(name.clone()))?,
    };
    Ok(m)
}

fn parametric(name: &str) -> Option<Result<Matroid>> {
    if let Some(q) = name.strip_prefix("pg2_") {
        return Some(projective_plane(q.parse().ok()?));
    }
    if let Some(q) = name.strip_prefix("ag2_") {
        return Some(affine_plane(q.parse().ok()?));
    }
    let rest = name.strip_prefix('u')?;
    let (n, d) = match rest.split_once('_') {
        Some((n, d)) => (n.parse().ok()?, d.parse().ok()?),
        None if rest.len() >= 2 => (rest[..1].parse().ok()?, rest[1..].parse().ok()?),
        None => return None,
    };
    if n > d || d > 64 {
        return Some(Err(Error::Precondition(format!("no uniform matroid U_{{{n},{d}}}"))));
    }
    Some(Ok(Matroid::uniform(n, d)))
}
