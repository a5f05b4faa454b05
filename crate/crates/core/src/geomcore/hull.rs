//! Integer convex-hull kernel for full-dimensional point sets in dimensions 1 to 4.
//!
//! Points arrive already scaled to a common denominator, so every predicate is
//! an exact integer dot product. The kernel is generic over the integer type:
//! `i128` for coordinates below [`I128_COORD_LIMIT`], `BigInt` otherwise.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::Signed;

/// Largest absolute coordinate for which every cofactor, dot product and offset
/// of a 4-dimensional hull fits in `i128`.
pub(crate) const I128_COORD_LIMIT: i128 = 1 << 24;

pub(crate) trait HullInt: Clone + Integer + Signed + std::hash::Hash + std::fmt::Debug {}
impl<T: Clone + Integer + Signed + std::hash::Hash + std::fmt::Debug> HullInt for T {}

/// A supporting inequality `normal · x <= offset` with a primitive normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct IntPlane<T> {
    pub normal: Vec<T>,
    pub offset: T,
}

#[derive(Debug, Clone)]
pub(crate) struct IntHull<T> {
    /// Indices of the extreme points in the input slice.
    pub vertices: Vec<usize>,
    /// Distinct facet inequalities.
    pub facets: Vec<IntPlane<T>>,
}

pub(crate) fn dot<T: HullInt>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn sub<T: HullInt>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn det<T: HullInt>(m: &[Vec<T>]) -> T {
    match m.len() {
        0 => T::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        n => {
            let mut acc = T::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<T>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].clone() * det(&minor);
                if col % 2 == 0 {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            acc
        }
    }
}

/// Divides a vector by the gcd of its entries. The zero vector is returned unchanged.
pub(crate) fn primitive<T: HullInt>(v: &mut [T]) -> T {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
    g
}

/// Normal of the hyperplane through `d` points in `R^d` (generalized cross product).
fn hyperplane_normal<T: HullInt>(pts: &[&Vec<T>]) -> Vec<T> {
    let d = pts[0].len();
    let rows: Vec<Vec<T>> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let m = det(&minor);
        normal.push(if j % 2 == 0 { m } else { -m });
    }
    primitive(&mut normal);
    normal
}

/// Fraction-free row echelon form over the integers.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<T> {
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: HullInt> Echelon<T> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(c, _)| *c).collect();
        p.sort_unstable();
        p
    }

    /// Reduces `v` against the current rows; inserts it and returns true if independent.
    pub fn insert(&mut self, mut v: Vec<T>) -> bool {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = v[*pivot].clone();
            v = v
                .iter()
                .zip(row)
                .map(|(x, r)| x.clone() * a.clone() - r.clone() * b.clone())
                .collect();
            primitive(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

struct Facet<T> {
    verts: Vec<usize>,
    plane: IntPlane<T>,
    alive: bool,
}

/// Hull of distinct points spanning `R^d`, `d = points[0].len()`, `1 <= d <= 4`.
pub(crate) fn full_dimensional_hull<T: HullInt>(points: &[Vec<T>]) -> IntHull<T> {
    let d = points[0].len();
    if d == 1 {
        let (mut lo, mut hi) = (0, 0);
        for (i, p) in points.iter().enumerate() {
            if p[0] < points[lo][0] {
                lo = i;
            }
            if p[0] > points[hi][0] {
                hi = i;
            }
        }
        let facets = vec![
            IntPlane { normal: vec![T::one()], offset: points[hi][0].clone() },
            IntPlane { normal: vec![-T::one()], offset: -points[lo][0].clone() },
        ];
        let mut vertices = vec![lo, hi];
        vertices.sort_unstable();
        vertices.dedup();
        return IntHull { vertices, facets };
    }

    // initial simplex
    let mut simplex = vec![0usize];
    let mut ech = Echelon::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        if ech.insert(sub(p, &points[0])) {
            simplex.push(i);
            if simplex.len() == d + 1 {
                break;
            }
        }
    }
    assert_eq!(simplex.len(), d + 1, "hull kernel requires a full-dimensional point set");

    // scaled interior point: (d + 1) * centroid
    let scale = T::from_usize_lossy(d + 1);
    let mut inner = vec![T::zero(); d];
    for &i in &simplex {
        for (c, x) in inner.iter_mut().zip(&points[i]) {
            *c = c.clone() + x.clone();
        }
    }

    let make_facet = |verts: Vec<usize>| -> Facet<T> {
        let pts: Vec<&Vec<T>> = verts.iter().map(|&i| &points[i]).collect();
        let mut normal = hyperplane_normal(&pts);
        let mut offset = dot(&normal, pts[0]);
        if dot(&normal, &inner) > offset.clone() * scale.clone() {
            normal.iter_mut().for_each(|x| *x = -x.clone());
            offset = -offset;
        }
        Facet { verts, plane: IntPlane { normal, offset }, alive: true }
    };

    let mut facets: Vec<Facet<T>> = (0..=d)
        .map(|skip| {
            simplex
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &i)| i)
                .collect()
        })
        .map(make_facet)
        .collect();

    let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();
    for (pi, p) in points.iter().enumerate() {
        if in_simplex.contains(&pi) {
            continue;
        }
        let visible: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.alive && dot(&f.plane.normal, p) > f.plane.offset)
            .map(|(k, _)| k)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut ridge_count: HashMap<Vec<usize>, usize> = HashMap::new();
        for &k in &visible {
            let verts = &facets[k].verts;
            for skip in 0..verts.len() {
                let mut ridge: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                ridge.sort_unstable();
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        for &k in &visible {
            facets[k].alive = false;
        }
        let mut horizon: Vec<Vec<usize>> = ridge_count
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(pi);
            facets.push(make_facet(ridge));
        }
        if facets.len() > 64 && facets.iter().filter(|f| f.alive).count() * 2 < facets.len() {
            facets.retain(|f| f.alive);
        }
    }

    let alive: Vec<&Facet<T>> = facets.iter().filter(|f| f.alive).collect();
    let planes: BTreeSet<IntPlane<T>> = alive.iter().map(|f| f.plane.clone()).collect();
    let planes: Vec<IntPlane<T>> = planes.into_iter().collect();
    let candidates: BTreeSet<usize> = alive.iter().flat_map(|f| f.verts.iter().copied()).collect();
    let vertices = candidates
        .into_iter()
        .filter(|&i| {
            let mut ech = Echelon::new();
            for pl in &planes {
                if dot(&pl.normal, &points[i]) == pl.offset && ech.insert(pl.normal.clone()) && ech.rank() == d {
                    return true;
                }
            }
            false
        })
        .collect();
    IntHull { vertices, facets: planes }
}

trait FromUsizeLossy {
    fn from_usize_lossy(n: usize) -> Self;
}

impl<T: HullInt> FromUsizeLossy for T {
    fn from_usize_lossy(n: usize) -> Self {
        let mut acc = T::zero();
        for _ in 0..n {
            acc = acc + T::one();
        }
        acc
    }
}
