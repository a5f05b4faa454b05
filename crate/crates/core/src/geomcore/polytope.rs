//! Bounded rational polytopes carrying both vertex and inequality descriptions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::hull::{full_dimensional_hull, primitive, Echelon, IntHull, IntPlane, I128_COORD_LIMIT};
use super::rational::{common_denominator, from_bigint, pairs_to_vec, vec_to_pairs, PairError, Rational, RationalPair};
use super::GeomError;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 4;

/// The inequality `normal · x <= offset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Self {
        Halfspace { normal, offset }
    }

    /// Value of `normal · x`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.eval(x) <= self.offset
    }

    /// Rescales to a primitive integer normal; the set described is unchanged.
    fn canonical(&self) -> Halfspace {
        let den = common_denominator(self.normal.iter());
        let mut ints: Vec<BigInt> = self
            .normal
            .iter()
            .map(|r| (r * from_bigint(den.clone())).to_integer())
            .collect();
        let g = primitive(&mut ints);
        if g.is_zero() {
            return self.clone();
        }
        let factor = from_bigint(den) / from_bigint(g);
        Halfspace {
            normal: ints.into_iter().map(from_bigint).collect(),
            offset: &self.offset * factor,
        }
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Coordinate predicate used by [`RationalPolytope::slice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SliceMode {
    /// The section `x_axis = t`, projected to the remaining coordinates.
    Equal,
    /// `x_axis >= t`.
    AtLeast,
    /// `x_axis <= t`.
    AtMost,
}

/// A bounded convex polytope in `R^dim` with consistent vertex and halfspace descriptions.
///
/// Lower-dimensional polytopes are ordinary values: `affine_dim` records the
/// dimension of their affine hull and the halfspace list contains each affine
/// equation as a pair of opposite inequalities. The empty polytope has no
/// vertices and `affine_dim == None`.
#[derive(Debug, Clone)]
pub struct RationalPolytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    halfspaces: Vec<Halfspace>,
    affine_dim: Option<usize>,
}

impl PartialEq for RationalPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for RationalPolytope {}

impl RationalPolytope {
    pub fn empty(dim: usize) -> Self {
        RationalPolytope { dim, vertices: Vec::new(), halfspaces: Vec::new(), affine_dim: None }
    }

    /// Convex hull of a finite point set in dimension 1 to 4.
    pub fn convex_hull(points: &[Vec<Rational>], dim: usize) -> Result<Self, GeomError> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(GeomError::UnsupportedDimension(dim));
        }
        if points.is_empty() {
            return Err(GeomError::EmptyPointSet);
        }
        Self::hull_any_dim(points, dim)
    }

    /// Hull including ambient dimension 0, where the only nonempty polytope is the point.
    pub(crate) fn hull_any_dim(points: &[Vec<Rational>], dim: usize) -> Result<Self, GeomError> {
        if dim > MAX_DIM {
            return Err(GeomError::UnsupportedDimension(dim));
        }
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(GeomError::DimensionMismatch { expected: dim, found: bad.len() });
        }
        let unique: BTreeSet<Vec<Rational>> = points.iter().cloned().collect();
        let pts: Vec<Vec<Rational>> = unique.into_iter().collect();
        if pts.is_empty() {
            return Ok(Self::empty(dim));
        }
        if dim == 0 {
            return Ok(RationalPolytope { dim, vertices: pts, halfspaces: Vec::new(), affine_dim: Some(0) });
        }

        let scale = common_denominator(pts.iter().flatten());
        let scaled: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|p| p.iter().map(|x| (x * from_bigint(scale.clone())).to_integer()).collect())
            .collect();

        let mut ech: Echelon<BigInt> = Echelon::new();
        for p in &scaled[1..] {
            let diff: Vec<BigInt> = p.iter().zip(&scaled[0]).map(|(a, b)| a - b).collect();
            ech.insert(diff);
            if ech.rank() == dim {
                break;
            }
        }
        let affine_dim = ech.rank();
        let pivots = ech.pivots();

        let (vertex_idx, facets) = if affine_dim == 0 {
            (vec![0], Vec::new())
        } else {
            let projected: Vec<Vec<BigInt>> = scaled
                .iter()
                .map(|p| pivots.iter().map(|&c| p[c].clone()).collect())
                .collect();
            hull_projected(&projected)
        };

        let scale_r = from_bigint(scale);
        let mut halfspaces: Vec<Halfspace> = facets
            .into_iter()
            .map(|pl| {
                let mut normal = vec![Rational::zero(); dim];
                for (k, &c) in pivots.iter().enumerate() {
                    normal[c] = from_bigint(pl.normal[k].clone());
                }
                Halfspace { normal, offset: from_bigint(pl.offset) / scale_r.clone() }
            })
            .collect();
        for n in affine_equations(&pts, dim) {
            let b = dot(&n, &pts[0]);
            halfspaces.push(Halfspace::new(n.clone(), b.clone()).canonical());
            halfspaces.push(Halfspace::new(n.iter().map(|x| -x).collect(), -b).canonical());
        }
        halfspaces.sort();
        halfspaces.dedup();

        let mut vertices: Vec<Vec<Rational>> = vertex_idx.into_iter().map(|i| pts[i].clone()).collect();
        vertices.sort();
        Ok(RationalPolytope { dim, vertices, halfspaces, affine_dim: Some(affine_dim) })
    }

    /// Polytope given by inequalities; vertices are enumerated exhaustively.
    ///
    /// The inequalities must describe a bounded set.
    pub fn from_halfspaces(dim: usize, halfspaces: &[Halfspace]) -> Result<Self, GeomError> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(GeomError::UnsupportedDimension(dim));
        }
        if let Some(h) = halfspaces.iter().find(|h| h.normal.len() != dim) {
            return Err(GeomError::DimensionMismatch { expected: dim, found: h.normal.len() });
        }
        let verts = enumerate_vertices(dim, halfspaces);
        if verts.is_empty() {
            return Ok(Self::empty(dim));
        }
        Self::hull_any_dim(&verts, dim)
    }

    /// Builds a polytope from both descriptions and checks that they agree.
    pub fn from_descriptions(
        dim: usize,
        vertices: Vec<Vec<Rational>>,
        halfspaces: Vec<Halfspace>,
    ) -> Result<Self, GeomError> {
        if vertices.is_empty() {
            return Ok(Self::empty(dim));
        }
        let from_vertices = Self::convex_hull(&vertices, dim)?;
        let mut given: Vec<Vec<Rational>> = vertices;
        given.sort();
        given.dedup();
        if given != from_vertices.vertices {
            return Err(GeomError::Inconsistent("vertex list contains non-extreme points".into()));
        }
        if !halfspaces.is_empty() {
            let from_halfspaces = Self::from_halfspaces(dim, &halfspaces)?;
            if from_halfspaces.vertices != from_vertices.vertices {
                return Err(GeomError::Inconsistent(
                    "halfspaces do not cut out the hull of the vertices".into(),
                ));
            }
        }
        Ok(from_vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Dimension of the affine hull, `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == Some(self.dim)
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        if self.is_empty() || x.len() != self.dim {
            return false;
        }
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// `P ⊆ Q`, decided by vertex membership.
    pub fn is_subset_of(&self, other: &RationalPolytope) -> bool {
        self.vertices.iter().all(|v| other.contains_point(v))
    }

    pub fn in_nonnegative_orthant(&self) -> bool {
        self.vertices.iter().flatten().all(|x| !x.is_negative())
    }

    /// Smallest and largest value of coordinate `axis` over the polytope.
    pub fn axis_range(&self, axis: usize) -> Option<(Rational, Rational)> {
        let lo = self.vertices.iter().map(|v| &v[axis]).min()?.clone();
        let hi = self.vertices.iter().map(|v| &v[axis]).max()?.clone();
        Some((lo, hi))
    }

    /// Intersection with `normal · x <= offset`.
    pub fn intersect_halfspace(&self, h: &Halfspace) -> RationalPolytope {
        if self.is_empty() {
            return self.clone();
        }
        let values: Vec<Rational> = self.vertices.iter().map(|v| h.eval(v)).collect();
        let mut points: Vec<Vec<Rational>> = Vec::new();
        for (v, val) in self.vertices.iter().zip(&values) {
            if *val <= h.offset {
                points.push(v.clone());
            }
        }
        if points.len() == self.vertices.len() {
            return self.clone();
        }
        for (i, vi) in values.iter().enumerate() {
            if *vi >= h.offset {
                continue;
            }
            for (j, vj) in values.iter().enumerate() {
                if *vj <= h.offset {
                    continue;
                }
                let lambda = (&h.offset - vi) / (vj - vi);
                let p: Vec<Rational> = self.vertices[i]
                    .iter()
                    .zip(&self.vertices[j])
                    .map(|(a, b)| a + (b - a) * &lambda)
                    .collect();
                points.push(p);
            }
        }
        if points.is_empty() {
            return Self::empty(self.dim);
        }
        Self::hull_any_dim(&points, self.dim).expect("dimension already validated")
    }

    /// Intersection with `x_axis >= t`, `x_axis <= t`, or the projected section `x_axis = t`.
    pub fn slice(&self, axis: usize, mode: SliceMode, t: &Rational) -> Result<RationalPolytope, GeomError> {
        if axis >= self.dim {
            return Err(GeomError::AxisOutOfRange { axis, dim: self.dim });
        }
        let unit = |sign: i64| -> Vec<Rational> {
            (0..self.dim)
                .map(|k| if k == axis { Rational::from_integer(sign.into()) } else { Rational::zero() })
                .collect()
        };
        let at_least = Halfspace::new(unit(-1), -t.clone());
        let at_most = Halfspace::new(unit(1), t.clone());
        Ok(match mode {
            SliceMode::AtLeast => self.intersect_halfspace(&at_least),
            SliceMode::AtMost => self.intersect_halfspace(&at_most),
            SliceMode::Equal => {
                let section = self.intersect_halfspace(&at_least).intersect_halfspace(&at_most);
                let projected: Vec<Vec<Rational>> = section
                    .vertices
                    .iter()
                    .map(|v| v.iter().enumerate().filter(|(k, _)| *k != axis).map(|(_, x)| x.clone()).collect())
                    .collect();
                Self::hull_any_dim(&projected, self.dim - 1)?
            }
        })
    }

    /// Image under `x ↦ A x` for a square matrix `A` given by rows.
    pub fn linear_image(&self, rows: &[Vec<Rational>]) -> Result<RationalPolytope, GeomError> {
        let out_dim = rows.len();
        if self.is_empty() {
            return Ok(Self::empty(out_dim));
        }
        let images: Vec<Vec<Rational>> = self.vertices.iter().map(|v| rows.iter().map(|r| dot(r, v)).collect()).collect();
        Self::hull_any_dim(&images, out_dim)
    }

    /// Vertex set recomputed from the halfspace description alone.
    pub fn vertices_from_halfspaces(&self) -> Vec<Vec<Rational>> {
        if self.dim == 0 {
            return self.vertices.clone();
        }
        let mut v = enumerate_vertices(self.dim, &self.halfspaces);
        v.sort();
        v.dedup();
        v
    }

    pub fn to_json(&self) -> Result<PolytopeJson, PairError> {
        Ok(PolytopeJson {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| vec_to_pairs(v)).collect::<Result<_, _>>()?,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| {
                    Ok(HalfspaceJson { normal: vec_to_pairs(&h.normal)?, offset: RationalPair::from_rational(&h.offset)? })
                })
                .collect::<Result<_, PairError>>()?,
        })
    }

    pub fn from_json(json: &PolytopeJson) -> Result<Self, GeomError> {
        let vertices = json.vertices.iter().map(|v| pairs_to_vec(v)).collect::<Result<Vec<_>, _>>()?;
        let halfspaces = json
            .halfspaces
            .iter()
            .map(|h| Ok(Halfspace::new(pairs_to_vec(&h.normal)?, h.offset.to_rational()?)))
            .collect::<Result<Vec<_>, PairError>>()?;
        Self::from_descriptions(json.dim, vertices, halfspaces)
    }
}

fn hull_projected(points: &[Vec<BigInt>]) -> (Vec<usize>, Vec<IntPlane<BigInt>>) {
    let small = points.iter().flatten().all(|x| x.abs() < BigInt::from(I128_COORD_LIMIT));
    if small {
        let narrow: Vec<Vec<i128>> = points.iter().map(|p| p.iter().map(|x| x.to_i128().unwrap()).collect()).collect();
        let IntHull { vertices, facets } = full_dimensional_hull(&narrow);
        let facets = facets
            .into_iter()
            .map(|f| IntPlane { normal: f.normal.into_iter().map(BigInt::from).collect(), offset: BigInt::from(f.offset) })
            .collect();
        (vertices, facets)
    } else {
        let IntHull { vertices, facets } = full_dimensional_hull(points);
        (vertices, facets)
    }
}

/// Basis of the normals to the affine hull of `pts`, as rational vectors.
fn affine_equations(pts: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    let (rref, pivots) = rref(rows, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut n = vec![Rational::zero(); dim];
            n[f] = Rational::from_integer(1.into());
            for (row, &p) in rref.iter().zip(&pivots) {
                n[p] = -row[f].clone();
            }
            n
        })
        .collect()
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|x| *x = &*x * &inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                row.iter_mut().zip(&pivot_row).for_each(|(x, y)| *x = &*x - &f * y);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Unique solution of a square system, if the matrix is nonsingular.
pub(crate) fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let aug: Vec<Vec<Rational>> = a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    let (rows, pivots) = rref(aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

fn enumerate_vertices(dim: usize, halfspaces: &[Halfspace]) -> Vec<Vec<Rational>> {
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (0..dim).collect();
    let h = halfspaces.len();
    if h < dim {
        return Vec::new();
    }
    loop {
        let a: Vec<Vec<Rational>> = idx.iter().map(|&i| halfspaces[i].normal.clone()).collect();
        let b: Vec<Rational> = idx.iter().map(|&i| halfspaces[i].offset.clone()).collect();
        if let Some(x) = solve(&a, &b) {
            if halfspaces.iter().all(|hs| hs.contains(&x)) {
                out.insert(x);
            }
        }
        // next combination
        let mut k = dim;
        loop {
            if k == 0 {
                return out.into_iter().collect();
            }
            k -= 1;
            if idx[k] < h - dim + k {
                idx[k] += 1;
                for j in k + 1..dim {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Wire form: `{"dim", "vertices": [[[num,den],...]], "halfspaces": [{"normal", "offset"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<RationalPair>>,
    pub halfspaces: Vec<HalfspaceJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfspaceJson {
    pub normal: Vec<RationalPair>,
    pub offset: RationalPair,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::rational::{int, rat};

    fn p(coords: &[(i64, i64)]) -> Vec<Rational> {
        coords.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    fn ip(coords: &[i64]) -> Vec<Rational> {
        coords.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn duplicate_removal_triangle() {
        let pts = vec![ip(&[0, 0]), ip(&[1, 0]), ip(&[1, 1]), ip(&[0, 0])];
        let poly = RationalPolytope::convex_hull(&pts, 2).unwrap();
        assert_eq!(poly.vertices(), &[ip(&[0, 0]), ip(&[1, 0]), ip(&[1, 1])]);
        assert!(poly.is_full_dimensional());
        assert_eq!(poly.halfspaces().len(), 3);
    }

    #[test]
    fn collinear_points_give_segment() {
        let pts = vec![ip(&[0, 0]), p(&[(1, 2), (1, 2)]), ip(&[1, 1])];
        let poly = RationalPolytope::convex_hull(&pts, 2).unwrap();
        assert_eq!(poly.affine_dim(), Some(1));
        assert_eq!(poly.vertices(), &[ip(&[0, 0]), ip(&[1, 1])]);
        assert!(poly.contains_point(&p(&[(1, 3), (1, 3)])));
        assert!(!poly.contains_point(&p(&[(1, 3), (1, 2)])));
        assert_eq!(poly.vertices_from_halfspaces(), poly.vertices());
    }

    #[test]
    fn half_lattice_points_of_simplex() {
        let mut pts = Vec::new();
        for a in 0..=2 {
            for b in 0..=(2 - a) {
                pts.push(p(&[(a, 2), (b, 2)]));
            }
        }
        assert_eq!(pts.len(), 6);
        let poly = RationalPolytope::convex_hull(&pts, 2).unwrap();
        assert_eq!(poly.vertices(), &[ip(&[0, 0]), ip(&[0, 1]), ip(&[1, 0])]);
    }

    #[test]
    fn input_errors() {
        assert_eq!(RationalPolytope::convex_hull(&[], 2), Err(GeomError::EmptyPointSet));
        assert_eq!(RationalPolytope::convex_hull(&[ip(&[0; 5])], 5), Err(GeomError::UnsupportedDimension(5)));
        assert_eq!(RationalPolytope::convex_hull(&[ip(&[0])], 0), Err(GeomError::UnsupportedDimension(0)));
        assert!(matches!(
            RationalPolytope::convex_hull(&[ip(&[0, 1, 2])], 2),
            Err(GeomError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn slices_of_inverted_simplex() {
        let tri = RationalPolytope::convex_hull(&[ip(&[0, 0]), ip(&[1, 0]), ip(&[1, 1])], 2).unwrap();
        let half = rat(1, 2);
        let upper = tri.slice(0, SliceMode::AtLeast, &half).unwrap();
        let expected = RationalPolytope::convex_hull(
            &[p(&[(1, 2), (0, 1)]), ip(&[1, 0]), ip(&[1, 1]), p(&[(1, 2), (1, 2)])],
            2,
        )
        .unwrap();
        assert_eq!(upper, expected);

        let section = tri.slice(0, SliceMode::Equal, &half).unwrap();
        assert_eq!(section.dim(), 1);
        assert_eq!(section.vertices(), &[ip(&[0]), p(&[(1, 2)])]);

        let beyond = tri.slice(0, SliceMode::AtLeast, &int(2)).unwrap();
        assert!(beyond.is_empty());
        assert!(tri.slice(2, SliceMode::Equal, &half).is_err());
    }

    #[test]
    fn section_of_segment_is_a_point() {
        let seg = RationalPolytope::convex_hull(&[ip(&[0]), ip(&[2])], 1).unwrap();
        let pt = seg.slice(0, SliceMode::Equal, &int(1)).unwrap();
        assert_eq!(pt.dim(), 0);
        assert_eq!(pt.vertices().len(), 1);
    }

    #[test]
    fn containment() {
        let tri = RationalPolytope::convex_hull(&[ip(&[0, 0]), ip(&[1, 0]), ip(&[0, 1])], 2).unwrap();
        assert!(tri.contains_point(&ip(&[0, 0])));
        assert!(!tri.contains_point(&ip(&[1, 1])));
        assert!(tri.contains_point(&p(&[(1, 3), (1, 3)])));
    }

    #[test]
    fn halfspace_round_trip() {
        let cube: Vec<Vec<Rational>> = (0..8).map(|b| ip(&[b & 1, (b >> 1) & 1, (b >> 2) & 1])).collect();
        let poly = RationalPolytope::convex_hull(&cube, 3).unwrap();
        assert_eq!(poly.halfspaces().len(), 6);
        let again = RationalPolytope::from_halfspaces(3, poly.halfspaces()).unwrap();
        assert_eq!(again, poly);
        assert_eq!(poly.vertices_from_halfspaces(), poly.vertices());
    }

    #[test]
    fn inconsistent_descriptions_rejected() {
        let verts = vec![ip(&[0, 0]), ip(&[1, 0]), ip(&[0, 1])];
        let wrong = vec![
            Halfspace::new(ip(&[-1, 0]), int(0)),
            Halfspace::new(ip(&[0, -1]), int(0)),
            Halfspace::new(ip(&[1, 1]), int(2)),
        ];
        assert!(RationalPolytope::from_descriptions(2, verts, wrong).is_err());
    }

    #[test]
    fn json_round_trip() {
        let tri = RationalPolytope::convex_hull(&[ip(&[0, 0]), p(&[(1, 2), (0, 1)]), ip(&[1, 1])], 2).unwrap();
        let json = serde_json::to_string(&tri.to_json().unwrap()).unwrap();
        let back: PolytopeJson = serde_json::from_str(&json).unwrap();
        assert_eq!(RationalPolytope::from_json(&back).unwrap(), tri);
        assert!(json.contains("[1,2]"));
    }
}
