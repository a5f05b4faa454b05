use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geomcore::{int, Halfspace, Rational, RationalPolytope};

use super::SeriesError;

/// Exponent vector of a monomial in the homogeneous coordinates of a model.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVec(pub Vec<u32>);

impl ExponentVec {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Exponents of the product of two monomials.
    pub fn add(&self, other: &ExponentVec) -> ExponentVec {
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Projective space `P^n` with `O(d)`, or `P^1 x P^1` with `O(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ModelKind {
    Pn { n: usize, d: u32 },
    P1xP1 { a: u32, b: u32 },
}

/// A model variety with a divisor and a torus-fixed basepoint.
///
/// The basepoint is recorded by the homogeneous coordinates that do not vanish
/// there: one index for `P^n`, one per factor for `P^1 x P^1` (numbered
/// `x0, x1, y0, y1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelVariety {
    kind: ModelKind,
    nonvanishing: Vec<usize>,
}

impl ModelVariety {
    /// The model at its first torus-fixed point (`[1:0:…:0]`, resp. `([1:0],[1:0])`).
    pub fn new(kind: ModelKind) -> Result<Self, SeriesError> {
        let base = match kind {
            ModelKind::Pn { .. } => vec![0],
            ModelKind::P1xP1 { .. } => vec![0, 2],
        };
        Self::with_nonvanishing(kind, base)
    }

    pub fn projective(n: usize, d: u32) -> Result<Self, SeriesError> {
        Self::new(ModelKind::Pn { n, d })
    }

    pub fn p1xp1(a: u32, b: u32) -> Result<Self, SeriesError> {
        Self::new(ModelKind::P1xP1 { a, b })
    }

    /// The model at the point given by a 0/1 pattern over the homogeneous coordinates.
    pub fn at_point(kind: ModelKind, pattern: &[u32]) -> Result<Self, SeriesError> {
        let coords = num_coords(kind);
        if pattern.len() != coords {
            return Err(SeriesError::InvalidPoint(format!(
                "expected {coords} coordinates, got {}",
                pattern.len()
            )));
        }
        let nonzero: Vec<usize> = pattern.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect();
        let fixed = match kind {
            ModelKind::Pn { .. } => nonzero.len() == 1,
            ModelKind::P1xP1 { .. } => {
                nonzero.len() == 2 && nonzero[0] < 2 && nonzero[1] >= 2
            }
        };
        if !fixed {
            return Err(SeriesError::NotTorusFixed(format!("{pattern:?}")));
        }
        Self::with_nonvanishing(kind, nonzero)
    }

    fn with_nonvanishing(kind: ModelKind, nonvanishing: Vec<usize>) -> Result<Self, SeriesError> {
        match kind {
            ModelKind::Pn { n, d } => {
                if !(2..=3).contains(&n) {
                    return Err(SeriesError::InvalidModel(format!("P^{n} is not supported; n must be 2 or 3")));
                }
                if d == 0 {
                    return Err(SeriesError::InvalidModel("O(0) is not big; d must be at least 1".into()));
                }
            }
            ModelKind::P1xP1 { a, b } => {
                if a == 0 || b == 0 {
                    return Err(SeriesError::InvalidModel(format!(
                        "O({a},{b}) is not big; both degrees must be at least 1"
                    )));
                }
            }
        }
        Ok(ModelVariety { kind, nonvanishing })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Dimension `n` of the variety.
    pub fn dim(&self) -> usize {
        match self.kind {
            ModelKind::Pn { n, .. } => n,
            ModelKind::P1xP1 { .. } => 2,
        }
    }

    pub fn num_coords(&self) -> usize {
        num_coords(self.kind)
    }

    /// The 0/1 pattern of the basepoint.
    pub fn point_pattern(&self) -> Vec<u32> {
        (0..self.num_coords()).map(|i| u32::from(self.nonvanishing.contains(&i))).collect()
    }

    /// The same model at each of its torus-fixed points.
    pub fn torus_fixed_points(&self) -> Vec<ModelVariety> {
        let points: Vec<Vec<usize>> = match self.kind {
            ModelKind::Pn { n, .. } => (0..=n).map(|k| vec![k]).collect(),
            ModelKind::P1xP1 { .. } => vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
        };
        points.into_iter().map(|nonvanishing| ModelVariety { kind: self.kind, nonvanishing }).collect()
    }

    /// The divisor multiplied by `k`, same basepoint.
    pub fn scaled(&self, k: u32) -> ModelVariety {
        let kind = match self.kind {
            ModelKind::Pn { n, d } => ModelKind::Pn { n, d: d * k },
            ModelKind::P1xP1 { a, b } => ModelKind::P1xP1 { a: a * k, b: b * k },
        };
        ModelVariety { kind, nonvanishing: self.nonvanishing.clone() }
    }

    /// Indices of the homogeneous coordinates that serve as local coordinates at the basepoint.
    pub fn local_coordinates(&self) -> Vec<usize> {
        match self.kind {
            ModelKind::Pn { n, .. } => (0..=n).filter(|i| !self.nonvanishing.contains(i)).collect(),
            ModelKind::P1xP1 { .. } => vec![1 - self.nonvanishing[0], 5 - self.nonvanishing[1]],
        }
    }

    /// Exponents of a monomial in the local coordinates at the basepoint.
    pub fn local_exponents(&self, e: &ExponentVec) -> Vec<u32> {
        self.local_coordinates().into_iter().map(|i| e.0[i]).collect()
    }

    /// Whether `e` has the multidegree of the degree-`m` graded piece.
    pub fn has_degree(&self, e: &ExponentVec, m: u32) -> bool {
        if e.0.len() != self.num_coords() {
            return false;
        }
        match self.kind {
            ModelKind::Pn { d, .. } => e.0.iter().sum::<u32>() == m * d,
            ModelKind::P1xP1 { a, b } => e.0[0] + e.0[1] == m * a && e.0[2] + e.0[3] == m * b,
        }
    }

    /// Every monomial of the degree-`m` piece of the complete series, sorted.
    pub fn monomials(&self, m: u32) -> Vec<ExponentVec> {
        let mut out = match self.kind {
            ModelKind::Pn { n, d } => compositions(m * d, n + 1).into_iter().map(ExponentVec).collect::<Vec<_>>(),
            ModelKind::P1xP1 { a, b } => {
                let mut v = Vec::new();
                for i in 0..=m * a {
                    for j in 0..=m * b {
                        v.push(ExponentVec(vec![m * a - i, i, m * b - j, j]));
                    }
                }
                v
            }
        };
        out.sort();
        out
    }

    /// Limit of the normalized local exponents of the complete series: `d` times the
    /// unit simplex for `P^n`, the box `[0,a] x [0,b]` for `P^1 x P^1`.
    pub fn local_newton_polytope(&self) -> RationalPolytope {
        let n = self.dim();
        let hs = match self.kind {
            ModelKind::Pn { d, .. } => {
                let mut hs: Vec<Halfspace> = (0..n).map(|i| Halfspace::new(unit(n, i, -1), int(0))).collect();
                hs.push(Halfspace::new(vec![int(1); n], int(d as i64)));
                hs
            }
            ModelKind::P1xP1 { a, b } => vec![
                Halfspace::new(unit(2, 0, -1), int(0)),
                Halfspace::new(unit(2, 1, -1), int(0)),
                Halfspace::new(unit(2, 0, 1), int(a as i64)),
                Halfspace::new(unit(2, 1, 1), int(b as i64)),
            ],
        };
        RationalPolytope::from_halfspaces(n, &hs).expect("model polytopes are bounded")
    }
}

fn unit(n: usize, i: usize, sign: i64) -> Vec<Rational> {
    (0..n).map(|k| if k == i { int(sign) } else { int(0) }).collect()
}

fn num_coords(kind: ModelKind) -> usize {
    match kind {
        ModelKind::Pn { n, .. } => n + 1,
        ModelKind::P1xP1 { .. } => 4,
    }
}

/// Ordered ways of writing `total` as a sum of `parts` nonnegative integers.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl fmt::Display for ModelVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ModelKind::Pn { n, d } => write!(f, "P^{n}, O({d}) at {:?}", self.point_pattern()),
            ModelKind::P1xP1 { a, b } => write!(f, "P1xP1, O({a},{b}) at {:?}", self.point_pattern()),
        }
    }
}
