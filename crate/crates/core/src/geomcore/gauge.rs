//! Largest standard or inverted standard simplex inside a polytope.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::polytope::RationalPolytope;
use super::rational::Rational;

/// Probe simplex shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimplexKind {
    /// `hull(0, ξe_1, …, ξe_n)`.
    Standard,
    /// `hull(0, ξe_1, ξ(e_1+e_2), …, ξ(e_1+e_n))`.
    Inverted,
}

impl SimplexKind {
    /// Non-origin vertices of the simplex of size 1 in `R^n`.
    pub fn unit_vertices(self, n: usize) -> Vec<Vec<Rational>> {
        let unit = |i: usize| -> Vec<Rational> {
            (0..n).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }).collect()
        };
        match self {
            SimplexKind::Standard => (0..n).map(unit).collect(),
            SimplexKind::Inverted => {
                let mut out = vec![unit(0)];
                for i in 1..n {
                    let mut v = unit(0);
                    v[i] = Rational::from_integer(1.into());
                    out.push(v);
                }
                out
            }
        }
    }

    /// The simplex of size `size` in `R^n`.
    pub fn simplex(self, n: usize, size: &Rational) -> RationalPolytope {
        let mut pts = vec![vec![Rational::zero(); n]];
        pts.extend(self.unit_vertices(n).into_iter().map(|v| v.into_iter().map(|x| x * size).collect()));
        RationalPolytope::hull_any_dim(&pts, n).expect("dimension in range")
    }
}

impl RationalPolytope {
    /// Largest `ξ >= 0` such that the simplex of size `ξ` lies in the polytope.
    ///
    /// The simplex is contained iff each of its vertices is, so the answer is a
    /// minimum of `offset / (normal · w)` over halfspaces and probe vertices `w`.
    /// Zero when the origin is outside.
    pub fn simplex_gauge(&self, kind: SimplexKind) -> Rational {
        let origin = vec![Rational::zero(); self.dim()];
        if !self.contains_point(&origin) {
            return Rational::zero();
        }
        let probes = kind.unit_vertices(self.dim());
        let mut best: Option<Rational> = None;
        for h in self.halfspaces() {
            for w in &probes {
                let rate = h.eval(w);
                if rate.is_positive() {
                    let bound = &h.offset / rate;
                    if best.as_ref().map_or(true, |b| &bound < b) {
                        best = Some(bound);
                    }
                }
            }
        }
        best.unwrap_or_else(Rational::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::rational::int;

    fn hull(pts: &[&[i64]]) -> RationalPolytope {
        let v: Vec<Vec<Rational>> = pts.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect();
        RationalPolytope::convex_hull(&v, v[0].len()).unwrap()
    }

    #[test]
    fn standard_triangle() {
        let p = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(p.simplex_gauge(SimplexKind::Standard), int(1));
    }

    #[test]
    fn inverted_triangle() {
        let p = hull(&[&[0, 0], &[1, 0], &[1, 1]]);
        assert_eq!(p.simplex_gauge(SimplexKind::Inverted), int(1));
        // (0, ξ) leaves P for every ξ > 0
        assert_eq!(p.simplex_gauge(SimplexKind::Standard), int(0));
    }

    #[test]
    fn origin_outside_gives_zero() {
        let p = hull(&[&[1, 0], &[2, 0], &[2, 1]]);
        assert_eq!(p.simplex_gauge(SimplexKind::Inverted), int(0));
    }

    #[test]
    fn simplex_of_given_size_has_that_gauge() {
        for kind in [SimplexKind::Standard, SimplexKind::Inverted] {
            for n in 1..=4 {
                let s = kind.simplex(n, &int(3));
                assert_eq!(s.simplex_gauge(kind), int(3), "{kind:?} n={n}");
            }
        }
    }
}
