//! Exact volumes and slice-volume profiles.

use num_traits::{One, Signed, Zero};

use super::piecewise::{PiecewisePolynomial, Polynomial};
use super::polytope::{RationalPolytope, SliceMode};
use super::rational::Rational;

impl RationalPolytope {
    /// Lebesgue volume in the ambient dimension; zero for lower-dimensional polytopes.
    ///
    /// A nonempty 0-dimensional polytope (a point in `R^0`) has volume 1, so that
    /// slice profiles of segments integrate to their length.
    pub fn volume(&self) -> Rational {
        if self.is_empty() || !self.is_full_dimensional() {
            return Rational::zero();
        }
        let d = self.dim();
        if d == 0 {
            return Rational::one();
        }
        if d == 1 {
            let (lo, hi) = self.axis_range(0).expect("nonempty");
            return hi - lo;
        }
        // Fan from a reference vertex: pyramids over the facets not containing it.
        let apex = &self.vertices()[0];
        let mut total = Rational::zero();
        for h in self.halfspaces() {
            let height = &h.offset - h.eval(apex);
            if height.is_zero() {
                continue;
            }
            let j = h.normal.iter().position(|x| !x.is_zero()).expect("nonzero normal");
            let facet: Vec<Vec<Rational>> = self
                .vertices()
                .iter()
                .filter(|v| h.eval(v) == h.offset)
                .map(|v| v.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let shadow = RationalPolytope::hull_any_dim(&facet, d - 1).expect("dimension in range");
            total += height * shadow.volume() / (h.normal[j].abs() * Rational::from_integer(d.into()));
        }
        total
    }

    /// The function `u ↦ vol_{d-1}(slice(P, axis, Equal, u))` as an exact piecewise polynomial.
    ///
    /// Breakpoints are the distinct `axis` coordinates of the vertices. On each
    /// interval the slice volume is a polynomial of degree at most `d - 1`, so
    /// it is recovered exactly by interpolating `d` interior samples.
    pub fn slice_volume_profile(&self, axis: usize) -> PiecewisePolynomial {
        assert!(axis < self.dim(), "axis {axis} out of range for dimension {}", self.dim());
        let mut breaks: Vec<Rational> = self.vertices().iter().map(|v| v[axis].clone()).collect();
        breaks.sort();
        breaks.dedup();
        if breaks.is_empty() {
            return PiecewisePolynomial::zero_profile();
        }
        let d = self.dim();
        let samples = d as i64;
        let pieces: Vec<Polynomial> = breaks
            .windows(2)
            .map(|w| {
                let (a, b) = (&w[0], &w[1]);
                let nodes: Vec<(Rational, Rational)> = (1..=samples)
                    .map(|k| {
                        let u = a + (b - a) * Rational::new(k.into(), (samples + 1).into());
                        let section = self.slice(axis, SliceMode::Equal, &u).expect("axis checked");
                        (u, section.volume())
                    })
                    .collect();
                Polynomial::interpolate(&nodes)
            })
            .collect();
        PiecewisePolynomial::new(breaks, pieces, Rational::zero(), Rational::zero())
            .expect("vertex coordinates are strictly increasing after dedup")
            .merge_identical_pieces()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::rational::{int, rat};

    fn ip(coords: &[i64]) -> Vec<Rational> {
        coords.iter().map(|&n| int(n)).collect()
    }

    fn hull(pts: &[&[i64]], dim: usize) -> RationalPolytope {
        let v: Vec<Vec<Rational>> = pts.iter().map(|p| ip(p)).collect();
        RationalPolytope::convex_hull(&v, dim).unwrap()
    }

    #[test]
    fn unit_square_and_inverted_simplex() {
        assert_eq!(hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2).volume(), int(1));
        assert_eq!(hull(&[&[0, 0], &[1, 0], &[1, 1]], 2).volume(), rat(1, 2));
    }

    #[test]
    fn standard_simplex_volume_scales_cubically() {
        for size in 1..=4 {
            let s = hull(&[&[0, 0, 0], &[size, 0, 0], &[0, size, 0], &[0, 0, size]], 3);
            assert_eq!(s.volume(), rat(size * size * size, 6));
        }
        let s4 = hull(&[&[0, 0, 0, 0], &[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]], 4);
        assert_eq!(s4.volume(), rat(16, 24));
    }

    #[test]
    fn lower_dimensional_volume_is_zero() {
        assert_eq!(hull(&[&[0, 0], &[1, 1], &[2, 2]], 2).volume(), int(0));
        assert_eq!(RationalPolytope::empty(3).volume(), int(0));
    }

    #[test]
    fn cube_profile_is_constant() {
        let cube: Vec<Vec<i64>> = (0..8).map(|b| vec![b & 1, (b >> 1) & 1, (b >> 2) & 1]).collect();
        let refs: Vec<&[i64]> = cube.iter().map(|v| v.as_slice()).collect();
        let c = hull(&refs, 3);
        for axis in 0..3 {
            let prof = c.slice_volume_profile(axis);
            assert_eq!(prof.breakpoints(), &[int(0), int(1)]);
            assert_eq!(prof.pieces()[0], Polynomial::constant(int(1)));
        }
    }

    #[test]
    fn inverted_simplex_profile_is_linear() {
        let tri = hull(&[&[0, 0], &[1, 0], &[1, 1]], 2);
        let prof = tri.slice_volume_profile(0);
        assert_eq!(prof.pieces(), &[Polynomial::new(vec![int(0), int(1)])]);
        assert_eq!(prof.integral(), tri.volume());
    }

    #[test]
    fn perpendicular_flat_polytope_profile_is_empty() {
        let seg = hull(&[&[1, 0], &[1, 3]], 2);
        let prof = seg.slice_volume_profile(0);
        assert!(prof.pieces().is_empty());
        assert_eq!(prof.integral(), int(0));
    }
}
