use proptest::prelude::*;

use okounkov_lab::geomcore::{int, rat, Halfspace, Rational, RationalPolytope, SimplexKind, SliceMode};

fn point(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d)), dim)
}

fn cloud(dim: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(point(dim), dim + 1..dim + 7)
}

fn hull(pts: &[Vec<Rational>], dim: usize) -> RationalPolytope {
    RationalPolytope::convex_hull(pts, dim).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hull_contains_inputs_and_vertices_are_inputs(pts in cloud(3)) {
        let p = hull(&pts, 3);
        for x in &pts {
            prop_assert!(p.contains_point(x));
        }
        for v in p.vertices() {
            prop_assert!(pts.contains(v));
        }
        prop_assert_eq!(RationalPolytope::convex_hull(p.vertices(), 3).unwrap(), p);
    }

    #[test]
    fn volume_is_translation_invariant(pts in cloud(3), shift in point(3)) {
        let p = hull(&pts, 3);
        let moved: Vec<Vec<Rational>> = pts.iter().map(|x| x.iter().zip(&shift).map(|(a, b)| a + b).collect()).collect();
        prop_assert_eq!(hull(&moved, 3).volume(), p.volume());
    }

    #[test]
    fn volume_scales_with_dilation(pts in cloud(2), k in 1i64..4) {
        let p = hull(&pts, 2);
        let scaled: Vec<Vec<Rational>> = pts.iter().map(|x| x.iter().map(|a| a * int(k)).collect()).collect();
        prop_assert_eq!(hull(&scaled, 2).volume(), p.volume() * int(k * k));
    }

    #[test]
    fn profile_integrates_to_volume(pts in cloud(3), axis in 0usize..3) {
        let p = hull(&pts, 3);
        let prof = p.slice_volume_profile(axis);
        prop_assert_eq!(prof.integral(), p.volume());
        prop_assert!(prof.is_continuous() || !p.is_full_dimensional());
    }

    #[test]
    fn slices_split_the_polytope(pts in cloud(3), t in (-5i64..=5, 1i64..=3)) {
        let p = hull(&pts, 3);
        let t = rat(t.0, t.1);
        let lo = p.slice(0, SliceMode::AtMost, &t).unwrap();
        let hi = p.slice(0, SliceMode::AtLeast, &t).unwrap();
        prop_assert_eq!(lo.volume() + hi.volume(), p.volume());
        prop_assert!(lo.is_subset_of(&p) && hi.is_subset_of(&p));
        let eq = p.slice(0, SliceMode::Equal, &t).unwrap();
        prop_assert_eq!(eq.volume(), p.slice_volume_profile(0).eval(&t));
    }

    #[test]
    fn halfspace_intersection_is_contained(pts in cloud(2), normal in point(2), offset in (-5i64..=5)) {
        let p = hull(&pts, 2);
        let h = Halfspace::new(normal, int(offset));
        let q = p.intersect_halfspace(&h);
        prop_assert!(q.is_subset_of(&p));
        for v in q.vertices() {
            prop_assert!(h.contains(v));
        }
    }

    #[test]
    fn json_roundtrip(pts in cloud(3)) {
        let p = hull(&pts, 3);
        let back = RationalPolytope::from_json(&p.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn gauge_simplex_is_contained(pts in cloud(2)) {
        let mut with_origin = pts.clone();
        with_origin.push(vec![int(0), int(0)]);
        let p = hull(&with_origin, 2);
        for kind in [SimplexKind::Standard, SimplexKind::Inverted] {
            let g = p.simplex_gauge(kind);
            prop_assert!(kind.simplex(2, &g).is_subset_of(&p));
            let bigger = &g + rat(1, 1000);
            prop_assert!(!kind.simplex(2, &bigger).is_subset_of(&p));
        }
    }
}
