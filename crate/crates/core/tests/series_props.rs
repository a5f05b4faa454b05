use proptest::prelude::*;

use okounkov_lab::geomcore::{int, rat};
use okounkov_lab::okounkov::nakayama_mu;
use okounkov_lab::series::{
    complete_series, dimension, filtration_level, subseries_vt, vanishing_subseries, veronese_series, ModelKind,
    ModelVariety, MonomialSeries,
};

fn model() -> impl Strategy<Value = ModelVariety> {
    prop_oneof![
        (2usize..=3, 1u32..=2).prop_map(|(n, d)| ModelKind::Pn { n, d }),
        (1u32..=2, 1u32..=2).prop_map(|(a, b)| ModelKind::P1xP1 { a, b }),
    ]
    .prop_flat_map(|kind| {
        let points = ModelVariety::new(kind).unwrap().torus_fixed_points();
        (0..points.len()).prop_map(move |i| points[i].clone())
    })
}

fn series() -> impl Strategy<Value = MonomialSeries> {
    (model(), 0usize..4, (0i64..=6, 1i64..=4)).prop_map(|(x, which, (n, d))| match which {
        0 => complete_series(&x),
        1 => vanishing_subseries(&x),
        2 => subseries_vt(&complete_series(&x), &rat(n, d)).unwrap(),
        _ => veronese_series(&vanishing_subseries(&x), 1).unwrap(),
    })
}

#[test]
fn p2_filtration_dimensions() {
    let s = complete_series(&ModelVariety::projective(2, 1).unwrap());
    for m in 1..=8i64 {
        for k in 0..=m {
            let expected = (m + 2) * (m + 1) / 2 - k * (k + 1) / 2;
            assert_eq!(filtration_level(&s, m as u32, &int(k)).len() as i64, expected);
        }
    }
}

#[test]
fn complete_p1xp1_dimensions() {
    let s = complete_series(&ModelVariety::p1xp1(1, 1).unwrap());
    for m in 1..=6u32 {
        assert_eq!(dimension(&s, m), ((m + 1) * (m + 1)) as usize);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_are_multiplicative(s in series()) {
        prop_assert_eq!(s.audit(5), Ok(()));
    }

    #[test]
    fn filtration_is_nonincreasing(s in series(), m in 1u32..=5) {
        let dims: Vec<usize> = (0..=12).map(|k| filtration_level(&s, m, &rat(k, 2)).len()).collect();
        prop_assert_eq!(dims[0], dimension(&s, m));
        prop_assert!(dims.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn level_series_empty_above_mu(s in series(), extra in (1i64..=4, 1i64..=4)) {
        if let Ok(mu) = nakayama_mu(&s, 4) {
            let t = mu + rat(extra.0, extra.1);
            let above = subseries_vt(&s, &t).unwrap();
            for m in 1..=5 {
                prop_assert!(above.degree(m).is_empty());
            }
        }
    }

    #[test]
    fn degrees_stay_in_complete_series(s in series(), m in 1u32..=4) {
        let all = s.model().monomials(m);
        for e in s.degree(m) {
            prop_assert!(all.binary_search(&e).is_ok());
        }
    }
}
