//! Monomial series on toric models and the order-of-vanishing filtration.

use okounkov_lab::geomcore::int;
use okounkov_lab::series::{complete_series, dimension, filtration_level, subseries_vt, vanishing_subseries, veronese_series, ModelVariety};

fn main() {
    let p2 = ModelVariety::projective(2, 1).unwrap();
    let s = complete_series(&p2);
    for m in 1..=4 {
        let levels: Vec<usize> = (0..=m).map(|k| filtration_level(&s, m, &int(k as i64)).len()).collect();
        println!("m = {m}: dim {} levels {levels:?}", dimension(&s, m));
    }

    let v = vanishing_subseries(&p2);
    println!("vanishing at x: dim V_3 = {}", dimension(&v, 3));

    let half = subseries_vt(&s, &okounkov_lab::geomcore::rat(1, 2)).unwrap();
    println!("V^(1/2): dim V_4 = {}", dimension(&half, 4));

    let ver = veronese_series(&s, 2).unwrap();
    println!("second Veronese: dim V_1 = {}", dimension(&ver, 1));
    assert_eq!(ver.audit(4), Ok(()));
}
