//! Jumping numbers and bounded mass, by the closed formula and by integration.

use okounkov_lab::filtered::{jumping_profile, mass_plus, MassMethod};
use okounkov_lab::geomcore::rat;
use okounkov_lab::series::{complete_series, ModelVariety};

fn main() {
    let s = complete_series(&ModelVariety::projective(2, 1).unwrap());
    let profile = jumping_profile(&s, 3).unwrap();
    let e: Vec<String> = profile.e.iter().map(|x| x.to_string()).collect();
    println!("e = {e:?}");
    println!("beta = {:?}", profile.beta);
    for k in 0..=8 {
        let t = rat(k, 2);
        let closed = mass_plus(&profile, &t, MassMethod::Closed).unwrap();
        let integral = mass_plus(&profile, &t, MassMethod::Integral).unwrap();
        assert_eq!(closed, integral);
        println!("mass+(t = {t}) = {closed}");
    }
}
