//! The integrated volume function, the invariants read off it, and its
//! approximation by bounded masses.

use okounkov_lab::filtered::{extract_invariants, filtered_body, integrated_volume, ivf_mass_table};
use num_traits::ToPrimitive;
use okounkov_lab::geomcore::{rat, Rational};
use okounkov_lab::okounkov::{Flag, FlagKind};
use okounkov_lab::series::{complete_series, ModelVariety};

fn main() {
    let s = complete_series(&ModelVariety::p1xp1(1, 1).unwrap());
    let phi = integrated_volume(&s, 8).unwrap();
    let inv = extract_invariants(&phi, 2);
    println!("mu = {}, seshadri = {}", inv.mu, inv.seshadri);

    let body = filtered_body(&s, &Flag::standard(FlagKind::Infinitesimal, 2), 8).unwrap().body;
    println!("vol of filtered body = {}", body.volume());

    for t in [rat(1, 2), rat(1, 1), rat(3, 2)] {
        let approx: Vec<String> = ivf_mass_table(&s, &[10, 20, 40], &t)
            .unwrap()
            .into_iter()
            .map(|(m, v)| format!("m={m}: {:.5}", ratio(&v)))
            .collect();
        println!("phi({t}) = {}  {}", phi.eval(&t), approx.join("  "));
    }
}

fn ratio(v: &Rational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}
