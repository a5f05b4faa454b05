//! Jet separation and the resulting lower bound for the Seshadri constant.

use okounkov_lab::okounkov::{gauges, seshadri_estimate, Flag, FlagKind};
use okounkov_lab::series::{complete_series, ModelVariety};

fn main() {
    let x = ModelVariety::projective(3, 2).unwrap();
    let s = complete_series(&x);
    let est = seshadri_estimate(&s, 6).unwrap();
    for (m, sm) in &est.jets {
        println!("m = {m}: s_m = {sm}");
    }
    println!("estimate {} (stabilized: {})", est.value, est.stabilized);
    println!("xi tilde {}", gauges(&s, &Flag::standard(FlagKind::Infinitesimal, 3), 4).unwrap());
}
