//! Okounkov bodies for coordinate and infinitesimal flags, and their simplex gauges.

use okounkov_lab::okounkov::{gauges, nakayama_mu, okounkov_body, Flag, FlagKind};
use okounkov_lab::series::{complete_series, ModelVariety};

fn main() {
    let x = ModelVariety::p1xp1(2, 1).unwrap();
    let s = complete_series(&x);
    for kind in [FlagKind::Coordinate, FlagKind::Infinitesimal] {
        let flag = Flag::standard(kind, 2);
        let report = okounkov_body(&s, &flag, 8).unwrap();
        let verts: Vec<Vec<String>> =
            report.body.vertices().iter().map(|v| v.iter().map(|c| c.to_string()).collect()).collect();
        println!("{kind:?}: vertices {verts:?} volume {}", report.body.volume());
        println!("  gauge {}", gauges(&s, &flag, 8).unwrap());
    }
    println!("mu = {}", nakayama_mu(&s, 8).unwrap());
}
