//! Gauges at every torus-fixed point as evidence for ampleness.

use okounkov_lab::okounkov::ampleness_check;
use okounkov_lab::series::ModelKind;

fn main() {
    for kind in [ModelKind::Pn { n: 2, d: 1 }, ModelKind::P1xP1 { a: 2, b: 3 }] {
        let report = ampleness_check(kind, 6).unwrap();
        for p in &report.points {
            println!("{kind:?} at {:?}: xi {} xi tilde {}", p.point, p.xi, p.xi_tilde);
        }
        println!("consistent with ample: {}", report.consistent_with_ample);
    }
}
