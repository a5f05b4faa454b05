//! Slices along an axis and the piecewise-polynomial profile of their volumes.

use okounkov_lab::geomcore::{int, rat, RationalPolytope, SliceMode};

fn main() {
    let square = vec![vec![int(0), int(0)], vec![int(2), int(0)], vec![int(0), int(1)], vec![int(2), int(1)]];
    let tri = vec![vec![int(3), int(0)]];
    let pts: Vec<_> = square.into_iter().chain(tri).collect();
    let p = RationalPolytope::convex_hull(&pts, 2).unwrap();

    let profile = p.slice_volume_profile(0);
    for (a, b, poly) in profile.intervals() {
        println!("[{a}, {b}]: {:?}", poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    println!("integral {} = volume {}", profile.integral(), p.volume());

    let t = rat(5, 2);
    let right = p.slice(0, SliceMode::AtLeast, &t).unwrap();
    println!("area with x >= {t}: {}", right.volume());
}
