//! Convex hull, exact volume and a round trip through the JSON wire format.

use okounkov_lab::geomcore::{int, rat, RationalPolytope};

fn main() {
    let pts = vec![
        vec![int(0), int(0), int(0)],
        vec![int(2), int(0), int(0)],
        vec![int(0), int(2), int(0)],
        vec![int(0), int(0), int(2)],
        vec![rat(1, 2), rat(1, 2), rat(1, 2)],
    ];
    let p = RationalPolytope::convex_hull(&pts, 3).unwrap();
    println!("vertices: {}", p.vertices().len());
    println!("volume:   {}", p.volume());
    let json = p.to_json().unwrap();
    println!("{}", serde_json::to_string(&json).unwrap());
    assert_eq!(RationalPolytope::from_json(&json).unwrap(), p);
}
