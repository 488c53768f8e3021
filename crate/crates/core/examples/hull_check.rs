//! Which points of a configuration are vertices of its convex hull.
//!
//! ```text
//! cargo run --example hull_check
//! ```

use monoproof::equilibria::{hull_vertices, ConfigDocument, PointConfig};
use monoproof::{rat, RatVector};

fn main() {
    let pts: Vec<RatVector> = vec![
        RatVector::from_ints(&[2, 0, 0]),
        RatVector::from_ints(&[-1, 2, 0]),
        RatVector::from_ints(&[-1, -2, 0]),
        RatVector::from_ints(&[0, 0, 3]),
        RatVector::from_ints(&[0, 0, -3]),
        vec![rat(1, 3), rat(1, 7), rat(1, 2)].into(),
    ];
    let cfg = PointConfig::new(3, pts).unwrap();
    for (i, on_hull) in hull_vertices(&cfg).into_iter().enumerate() {
        println!("{}  {}", cfg.vertices()[i], if on_hull { "hull vertex" } else { "interior" });
    }
    // the same configuration in the JSON format read by `monoproof check-hull`
    println!("{}", ConfigDocument::from_points(&cfg).to_json());
}
