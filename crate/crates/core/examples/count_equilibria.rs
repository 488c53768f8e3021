//! Counting unstable and stable equilibria of small polytopes.
//!
//! ```text
//! cargo run --example count_equilibria
//! ```

use monoproof::equilibria::{
    count_unstable, simplex_face_vectors, stable_equilibria, unstable_equilibria, PointConfig,
};
use monoproof::{rat, RatVector};

fn v(x: &[i64]) -> RatVector {
    RatVector::from_ints(x)
}

fn main() {
    let tetra = vec![v(&[1, 1, 1]), v(&[1, -1, -1]), v(&[-1, 1, -1]), v(&[-1, -1, 1])];
    let cfg = PointConfig::new(3, tetra.clone()).unwrap();
    println!("regular tetrahedron: U = {}", count_unstable(&cfg));

    let cube: Vec<RatVector> =
        (0..8).map(|m| v(&[(m & 1) * 2 - 1, ((m >> 1) & 1) * 2 - 1, ((m >> 2) & 1) * 2 - 1])).collect();
    println!("cube: U = {}", count_unstable(&PointConfig::new(3, cube).unwrap()));

    // An irregular tetrahedron, centred on its centroid.
    let raw = [v(&[6, 0, 0]), v(&[5, 6, 3]), v(&[1, -4, -1]), v(&[-5, -6, -4])];
    let centroid = raw.iter().fold(RatVector::zeros(3), |acc, p| &acc + p).scale(&rat(1, 4));
    let solid: Vec<RatVector> = raw.iter().map(|p| p - &centroid).collect();
    let cfg = PointConfig::new(3, solid.clone()).unwrap();
    let report = unstable_equilibria(&cfg);
    println!("irregular tetrahedron: U = {} (generic: {})", report.count, report.generic);
    for (i, r) in solid.iter().enumerate() {
        println!("  vertex {i}: |r|^2 = {}, shadow row {:?}", r.norm_sq(), report.matrix.row(i));
    }

    // Stable equilibria of the same solid, from its face vectors.
    let faces = simplex_face_vectors(&solid, &RatVector::zeros(3)).unwrap();
    let report = stable_equilibria(&faces);
    println!("irregular tetrahedron: S = {}", report.count);
    for (i, q) in faces.faces().iter().enumerate() {
        println!("  face {i}: q = {q}, equilibrium: {}", report.equilibria[i]);
    }
}
