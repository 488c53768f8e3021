//! Face shadowing versus Dawson's tipping condition on a tetrahedron.
//!
//! Resting on face `i`, the solid tips over onto face `j` exactly when
//! `q_j` shadows `q_i`. Faces that tip nowhere are stable equilibria.
//!
//! ```text
//! cargo run --example dawson_tipping
//! ```

use monoproof::equilibria::{
    dawson_tips, face_shadow_sign, simplex_area_vectors, simplex_face_vectors, simplex_volume,
};
use monoproof::{rat, RatVector};

fn main() {
    let vs: Vec<RatVector> = vec![
        RatVector::from_ints(&[6, 0, 0]),
        RatVector::from_ints(&[5, 6, 3]),
        RatVector::from_ints(&[1, -4, -1]),
        RatVector::from_ints(&[-5, -6, -4]),
    ];
    let o = vs.iter().fold(RatVector::zeros(3), |acc, p| &acc + p).scale(&rat(1, 4));
    let q = simplex_face_vectors(&vs, &o).unwrap();
    let x = simplex_area_vectors(&vs).unwrap();
    println!("volume = {}", simplex_volume(&vs).unwrap());

    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let shadowed = face_shadow_sign(&q.faces()[i], &q.faces()[j]) < 0;
            let tips = dawson_tips(&x[i], &x[j]);
            println!("face {i} -> face {j}: shadowed {shadowed:5}  tips {tips:5}");
            assert_eq!(shadowed, tips);
        }
    }
}
