//! Face geometry of 3-simplices.
//!
//! Face `i` is the face opposite vertex `i`.

use super::{EquilibriaError, FaceConfig};
use crate::ratcore::{RatVector, Rational};

fn opposite(i: usize) -> [usize; 3] {
    match i {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        _ => [0, 1, 2],
    }
}

fn check_simplex(vertices: &[RatVector]) -> Result<(), EquilibriaError> {
    if vertices.len() != 4 {
        return Err(EquilibriaError::TooFewPoints { min: 4, found: vertices.len() });
    }
    if let Some((index, p)) = vertices.iter().enumerate().find(|(_, p)| p.len() != 3) {
        return Err(EquilibriaError::WrongDimension { index, expected: 3, found: p.len() });
    }
    Ok(())
}

/// Normal of face `i` (unnormalised, arbitrary orientation) and a point on it.
fn face_normal(vertices: &[RatVector], i: usize) -> (RatVector, &RatVector) {
    let [a, b, c] = opposite(i).map(|k| &vertices[k]);
    let n = (b - a).cross(&(c - a)).expect("3-vectors");
    (n, a)
}

/// `|det(v1-v0, v2-v0, v3-v0)| / 6`.
pub fn simplex_volume(vertices: &[RatVector]) -> Result<Rational, EquilibriaError> {
    check_simplex(vertices)?;
    let (n, a) = face_normal(vertices, 0);
    let det = n.dot(&(&vertices[0] - a))?;
    Ok(det.abs() / Rational::from(6))
}

/// Face vectors `q_i = proj_i(o) - o`, one per face.
///
/// The projection divides by `|n|²` only, so the result is exact.
pub fn simplex_face_vectors(vertices: &[RatVector], o: &RatVector) -> Result<FaceConfig, EquilibriaError> {
    check_simplex(vertices)?;
    if o.len() != 3 {
        return Err(EquilibriaError::WrongDimension { index: 4, expected: 3, found: o.len() });
    }
    let mut faces = Vec::with_capacity(4);
    for i in 0..4 {
        let (n, a) = face_normal(vertices, i);
        let side_vertex = n.dot(&(&vertices[i] - a))?;
        if side_vertex.is_zero() {
            return Err(EquilibriaError::DegenerateSimplex);
        }
        let side_o = n.dot(&(o - a))?;
        if side_o.signum() != side_vertex.signum() {
            return Err(EquilibriaError::OutsideSimplex);
        }
        // o + t·n lies on the plane when t = -(o - a)·n / |n|²
        let t = -side_o / n.norm_sq();
        faces.push(n.scale(&t));
    }
    FaceConfig::new(3, faces)
}

/// Outward area vectors: normal to face `i`, length equal to its area,
/// pointing away from vertex `i`. They sum to zero.
pub fn simplex_area_vectors(vertices: &[RatVector]) -> Result<Vec<RatVector>, EquilibriaError> {
    check_simplex(vertices)?;
    let half = Rational::new(1, 2)?;
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        let (n, a) = face_normal(vertices, i);
        let side = n.dot(&(&vertices[i] - a))?;
        if side.is_zero() {
            return Err(EquilibriaError::DegenerateSimplex);
        }
        let k = if side.is_positive() { -&half } else { half.clone() };
        out.push(n.scale(&k));
    }
    Ok(out)
}

/// Projection criterion `|x_i| < |x_j| cos θ_ij` on area vectors, in the
/// root-free form `x_i·x_j - x_i·x_i > 0`.
pub fn dawson_tips(x_i: &RatVector, x_j: &RatVector) -> bool {
    let cross = x_i.dot(x_j).expect("equal dimensions");
    (cross - x_i.norm_sq()).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn v(x: &[i64]) -> RatVector {
        RatVector::from_ints(x)
    }

    fn corner() -> Vec<RatVector> {
        vec![v(&[0, 0, 0]), v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]
    }

    fn centroid(vs: &[RatVector]) -> RatVector {
        let mut c = RatVector::zeros(3);
        for p in vs {
            c = &c + p;
        }
        c.scale(&rat(1, vs.len() as i64))
    }

    #[test]
    fn regular_tetrahedron_faces() {
        let vs = vec![v(&[1, 1, 1]), v(&[1, -1, -1]), v(&[-1, 1, -1]), v(&[-1, -1, 1])];
        let q = simplex_face_vectors(&vs, &RatVector::zeros(3)).unwrap();
        for (qi, r) in q.faces().iter().zip(&vs) {
            assert_eq!(qi, &r.scale(&rat(-1, 3)));
        }
    }

    #[test]
    fn corner_faces() {
        let vs = corner();
        let q = simplex_face_vectors(&vs, &centroid(&vs)).unwrap();
        // vertex 1 = (1,0,0) is opposite the face x = 0
        assert_eq!(q.faces()[1], vec![rat(-1, 4), rat(0, 1), rat(0, 1)].into());
        let x = simplex_area_vectors(&vs).unwrap();
        assert_eq!(x[1], vec![rat(-1, 2), rat(0, 1), rat(0, 1)].into());
        let total = x.iter().fold(RatVector::zeros(3), |acc, xi| &acc + xi);
        assert!(total.is_zero());
        assert_eq!(simplex_volume(&vs).unwrap(), rat(1, 6));
    }

    #[test]
    fn degenerate_and_outside() {
        let flat = vec![v(&[0, 0, 0]), v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 0])];
        assert!(matches!(simplex_face_vectors(&flat, &v(&[0, 0, 0])), Err(EquilibriaError::DegenerateSimplex)));
        assert!(matches!(simplex_area_vectors(&flat), Err(EquilibriaError::DegenerateSimplex)));
        assert!(matches!(simplex_face_vectors(&corner(), &v(&[1, 1, 1])), Err(EquilibriaError::OutsideSimplex)));
        // on the boundary is not interior
        assert!(matches!(simplex_face_vectors(&corner(), &v(&[0, 0, 0])), Err(EquilibriaError::OutsideSimplex)));
    }

    #[test]
    fn tipping_examples() {
        let x = v(&[1, 0, 0]);
        assert!(!dawson_tips(&x, &x));
        assert!(dawson_tips(&x, &v(&[3, 0, 0])));
    }
}
