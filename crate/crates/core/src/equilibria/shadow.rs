use serde::Serialize;

use super::{FaceConfig, PointConfig};
use crate::ratcore::RatVector;

/// Sign of `(r_i - r_j)·r_i`. `-1` means `p_i` lies in the shadow of `p_j`.
///
/// Panics if the vectors have different lengths.
pub fn shadow_sign(r_i: &RatVector, r_j: &RatVector) -> i8 {
    let diff = r_i - r_j;
    diff.dot(r_i).expect("equal dimensions").signum()
}

/// Sign of `(q_j - q_i)·q_j`. `-1` means face `i` lies in the shadow of
/// face `j` (a body resting on face `i` tips towards face `j`).
pub fn face_shadow_sign(q_i: &RatVector, q_j: &RatVector) -> i8 {
    let diff = q_j - q_i;
    diff.dot(q_j).expect("equal dimensions").signum()
}

/// Square matrix of shadowing signs with a zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShadowMatrix {
    n: usize,
    signs: Vec<i8>,
}

impl ShadowMatrix {
    fn build(n: usize, sign: impl Fn(usize, usize) -> i8) -> Self {
        let mut signs = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    signs[i * n + j] = sign(i, j);
                }
            }
        }
        ShadowMatrix { n, signs }
    }

    /// Vertex shadowing matrix of an arbitrary point list (no minimum size).
    pub fn for_vertices(points: &[RatVector]) -> Self {
        Self::build(points.len(), |i, j| shadow_sign(&points[i], &points[j]))
    }

    /// Face shadowing matrix of an arbitrary face-vector list.
    pub fn for_faces(faces: &[RatVector]) -> Self {
        Self::build(faces.len(), |i, j| face_shadow_sign(&faces[i], &faces[j]))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.signs[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.signs[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.row(i).iter().map(|&s| i64::from(s)).sum()
    }

    /// Row contribution `⌊1/2 + Σ_j s_ij / (2(n-1))⌋`, evaluated over the
    /// integers as `⌊(n-1 + Σ_j s_ij) / (2(n-1))⌋`. It is 1 exactly when
    /// every off-diagonal entry of the row is `+1`.
    pub fn row_indicator(&self, i: usize) -> usize {
        let m = self.n as i64 - 1;
        if m <= 0 {
            return 0;
        }
        (m + self.row_sum(i)).div_euclid(2 * m) as usize
    }

    pub fn count_full_rows(&self) -> usize {
        (0..self.n).map(|i| self.row_indicator(i)).sum()
    }
}

pub fn vertex_shadow_matrix(cfg: &PointConfig) -> ShadowMatrix {
    ShadowMatrix::for_vertices(cfg.vertices())
}

pub fn face_shadow_matrix(cfg: &FaceConfig) -> ShadowMatrix {
    ShadowMatrix::for_faces(cfg.faces())
}

/// Number of unstable equilibria `U` (vertices no other vertex shadows).
///
/// A zero sign (degenerate contact) keeps the row sum below `V-1`, so a
/// degenerate vertex is not counted.
pub fn count_unstable(cfg: &PointConfig) -> usize {
    vertex_shadow_matrix(cfg).count_full_rows()
}

/// Number of stable equilibria `S` (faces no other face shadows).
pub fn count_stable(cfg: &FaceConfig) -> usize {
    face_shadow_matrix(cfg).count_full_rows()
}

/// Count plus per-element listing, with the genericity warning flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquilibriumReport {
    pub count: usize,
    pub equilibria: Vec<bool>,
    /// `false` when two norms coincide; the count is still evaluated.
    pub generic: bool,
    pub matrix: ShadowMatrix,
}

impl EquilibriumReport {
    fn from_matrix(matrix: ShadowMatrix, generic: bool) -> Self {
        let equilibria: Vec<bool> = (0..matrix.len()).map(|i| matrix.row_indicator(i) == 1).collect();
        EquilibriumReport { count: equilibria.iter().filter(|&&e| e).count(), equilibria, generic, matrix }
    }
}

pub fn unstable_equilibria(cfg: &PointConfig) -> EquilibriumReport {
    EquilibriumReport::from_matrix(vertex_shadow_matrix(cfg), cfg.is_generic())
}

pub fn stable_equilibria(cfg: &FaceConfig) -> EquilibriumReport {
    EquilibriumReport::from_matrix(face_shadow_matrix(cfg), cfg.is_generic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn v(x: &[i64]) -> RatVector {
        RatVector::from_ints(x)
    }

    fn regular_tetrahedron() -> Vec<RatVector> {
        vec![v(&[1, 1, 1]), v(&[1, -1, -1]), v(&[-1, 1, -1]), v(&[-1, -1, 1])]
    }

    fn cube() -> Vec<RatVector> {
        (0..8).map(|m| v(&[(m & 1) * 2 - 1, ((m >> 1) & 1) * 2 - 1, ((m >> 2) & 1) * 2 - 1])).collect()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(shadow_sign(&v(&[1, 0, 0]), &v(&[0, 1, 0])), 1);
        let half: RatVector = vec![rat(1, 2), rat(0, 1), rat(0, 1)].into();
        assert_eq!(shadow_sign(&half, &v(&[1, 0, 0])), -1);
        assert_eq!(shadow_sign(&half, &half), 0);
    }

    #[test]
    fn tetrahedron_matrix_all_positive() {
        let s = ShadowMatrix::for_vertices(&regular_tetrahedron());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(s.get(i, j), if i == j { 0 } else { 1 });
            }
        }
        let cfg = PointConfig::new(3, regular_tetrahedron()).unwrap();
        assert_eq!(count_unstable(&cfg), 4);
    }

    #[test]
    fn antipodal_pair() {
        let s = ShadowMatrix::for_vertices(&[v(&[1, 0, 0]), v(&[-1, 0, 0])]);
        assert_eq!((s.get(0, 1), s.get(1, 0)), (1, 1));
        assert_eq!(s.count_full_rows(), 2);
    }

    #[test]
    fn collinear_triple() {
        let pts: Vec<RatVector> = vec![
            v(&[1, 0, 0]),
            vec![rat(1, 2), rat(0, 1), rat(0, 1)].into(),
            vec![rat(-3, 2), rat(0, 1), rat(0, 1)].into(),
        ];
        let s = ShadowMatrix::for_vertices(&pts);
        // 1-based (2,1), (1,2), (3,1)
        assert_eq!(s.get(1, 0), -1);
        assert_eq!(s.get(0, 1), 1);
        assert_eq!(s.get(2, 0), 1);
    }

    #[test]
    fn cube_has_eight() {
        let cfg = PointConfig::new(3, cube()).unwrap();
        let report = unstable_equilibria(&cfg);
        assert_eq!(report.count, 8);
        assert!(!report.generic);
    }

    #[test]
    fn degenerate_zero_sign_not_counted() {
        // p_2 sits exactly on the support plane of p_1: (r_1 - r_2)·r_1 = 0
        let pts = vec![v(&[2, 0, 0]), v(&[2, 1, 0]), v(&[-2, 0, 1]), v(&[-2, -1, -1])];
        let s = ShadowMatrix::for_vertices(&pts);
        assert_eq!(s.get(0, 1), 0);
        assert_eq!(s.row_indicator(0), 0);
    }

    #[test]
    fn face_examples() {
        let faces: Vec<RatVector> = regular_tetrahedron().iter().map(|r| r.scale(&rat(-1, 3))).collect();
        let cfg = FaceConfig::new(3, faces).unwrap();
        assert_eq!(count_stable(&cfg), 4);

        let cfg = FaceConfig::new(3, vec![v(&[1, 0, 0]), v(&[3, 0, 0]), v(&[0, 2, 0]), v(&[0, 0, 2])]).unwrap();
        let s = face_shadow_matrix(&cfg);
        assert_eq!(s.get(1, 0), -1);
        assert!(count_stable(&cfg) < 4);
    }

    #[test]
    fn indicator_matches_rational_floor() {
        use crate::Rational;
        // compare the integer evaluation against the literal rational formula
        for n in 2..9usize {
            let m = (n - 1) as i64;
            for sum in -m..=m {
                let literal = (rat(1, 2) + Rational::from(sum) / Rational::from(2 * m)).floor();
                let int = (m + sum).div_euclid(2 * m);
                assert_eq!(literal, num_bigint::BigInt::from(int), "n={n} sum={sum}");
            }
        }
    }
}
