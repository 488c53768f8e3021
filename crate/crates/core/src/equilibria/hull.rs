use itertools::Itertools;

use super::PointConfig;
use crate::ratcore::{solve_system, RatMatrix, RatVector, Rational, SolveOutcome};

/// `true` iff vertex `i` is not a convex combination of the other vertices.
///
/// Decides feasibility of `Σ λ_j r_j = r_i, Σ λ_j = 1, λ ≥ 0` by enumerating
/// basic solutions: a feasible system has one supported on at most `d+1`
/// linearly independent columns, and that solution is the unique solution
/// of the restricted system.
///
/// Panics if `i` is out of range.
pub fn is_hull_vertex(cfg: &PointConfig, i: usize) -> bool {
    assert!(i < cfg.len(), "vertex index {i} out of range");
    let d = cfg.dim();
    // lifted columns (r_j, 1)
    let lifted: Vec<RatVector> =
        cfg.vertices().iter().map(|r| r.iter().cloned().chain(std::iter::once(Rational::one())).collect()).collect();
    let target = &lifted[i];
    let others: Vec<usize> = (0..cfg.len()).filter(|&j| j != i).collect();

    for size in 1..=(d + 1).min(others.len()) {
        for subset in others.iter().combinations(size) {
            let cols: Vec<&RatVector> = subset.iter().map(|&&j| &lifted[j]).collect();
            let a = RatMatrix::from_columns(&cols).expect("uniform dimensions");
            if let Ok(SolveOutcome::Unique(lambda)) = solve_system(&a, target) {
                if lambda.iter().all(|l| !l.is_negative()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Hull-vertex status of every vertex.
pub fn hull_vertices(cfg: &PointConfig) -> Vec<bool> {
    (0..cfg.len()).map(|i| is_hull_vertex(cfg, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> RatVector {
        RatVector::from_ints(x)
    }

    #[test]
    fn cube_corners_extreme() {
        let cube: Vec<RatVector> =
            (0..8).map(|m| v(&[(m & 1) * 2 - 1, ((m >> 1) & 1) * 2 - 1, ((m >> 2) & 1) * 2 - 1])).collect();
        let cfg = PointConfig::new(3, cube).unwrap();
        assert!(hull_vertices(&cfg).into_iter().all(|h| h));
    }

    #[test]
    fn square_with_centre() {
        let pts = vec![v(&[1, 1, 0]), v(&[1, -1, 0]), v(&[-1, 1, 0]), v(&[-1, -1, 0]), v(&[0, 0, 0])];
        let cfg = PointConfig::new(3, pts).unwrap();
        assert_eq!(hull_vertices(&cfg), vec![true, true, true, true, false]);
    }

    #[test]
    fn point_on_edge_and_duplicate() {
        let pts = vec![v(&[0, 0, 0]), v(&[2, 0, 0]), v(&[0, 2, 0]), v(&[0, 0, 2]), v(&[1, 0, 0]), v(&[0, 2, 0])];
        let cfg = PointConfig::new(3, pts).unwrap();
        let h = hull_vertices(&cfg);
        assert!(!h[4]);
        // a duplicated point is a convex combination of its twin
        assert!(!h[2] && !h[5]);
        assert!(h[0] && h[1] && h[3]);
    }
}
