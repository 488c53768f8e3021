mod common;

use common::*;
use monoproof::equilibria::{
    count_stable, count_unstable, dawson_tips, face_shadow_sign, hull_vertices, is_hull_vertex, simplex_area_vectors,
    simplex_face_vectors, simplex_volume, stable_equilibria, vertex_shadow_matrix, FaceConfig, PointConfig,
};
use monoproof::{rat, RatVector, Rational};

#[test]
fn unstable_count_matches_support_plane_oracle() {
    let mut r = rng(11);
    for trial in 0..300 {
        let v = 4 + trial % 4;
        let cfg = random_generic_config(&mut r, v, 100);
        assert_eq!(count_unstable(&cfg), oracle_unstable(cfg.vertices()), "config {trial}");
    }
}

#[test]
fn asymmetric_five_point_config() {
    let pts: Vec<RatVector> = vec![
        vec![rat(3, 1), rat(0, 1), rat(1, 2)].into(),
        vec![rat(-1, 3), rat(2, 1), rat(0, 1)].into(),
        vec![rat(-1, 1), rat(-1, 1), rat(1, 1)].into(),
        vec![rat(1, 5), rat(1, 7), rat(-2, 1)].into(),
        vec![rat(-3, 2), rat(-1, 4), rat(-1, 9)].into(),
    ];
    let cfg = PointConfig::new(3, pts).unwrap();
    assert_eq!(count_unstable(&cfg), oracle_unstable(cfg.vertices()));
}

#[test]
fn stable_count_matches_sink_oracle() {
    let mut r = rng(12);
    for _ in 0..200 {
        let vs = random_tetrahedron(&mut r, 20);
        let q = simplex_face_vectors(&vs, &centroid(&vs)).unwrap();
        assert_eq!(count_stable(&q), oracle_stable(q.faces()));
        assert!(count_stable(&q) >= 2, "no tetrahedron is mono-stable");
    }
}

#[test]
fn face_vectors_are_orthogonal_to_faces() {
    let mut r = rng(13);
    for _ in 0..200 {
        let vs = random_tetrahedron(&mut r, 50);
        let o = centroid(&vs);
        let q = simplex_face_vectors(&vs, &o).unwrap();
        for (i, qi) in q.faces().iter().enumerate() {
            for (k, p) in vs.iter().enumerate().filter(|&(k, _)| k != i) {
                let w = &(p - &o) - qi;
                assert!(w.dot(qi).unwrap().is_zero(), "face {i}, vertex {k}");
            }
        }
    }
}

#[test]
fn area_vectors_close_and_match_volume() {
    let mut r = rng(14);
    for _ in 0..200 {
        let vs = random_tetrahedron(&mut r, 50);
        let x = simplex_area_vectors(&vs).unwrap();
        let total = x.iter().fold(RatVector::zeros(3), |acc, xi| &acc + xi);
        assert!(total.is_zero());

        let q = simplex_face_vectors(&vs, &centroid(&vs)).unwrap();
        let vol = simplex_volume(&vs).unwrap();
        let rhs = {
            let t = vol * rat(3, 4);
            &t * &t
        };
        for (xi, qi) in x.iter().zip(q.faces()) {
            assert_eq!(xi.norm_sq() * qi.norm_sq(), rhs);
        }
    }
}

#[test]
fn dawson_tipping_is_face_shadowing() {
    let mut r = rng(15);
    let mut tips = 0;
    for _ in 0..200 {
        let vs = random_tetrahedron(&mut r, 30);
        let q = simplex_face_vectors(&vs, &centroid(&vs)).unwrap();
        let x = simplex_area_vectors(&vs).unwrap();
        for i in 0..4 {
            for j in (0..4).filter(|&j| j != i) {
                let (qi, qj) = (&q.faces()[i], &q.faces()[j]);
                let shadowed = (qj - qi).dot(qj).unwrap().is_negative();
                assert_eq!(dawson_tips(&x[i], &x[j]), shadowed, "faces {i}, {j}");
                tips += usize::from(shadowed);
            }
        }
    }
    assert!(tips > 50, "sample should contain tipping pairs ({tips})");
}

#[test]
fn tipping_reverses_on_area_vectors() {
    let mut r = rng(16);
    for _ in 0..200 {
        let vs = random_tetrahedron(&mut r, 30);
        let x = simplex_area_vectors(&vs).unwrap();
        let dual = FaceConfig::new(3, x.clone()).unwrap();
        for i in 0..4 {
            for j in (0..4).filter(|&j| j != i) {
                let shadowed = face_shadow_sign(&dual.faces()[i], &dual.faces()[j]) < 0;
                assert_eq!(shadowed, dawson_tips(&x[j], &x[i]));
            }
        }
    }
}

#[test]
fn face_shadowing_points_outwards() {
    let mut r = rng(17);
    for _ in 0..200 {
        let vs = random_tetrahedron(&mut r, 30);
        let q = simplex_face_vectors(&vs, &centroid(&vs)).unwrap();
        let report = stable_equilibria(&q);
        for i in 0..4 {
            for j in (0..4).filter(|&j| j != i) {
                if report.matrix.get(i, j) == -1 {
                    assert!(q.faces()[j].norm_sq() < q.faces()[i].norm_sq());
                }
            }
        }
    }
}

#[test]
fn collinear_shadow_entries() {
    let pts: Vec<RatVector> = vec![
        RatVector::from_ints(&[1, 0, 0]),
        vec![rat(1, 2), rat(0, 1), rat(0, 1)].into(),
        vec![rat(-3, 2), rat(0, 1), rat(0, 1)].into(),
    ];
    let cfg = PointConfig::new(2, pts.iter().map(|p| p.iter().take(2).cloned().collect()).collect()).unwrap();
    let m = vertex_shadow_matrix(&cfg);
    assert_eq!((m.get(1, 0), m.get(0, 1), m.get(2, 0)), (-1, 1, 1));
}

#[test]
fn hull_matches_caratheodory_oracle() {
    let mut r = rng(18);
    let mut interior = 0;
    let mut checked = 0;
    while checked < 150 {
        let n = 5 + checked % 4;
        let pts: Vec<[i128; 3]> = (0..n).map(|_| int_point(&mut r, 6)).collect();
        if !in_general_position(&pts) {
            continue;
        }
        checked += 1;
        let cfg = PointConfig::new(3, pts.iter().map(|&p| to_ratvec(p)).collect()).unwrap();
        let hull = hull_vertices(&cfg);
        for i in 0..n {
            let others: Vec<[i128; 3]> = pts.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &p)| p).collect();
            let inside = oracle_in_hull(pts[i], &others);
            assert_eq!(hull[i], !inside, "point {i} of {pts:?}");
            interior += usize::from(inside);
        }
    }
    assert!(interior > 20, "oracle must see interior points too ({interior})");
}

#[test]
fn hull_of_rational_cloud_around_simplex() {
    // points strictly inside a big tetrahedron are never hull vertices
    let mut r = rng(19);
    let big: Vec<RatVector> =
        [[40, 0, 0], [0, 40, 0], [0, 0, 40], [-40, -40, -40]].iter().map(|p| RatVector::from_ints(p)).collect();
    let mut pts = big.clone();
    for _ in 0..4 {
        let w: Vec<Rational> = (0..4).map(|_| Rational::from(rand::Rng::gen_range(&mut r, 1..20u32))).collect();
        let total: Rational = w.iter().cloned().sum();
        let p = big.iter().zip(&w).fold(RatVector::zeros(3), |acc, (b, wi)| &acc + &b.scale(&(wi / &total)));
        pts.push(p);
    }
    let cfg = PointConfig::new(3, pts).unwrap();
    for i in 0..8 {
        assert_eq!(is_hull_vertex(&cfg, i), i < 4);
    }
}
