//! Random generators and brute-force oracles shared by the integration
//! tests. Oracles work on plain `BigRational`/`i128` values so they do not
//! route through the code they check.

#![allow(dead_code)]

use monoproof::equilibria::{simplex_volume, PointConfig};
use monoproof::{RatVector, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 3q_max`, `1 ≤ q ≤ den_max`.
pub fn rand_rat(rng: &mut ChaCha8Rng, den_max: i64) -> Rational {
    let q = rng.gen_range(1..=den_max);
    let p = rng.gen_range(-3 * den_max..=3 * den_max);
    Rational::new(p, q).unwrap()
}

pub fn rand_vec(rng: &mut ChaCha8Rng, d: usize, den_max: i64) -> RatVector {
    (0..d).map(|_| rand_rat(rng, den_max)).collect()
}

/// Random configuration with pairwise distinct norms.
pub fn random_generic_config(rng: &mut ChaCha8Rng, v: usize, den_max: i64) -> PointConfig {
    loop {
        let pts: Vec<RatVector> = (0..v).map(|_| rand_vec(rng, 3, den_max)).collect();
        let cfg = PointConfig::new(3, pts).unwrap();
        if cfg.is_generic() && cfg.vertices().iter().all(|p| !p.is_zero()) {
            return cfg;
        }
    }
}

/// Random non-degenerate rational tetrahedron.
pub fn random_tetrahedron(rng: &mut ChaCha8Rng, den_max: i64) -> Vec<RatVector> {
    loop {
        let vs: Vec<RatVector> = (0..4).map(|_| rand_vec(rng, 3, den_max)).collect();
        if !simplex_volume(&vs).unwrap().is_zero() {
            return vs;
        }
    }
}

pub fn centroid(vs: &[RatVector]) -> RatVector {
    let n = Rational::from(vs.len());
    (0..vs[0].len()).map(|k| vs.iter().map(|p| p[k].clone()).sum::<Rational>() / n.clone()).collect()
}

pub fn big(v: &RatVector) -> Vec<BigRational> {
    v.iter().map(|x| x.as_big().clone()).collect()
}

pub fn bdot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Support-plane oracle: `p_i` carries an unstable equilibrium iff every
/// other vertex lies strictly on the origin side of the plane through
/// `p_i` orthogonal to `r_i`, i.e. `r_j·r_i < |r_i|²`.
pub fn oracle_unstable(points: &[RatVector]) -> usize {
    let pts: Vec<Vec<BigRational>> = points.iter().map(big).collect();
    (0..pts.len())
        .filter(|&i| {
            let h = bdot(&pts[i], &pts[i]);
            (0..pts.len()).filter(|&j| j != i).all(|j| bdot(&pts[j], &pts[i]) < h)
        })
        .count()
}

/// Tipping-graph sinks: face `i` is stable iff no `j` has `(q_j − q_i)·q_j < 0`.
pub fn oracle_stable(faces: &[RatVector]) -> usize {
    let qs: Vec<Vec<BigRational>> = faces.iter().map(big).collect();
    (0..qs.len())
        .filter(|&i| {
            (0..qs.len()).filter(|&j| j != i).all(|j| {
                let diff: Vec<BigRational> = qs[j].iter().zip(&qs[i]).map(|(a, b)| a - b).collect();
                !bdot(&diff, &qs[j]).is_negative()
            })
        })
        .count()
}

fn det3(a: [i128; 3], b: [i128; 3], c: [i128; 3]) -> i128 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn orient(a: [i128; 3], b: [i128; 3], c: [i128; 3], d: [i128; 3]) -> i128 {
    let s = |p: [i128; 3]| [p[0] - a[0], p[1] - a[1], p[2] - a[2]];
    det3(s(b), s(c), s(d))
}

/// Carathéodory oracle for integer points in general position: `p` lies in
/// the hull of `others` iff it lies in one of their tetrahedra, decided by
/// comparing signs of the four Cramer sub-determinants.
pub fn oracle_in_hull(p: [i128; 3], others: &[[i128; 3]]) -> bool {
    let n = others.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let t = [others[a], others[b], others[c], others[d]];
                    let full = orient(t[0], t[1], t[2], t[3]);
                    if full == 0 {
                        continue;
                    }
                    let subs = [
                        orient(p, t[1], t[2], t[3]),
                        orient(t[0], p, t[2], t[3]),
                        orient(t[0], t[1], p, t[3]),
                        orient(t[0], t[1], t[2], p),
                    ];
                    if subs.iter().all(|s| *s == 0 || s.signum() == full.signum()) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn int_point(rng: &mut ChaCha8Rng, r: i64) -> [i128; 3] {
    [0; 3].map(|_| rng.gen_range(-r..=r) as i128)
}

/// No four of the points coplanar.
pub fn in_general_position(pts: &[[i128; 3]]) -> bool {
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if orient(pts[a], pts[b], pts[c], pts[d]) == 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn to_ratvec(p: [i128; 3]) -> RatVector {
    p.iter().map(|&x| Rational::from(BigInt::from(x))).collect()
}
