//! Exact rational linear algebra: solves, definiteness, quadratic forms.
//!
//! ```text
//! cargo run --example exact_linear_algebra
//! ```

use monoproof::ratcore::{eval_quadratic, is_positive_definite, solve_linear};
use monoproof::{rat, RatMatrix, RatVector};

fn main() {
    let a = RatMatrix::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
    let b: RatVector = vec![rat(1, 2), rat(0, 1), rat(-1, 3)].into();
    let x = solve_linear(&a, &b).unwrap();
    println!("A x = b  =>  x = {x}");
    println!("A x = {}", a.mul_vec(&x).unwrap());

    println!("A positive definite: {}", is_positive_definite(&a).unwrap());
    let indefinite = RatMatrix::from_int_rows(&[&[1, 2], &[2, 1]]).unwrap();
    println!("[[1,2],[2,1]] positive definite: {}", is_positive_definite(&indefinite).unwrap());

    let hilbert = RatMatrix::from_fn(6, 6, |i, j| rat(1, (i + j + 1) as i64));
    println!("6x6 Hilbert matrix positive definite: {}", is_positive_definite(&hilbert).unwrap());

    let value = eval_quadratic(&a, &b, &rat(7, 5), &x).unwrap();
    println!("x'Ax + b.x + 7/5 at x = {value}");
}
