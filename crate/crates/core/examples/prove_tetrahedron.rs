//! There is no mono-unstable tetrahedron: all six shadowing systems for
//! `V = 4` are refuted by exact certificates.
//!
//! ```text
//! cargo run --example prove_tetrahedron
//! ```

use monoproof::prover::{prove_unsolvable, SearchConfig};

fn main() {
    let report = prove_unsolvable(4, &SearchConfig::default(), 1).unwrap();
    for s in &report.systems {
        println!(
            "j = {:?}  c = {:?}  min f = {}  ({} trials)",
            &s.j[1..],
            s.coeffs.as_ref().unwrap(),
            s.min_value.as_ref().unwrap(),
            s.trials
        );
    }
    println!("verdict: {:?}", report.verdict);
}
