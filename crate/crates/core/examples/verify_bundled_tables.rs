//! Recomputes every bundled certificate table exactly.
//!
//! ```text
//! cargo run --release --example verify_bundled_tables
//! ```

use std::time::Instant;

use monoproof::table::{bundled_table, verify_table};

fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    for v in 4..=7 {
        let start = Instant::now();
        let table = bundled_table(v).expect("bundled data is intact");
        let checks = verify_table(&table, jobs).unwrap();
        let ok = checks.iter().filter(|c| c.ok()).count();
        println!("V = {v}: {ok}/{} verified in {:.2?}", checks.len(), start.elapsed());
        for c in checks.iter().filter(|c| !c.ok()) {
            println!("  mismatch in row {}: expected {}, computed {:?}", c.row, c.expected, c.computed);
        }
    }

    let t = bundled_table(7).unwrap();
    let first = &t.rows[0];
    println!("V = 7, system {}: c = {:?}, min f = {}", first.system, first.coeffs, first.min_f);
}
