//! Shadowing systems and their quadratic inequalities.
//!
//! ```text
//! cargo run --example enumerate_systems
//! ```

use monoproof::expansion::{enumerate_systems, inequality_forms, system_count, VarIndex};

fn main() {
    for v in 4..=8 {
        println!("V = {v}: {} systems, {} free coordinates", system_count(v), VarIndex::new(v).unwrap().len());
    }

    let sys = &enumerate_systems(4).unwrap()[0];
    println!("\nsystem {sys} for V = 4");
    for (k, q) in inequality_forms(sys).iter().enumerate() {
        let i = k + 2;
        println!("Q_{i}: constant {}, linear {}", q.c0, q.b);
        for r in 0..q.a.rows() {
            let row: Vec<String> = (0..q.a.cols()).map(|c| q.a[(r, c)].to_string()).collect();
            println!("    [{}]", row.join(", "));
        }
    }
}
