//! Searching the chain system `j(i) = i - 1` for eight vertices.
//!
//! ```text
//! cargo run --release --example v8_exploration -- 20000
//! ```
//! The optional argument is the trial budget (default 100000).

use std::time::Instant;

use monoproof::expansion::ShadowSystem;
use monoproof::prover::{search_certificate, SearchConfig, SearchOutcome};

fn main() {
    let max_trials = std::env::args().nth(1).map_or(100_000, |a| a.parse().expect("trial budget"));
    let sys = ShadowSystem::chain(8).unwrap();
    let cfg = SearchConfig { max_trials, ..SearchConfig::default() };
    let start = Instant::now();
    let outcome = search_certificate(&sys, &cfg).unwrap();
    println!("system {sys}, seed {}, {:.2?}", cfg.seed_for(&sys), start.elapsed());
    match outcome {
        SearchOutcome::Certified { certificate, trials } => {
            println!("certified at trial {trials}: c = {:?}", certificate.coeffs);
            println!("min f = {}", certificate.min_value);
        }
        SearchOutcome::Exhausted(e) => println!(
            "exhausted: {} trials, {} non-positive minima, {} indefinite",
            e.trials, e.negative_minima_seen, e.non_pd_seen
        ),
    }
}
