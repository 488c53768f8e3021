//! Random search for one system, then an independent exact recheck.
//!
//! ```text
//! cargo run --release --example search_certificate -- 6 17 42
//! ```
//! Arguments: `V`, system id, seed (defaults 6, 0, 1).

use monoproof::expansion::{assemble_f, ShadowSystem};
use monoproof::prover::{hessian_of, search_with_seed, SearchConfig, SearchOutcome};
use monoproof::ratcore::is_positive_definite;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let v = *args.first().unwrap_or(&6) as usize;
    let id = *args.get(1).unwrap_or(&0) as usize;
    let seed = *args.get(2).unwrap_or(&1);

    let sys = ShadowSystem::from_id(v, id).unwrap();
    let cfg = SearchConfig::default();
    println!("system {sys} (id {id}) for V = {v}, seed {seed}");
    match search_with_seed(&sys, &cfg, seed).unwrap() {
        SearchOutcome::Certified { certificate, trials } => {
            println!("certified after {trials} trials");
            println!("  c = {:?}", certificate.coeffs);
            println!("  min f = {} (~{:.6})", certificate.min_value, certificate.min_value.to_f64());
            println!("  minimizer = {}", certificate.minimizer);
            let f = assemble_f(&sys, &certificate.coeffs).unwrap();
            println!("  Hessian PD: {}", is_positive_definite(&hessian_of(&f)).unwrap());
            println!("  recheck: {}", certificate.recheck().unwrap());
        }
        SearchOutcome::Exhausted(e) => {
            println!(
                "exhausted after {} trials ({} negative minima, {} indefinite)",
                e.trials, e.negative_minima_seen, e.non_pd_seen
            );
        }
    }
}
