//! Infeasibility certificates for shadowing systems.
//!
//! A system `Q_i(x) ≤ 0 (i = 2..V)` has no solution if some positive
//! weights make `f = Σ c_i Q_i` strictly positive everywhere: any solution
//! would give `f ≤ 0`. Since `f` is quadratic, positivity is established by
//! a positive definite Hessian and a strictly positive value at the unique
//! stationary point. Everything is exact.
//!
//! Weights are drawn uniformly from an integer range. Each system gets its
//! own `ChaCha8` stream seeded with `base_seed + system_id` (wrapping), so a
//! proof run is reproducible regardless of how systems are scheduled.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::expansion::{
    check_coefficients, combine_forms, enumerate_systems, inequality_forms, ExpansionError, QuadraticForm, ShadowSystem,
};
use crate::ratcore::{is_positive_definite, solve_linear, RatError, RatMatrix, RatVector, Rational};

#[derive(Debug, thiserror::Error)]
pub enum ProverError {
    #[error("quadratic form is not strictly convex (Hessian not positive definite)")]
    NotConvex,
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Rational(#[from] RatError),
}

/// Hessian `2A` of `xᵀAx + b·x + c0`; constant in `x`.
pub fn hessian_of(f: &QuadraticForm) -> RatMatrix {
    f.a.scale(&Rational::from(2))
}

/// Stationary point and value of a strictly convex quadratic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimum {
    pub point: RatVector,
    pub value: Rational,
}

/// Solves `2A x = -b` and evaluates `f` there. Fails with
/// [`ProverError::NotConvex`] unless the Hessian is positive definite.
pub fn minimize_strictly_convex(f: &QuadraticForm) -> Result<Minimum, ProverError> {
    let h = hessian_of(f);
    if !is_positive_definite(&h)? {
        return Err(ProverError::NotConvex);
    }
    let point = solve_linear(&h, &-&f.b)?;
    let value = f.eval(&point)?;
    Ok(Minimum { point, value })
}

/// `2A x + b`.
pub fn gradient_at(f: &QuadraticForm, x: &RatVector) -> Result<RatVector, RatError> {
    hessian_of(f).mul_vec(x)?.checked_add(&f.b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyResult {
    pub hessian_pd: bool,
    /// `None` when the Hessian is not positive definite.
    pub min_value: Option<Rational>,
    pub minimizer: Option<RatVector>,
    pub positive: bool,
}

fn evaluate(f: &QuadraticForm) -> Result<VerifyResult, ProverError> {
    match minimize_strictly_convex(f) {
        Ok(m) => Ok(VerifyResult {
            hessian_pd: true,
            positive: m.value.is_positive(),
            min_value: Some(m.value),
            minimizer: Some(m.point),
        }),
        Err(ProverError::NotConvex) => {
            Ok(VerifyResult { hessian_pd: false, min_value: None, minimizer: None, positive: false })
        }
        Err(e) => Err(e),
    }
}

/// Recomputes `f`, its definiteness and exact minimum for the given weights.
pub fn verify_certificate(sys: &ShadowSystem, coeffs: &[u64]) -> Result<VerifyResult, ProverError> {
    check_coefficients(sys.vertices(), coeffs)?;
    evaluate(&combine_forms(&inequality_forms(sys), coeffs))
}

/// Weights that refute a system, with the exact minimum they produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub system: ShadowSystem,
    /// `c_2..c_V`.
    pub coeffs: Vec<u64>,
    pub minimizer: RatVector,
    pub min_value: Rational,
}

impl Certificate {
    /// Independent re-check: positive definite Hessian, exactly zero
    /// gradient at the stored minimizer, the stored minimum reproduced, and
    /// that minimum strictly positive.
    pub fn recheck(&self) -> Result<bool, ProverError> {
        let f = crate::expansion::assemble_f(&self.system, &self.coeffs)?;
        if !is_positive_definite(&hessian_of(&f))? {
            return Ok(false);
        }
        let grad_zero = gradient_at(&f, &self.minimizer)?.is_zero();
        let value = f.eval(&self.minimizer)?;
        Ok(grad_zero && value == self.min_value && value.is_positive())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub coeff_min: u64,
    pub coeff_max: u64,
    pub max_trials: u64,
    pub base_seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { coeff_min: 1, coeff_max: 101, max_trials: 100_000, base_seed: 1 }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), ProverError> {
        if self.coeff_min < 1 || self.coeff_min > self.coeff_max {
            return Err(ProverError::InvalidConfig(format!(
                "need 1 <= coeff_min <= coeff_max, got {}..{}",
                self.coeff_min, self.coeff_max
            )));
        }
        if self.max_trials < 1 {
            return Err(ProverError::InvalidConfig("max_trials must be at least 1".into()));
        }
        Ok(())
    }

    /// Seed of the stream used for `sys`.
    pub fn seed_for(&self, sys: &ShadowSystem) -> u64 {
        self.base_seed.wrapping_add(sys.id() as u64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Certified { certificate: Certificate, trials: u64 },
    Exhausted(Exhaustion),
}

/// Diagnostics of a search that ran out of trials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhaustion {
    pub trials: u64,
    /// Trials with a convex `f` whose minimum was not strictly positive.
    pub negative_minima_seen: u64,
    pub non_pd_seen: u64,
}

impl SearchOutcome {
    pub fn trials(&self) -> u64 {
        match self {
            SearchOutcome::Certified { trials, .. } => *trials,
            SearchOutcome::Exhausted(e) => e.trials,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Certified { certificate, .. } => Some(certificate),
            SearchOutcome::Exhausted(_) => None,
        }
    }
}

/// Randomized search with the stream seeded by [`SearchConfig::seed_for`].
pub fn search_certificate(sys: &ShadowSystem, cfg: &SearchConfig) -> Result<SearchOutcome, ProverError> {
    search_with_seed(sys, cfg, cfg.seed_for(sys))
}

pub fn search_with_seed(sys: &ShadowSystem, cfg: &SearchConfig, seed: u64) -> Result<SearchOutcome, ProverError> {
    cfg.validate()?;
    let forms = inequality_forms(sys);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut diag = Exhaustion::default();
    let mut coeffs = vec![0u64; forms.len()];
    for trial in 1..=cfg.max_trials {
        for c in coeffs.iter_mut() {
            *c = rng.gen_range(cfg.coeff_min..=cfg.coeff_max);
        }
        let f = combine_forms(&forms, &coeffs);
        let result = evaluate(&f)?;
        diag.trials = trial;
        if !result.hessian_pd {
            diag.non_pd_seen += 1;
        } else if !result.positive {
            diag.negative_minima_seen += 1;
        } else {
            let certificate = Certificate {
                system: sys.clone(),
                coeffs,
                minimizer: result.minimizer.expect("convex"),
                min_value: result.min_value.expect("convex"),
            };
            return Ok(SearchOutcome::Certified { certificate, trials: trial });
        }
    }
    Ok(SearchOutcome::Exhausted(diag))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemStatus {
    Certified,
    Exhausted,
}

/// Outcome for one system within a [`ProofReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemResult {
    pub system_id: usize,
    /// `j(2), …, j(V)`.
    pub j: Vec<usize>,
    pub status: SystemStatus,
    pub coeffs: Option<Vec<u64>>,
    pub min_value: Option<Rational>,
    pub trials: u64,
    pub negative_minima_seen: u64,
    pub non_pd_seen: u64,
    pub seed: u64,
}

impl SystemResult {
    fn from_outcome(sys: &ShadowSystem, seed: u64, outcome: &SearchOutcome, diag: Exhaustion) -> Self {
        let cert = outcome.certificate();
        SystemResult {
            system_id: sys.id(),
            j: sys.choices().to_vec(),
            status: if cert.is_some() { SystemStatus::Certified } else { SystemStatus::Exhausted },
            coeffs: cert.map(|c| c.coeffs.clone()),
            min_value: cert.map(|c| c.min_value.clone()),
            trials: outcome.trials(),
            negative_minima_seen: diag.negative_minima_seen,
            non_pd_seen: diag.non_pd_seen,
            seed,
        }
    }

    pub fn system(&self, v: usize) -> Result<ShadowSystem, ExpansionError> {
        ShadowSystem::new(v, self.j.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every system certified: no mono-unstable 0-skeleton with `V` vertices.
    Proven,
    Incomplete,
}

/// Per-`V` aggregate of certificate searches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofReport {
    #[serde(rename = "V")]
    pub v: usize,
    pub verdict: Verdict,
    pub base_seed: u64,
    pub coeff_range: [u64; 2],
    pub max_trials: u64,
    pub systems: Vec<SystemResult>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ProofReport {
    fn new(v: usize, cfg: &SearchConfig, systems: Vec<SystemResult>, elapsed: Duration) -> Self {
        let mut report = ProofReport {
            v,
            verdict: Verdict::Incomplete,
            base_seed: cfg.base_seed,
            coeff_range: [cfg.coeff_min, cfg.coeff_max],
            max_trials: cfg.max_trials,
            systems,
            elapsed,
        };
        report.refresh_verdict();
        report
    }

    fn refresh_verdict(&mut self) {
        self.verdict = if self.systems.iter().all(|s| s.status == SystemStatus::Certified) {
            Verdict::Proven
        } else {
            Verdict::Incomplete
        };
    }

    pub fn certified(&self) -> usize {
        self.systems.iter().filter(|s| s.status == SystemStatus::Certified).count()
    }

    pub fn exhausted(&self) -> impl Iterator<Item = &SystemResult> {
        self.systems.iter().filter(|s| s.status == SystemStatus::Exhausted)
    }

    pub fn is_proven(&self) -> bool {
        self.verdict == Verdict::Proven
    }

    /// Searches again, with a different base seed, every system that
    /// exhausted its budget. Returns how many became certified.
    pub fn retry_exhausted(&mut self, base_seed: u64, jobs: usize) -> Result<usize, ProverError> {
        let cfg = SearchConfig {
            coeff_min: self.coeff_range[0],
            coeff_max: self.coeff_range[1],
            max_trials: self.max_trials,
            base_seed,
        };
        let todo: Vec<ShadowSystem> = self.exhausted().map(|s| s.system(self.v)).collect::<Result<_, _>>()?;
        let redone = run_searches(&todo, &cfg, jobs)?;
        let mut gained = 0;
        for r in redone {
            if r.status == SystemStatus::Certified {
                gained += 1;
            }
            let slot = self.systems.iter_mut().find(|s| s.system_id == r.system_id).expect("same ids");
            *slot = r;
        }
        self.refresh_verdict();
        Ok(gained)
    }
}

fn search_one(sys: &ShadowSystem, cfg: &SearchConfig) -> Result<SystemResult, ProverError> {
    let seed = cfg.seed_for(sys);
    let outcome = search_with_seed(sys, cfg, seed)?;
    let diag = match &outcome {
        SearchOutcome::Exhausted(e) => e.clone(),
        SearchOutcome::Certified { .. } => Exhaustion::default(),
    };
    Ok(SystemResult::from_outcome(sys, seed, &outcome, diag))
}

fn run_searches(systems: &[ShadowSystem], cfg: &SearchConfig, jobs: usize) -> Result<Vec<SystemResult>, ProverError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| ProverError::Pool(e.to_string()))?;
    // indexed parallel collect keeps canonical order
    pool.install(|| systems.par_iter().map(|s| search_one(s, cfg)).collect())
}

/// Runs the certificate search over all `(V-1)!` systems on `jobs` worker
/// threads.
pub fn prove_unsolvable(v: usize, cfg: &SearchConfig, jobs: usize) -> Result<ProofReport, ProverError> {
    let start = Instant::now();
    let systems = enumerate_systems(v)?;
    let results = run_searches(&systems, cfg, jobs)?;
    Ok(ProofReport::new(v, cfg, results, start.elapsed()))
}

/// Builds a report from fixed weights (for instance a published table)
/// instead of a random search. Systems whose weights fail are `Exhausted`
/// after one trial.
pub fn certify_with_coefficients(
    v: usize,
    rows: &[(ShadowSystem, Vec<u64>)],
    jobs: usize,
) -> Result<ProofReport, ProverError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| ProverError::Pool(e.to_string()))?;
    let results: Result<Vec<SystemResult>, ProverError> = pool.install(|| {
        rows.par_iter()
            .map(|(sys, coeffs)| {
                let r = verify_certificate(sys, coeffs)?;
                let mut diag = Exhaustion { trials: 1, ..Default::default() };
                let outcome = if r.positive {
                    SearchOutcome::Certified {
                        certificate: Certificate {
                            system: sys.clone(),
                            coeffs: coeffs.clone(),
                            minimizer: r.minimizer.expect("convex"),
                            min_value: r.min_value.expect("convex"),
                        },
                        trials: 1,
                    }
                } else {
                    if r.hessian_pd {
                        diag.negative_minima_seen = 1;
                    } else {
                        diag.non_pd_seen = 1;
                    }
                    SearchOutcome::Exhausted(diag.clone())
                };
                Ok(SystemResult::from_outcome(sys, 0, &outcome, diag))
            })
            .collect()
    });
    let (min, max) =
        rows.iter().flat_map(|(_, c)| c.iter().copied()).fold((u64::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
    let cfg = SearchConfig { coeff_min: min.min(max), coeff_max: max, max_trials: 1, base_seed: 0 };
    Ok(ProofReport::new(v, &cfg, results?, start.elapsed()))
}
