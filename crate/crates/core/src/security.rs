//! Burned-fee statistics, fee/transaction correlation, and a Monte Carlo
//! 51%-attack simulator over two consensus-randomness schemes.
//!
//! The simulator models proposer selection as a stake-weighted lottery with
//! one adversary holding stake fraction `alpha` and `honest_validators`
//! equally staked honest participants:
//!
//! * `seed_chain` — every round draws fresh randomness that no participant
//!   can influence, so the adversary proposes with probability exactly
//!   `alpha`.
//! * `xor_accumulator` — the round's randomness is the running XOR of
//!   per-round contributions and the proposer of round `t` contributes the
//!   final reveal deciding round `t+1`. An adversarial proposer may evaluate
//!   up to `2^grinding_bits` candidate reveals and commit one that makes the
//!   next round select the adversary, if any does (last-revealer grinding).
//!   Honest reveals are unbiased, and `grinding_bits = 0` leaves no choice,
//!   making the scheme statistically identical to `seed_chain`.
//!
//! Runs are fully deterministic given `rng_seed`: every trial owns an
//! independent counter-based stream, and aggregation is an order-independent
//! reduction, so results do not depend on thread scheduling.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{align_series, IngestError};
use crate::math::{compensated_sum, mean, population_std};
use crate::series::ObservationSeries;

#[derive(Debug, Error)]
pub enum SecurityError {
    #[error("series is empty")]
    EmptySeries,
    #[error("series share no dates")]
    EmptyIntersection,
    #[error("only {got} common dates; correlation needs at least {needed}")]
    InsufficientOverlap { needed: usize, got: usize },
    #[error("zero variance in `{0}`; correlation undefined")]
    ZeroVariance(String),
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Ingest(#[from] IngestError),
}

/// Summary of a burned-fee frame in native token units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeeStats {
    pub daily_mean: f64,
    pub total: f64,
    pub std: f64,
    pub days: u64,
}

/// Mean, total, and spread of daily burned fees over present days.
pub fn burned_fee_stats(fees: &ObservationSeries) -> Result<FeeStats, SecurityError> {
    if fees.is_empty() {
        return Err(SecurityError::EmptySeries);
    }
    let values: Vec<f64> = fees.values().collect();
    Ok(FeeStats {
        daily_mean: mean(&values),
        total: compensated_sum(values.iter().copied()),
        std: population_std(&values),
        days: values.len() as u64,
    })
}

/// Pearson correlation between burned fees and transaction counts over their
/// common dates. Requires at least three common dates and nonzero variance
/// on both sides.
pub fn fee_security_correlation(
    fees: &ObservationSeries,
    tx: &ObservationSeries,
) -> Result<f64, SecurityError> {
    let pairs = align_series(fees, tx).map_err(|e| match e {
        IngestError::EmptyIntersection => SecurityError::EmptyIntersection,
        other => SecurityError::Ingest(other),
    })?;
    if pairs.len() < 3 {
        return Err(SecurityError::InsufficientOverlap { needed: 3, got: pairs.len() });
    }
    pearson(&pairs.left, &pairs.right, fees.name(), tx.name())
}

fn pearson(x: &[f64], y: &[f64], x_name: &str, y_name: &str) -> Result<f64, SecurityError> {
    let n = x.len() as f64;
    let mx = mean(x);
    let my = mean(y);
    let var_x = compensated_sum(x.iter().map(|v| (v - mx) * (v - mx))) / n;
    let var_y = compensated_sum(y.iter().map(|v| (v - my) * (v - my))) / n;
    if var_x == 0.0 {
        return Err(SecurityError::ZeroVariance(x_name.to_string()));
    }
    if var_y == 0.0 {
        return Err(SecurityError::ZeroVariance(y_name.to_string()));
    }
    let cov =
        compensated_sum(x.iter().zip(y.iter()).map(|(a, b)| (a - mx) * (b - my))) / n;
    // sqrt of the product (rather than a product of sqrts) keeps the
    // self-correlation exactly 1.
    Ok(cov / (var_x * var_y).sqrt())
}

/// The consensus-randomness scheme under attack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// Fresh, participant-independent randomness every round.
    SeedChain,
    /// Running XOR of per-round reveals; the last revealer can grind.
    XorAccumulator,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::SeedChain => "seed_chain",
            Scheme::XorAccumulator => "xor_accumulator",
        }
    }
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters of one simulator run. The stake fraction serializes as
/// `alpha`, matching the file formats.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AttackSimConfig {
    pub scheme: Scheme,
    /// Adversary stake fraction in `[0, 1)`.
    #[serde(rename = "alpha")]
    pub adversary_stake: f64,
    /// Equally staked honest participants sharing the remaining
    /// `1 − adversary_stake`. Honest identities are interchangeable, so
    /// adversary statistics are invariant in this count; it fixes the stake
    /// granularity of the lottery.
    pub honest_validators: u32,
    /// Proposer selections per trial.
    pub rounds: u64,
    /// Independent trials, each with its own RNG stream.
    pub trials: u64,
    /// log2 of the candidate reveals a grinding adversary may evaluate.
    /// Must be 0 under `seed_chain`.
    pub grinding_bits: u32,
    pub rng_seed: u64,
}

impl AttackSimConfig {
    pub fn validate(&self) -> Result<(), SecurityError> {
        let fail = |msg: String| Err(SecurityError::InvalidConfig(msg));
        if !(0.0..1.0).contains(&self.adversary_stake) {
            return fail(format!(
                "adversary_stake {} outside [0, 1)",
                self.adversary_stake
            ));
        }
        if self.honest_validators == 0 {
            return fail("honest_validators must be at least 1".into());
        }
        if self.rounds == 0 {
            return fail("rounds must be at least 1".into());
        }
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.scheme == Scheme::SeedChain && self.grinding_bits != 0 {
            return fail("grinding_bits must be 0 under seed_chain".into());
        }
        if self.grinding_bits > 63 {
            return fail(format!("grinding_bits {} exceeds 63", self.grinding_bits));
        }
        if self.rounds.checked_mul(self.trials).is_none() {
            return fail("rounds × trials overflows a 64-bit counter".into());
        }
        Ok(())
    }

    /// Total proposer selections across all trials.
    pub fn total_rounds(&self) -> u64 {
        self.rounds * self.trials
    }
}

/// Measured outcome of a simulator run. Serializes flat — the config echo
/// fields sit beside the measurements, so one JSON object (or CSV row)
/// fully describes a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttackSimResult {
    #[serde(flatten)]
    pub config: AttackSimConfig,
    /// Fraction of all rounds the adversary proposed.
    pub adversary_share: f64,
    /// `adversary_share − adversary_stake`.
    pub bias: f64,
    /// Binomial standard error over `rounds × trials`.
    pub stderr: f64,
    /// Longest run of consecutive adversary proposals in any trial.
    #[serde(rename = "max_consecutive")]
    pub max_consecutive_adversary: u64,
    /// Rounds in which the adversary held the final reveal and ground.
    pub ground_rounds: u64,
    /// Ground rounds whose next round selected the adversary.
    pub ground_hits: u64,
}

impl AttackSimResult {
    /// Measured adversary probability on the round following a ground round.
    pub fn conditional_ground_success(&self) -> Option<f64> {
        (self.ground_rounds > 0).then(|| self.ground_hits as f64 / self.ground_rounds as f64)
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct TrialTally {
    adversary_rounds: u64,
    max_run: u64,
    ground_rounds: u64,
    ground_hits: u64,
}

impl TrialTally {
    fn merge(self, other: Self) -> Self {
        Self {
            adversary_rounds: self.adversary_rounds + other.adversary_rounds,
            max_run: self.max_run.max(other.max_run),
            ground_rounds: self.ground_rounds + other.ground_rounds,
            ground_hits: self.ground_hits + other.ground_hits,
        }
    }
}

/// Map 64 random bits to a uniform value in `[0, 1)`.
fn unit_interval(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Stake-weighted lottery: adversary wins iff the draw lands in its stake.
fn adversary_selected(bits: u64, alpha: f64) -> bool {
    unit_interval(bits) < alpha
}

fn run_trial(cfg: &AttackSimConfig, trial: u64) -> TrialTally {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    rng.set_stream(trial);
    let alpha = cfg.adversary_stake;
    let mut tally = TrialTally::default();
    let mut current_run = 0u64;

    fn record(tally: &mut TrialTally, current_run: &mut u64, adversary: bool) {
        if adversary {
            tally.adversary_rounds += 1;
            *current_run += 1;
            tally.max_run = tally.max_run.max(*current_run);
        } else {
            *current_run = 0;
        }
    }

    match cfg.scheme {
        Scheme::SeedChain => {
            for _ in 0..cfg.rounds {
                let adversary = adversary_selected(rng.next_u64(), alpha);
                record(&mut tally, &mut current_run, adversary);
            }
        }
        Scheme::XorAccumulator => {
            let candidate_budget = 1u64 << cfg.grinding_bits;
            let mut accumulator = rng.next_u64();
            for round in 0..cfg.rounds {
                let adversary = adversary_selected(accumulator, alpha);
                record(&mut tally, &mut current_run, adversary);
                if round + 1 == cfg.rounds {
                    break;
                }
                if adversary && cfg.grinding_bits > 0 {
                    // Last-revealer grinding: evaluate candidate reveals and
                    // commit the first that hands the adversary the next
                    // round; commit the final candidate when none does.
                    tally.ground_rounds += 1;
                    let mut committed = accumulator ^ rng.next_u64();
                    let mut tries = 1;
                    while !adversary_selected(committed, alpha) && tries < candidate_budget {
                        committed = accumulator ^ rng.next_u64();
                        tries += 1;
                    }
                    if adversary_selected(committed, alpha) {
                        tally.ground_hits += 1;
                    }
                    accumulator = committed;
                } else {
                    accumulator ^= rng.next_u64();
                }
            }
        }
    }
    tally
}

/// Run the Monte Carlo attack simulation. Deterministic given the config,
/// including `rng_seed`; trials run in parallel on independent streams.
pub fn simulate_attack(cfg: &AttackSimConfig) -> Result<AttackSimResult, SecurityError> {
    cfg.validate()?;
    let tally = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| run_trial(cfg, trial))
        .reduce(TrialTally::default, TrialTally::merge);

    let n = cfg.total_rounds() as f64;
    let share = tally.adversary_rounds as f64 / n;
    Ok(AttackSimResult {
        config: *cfg,
        adversary_share: share,
        bias: share - cfg.adversary_stake,
        stderr: (share * (1.0 - share) / n).sqrt(),
        max_consecutive_adversary: tally.max_run,
        ground_rounds: tally.ground_rounds,
        ground_hits: tally.ground_hits,
    })
}

/// Run one simulation per stake level. Each entry is independently seeded as
/// `rng_seed XOR index` so sweeps are reproducible element by element.
pub fn sweep_attack(
    template: &AttackSimConfig,
    alphas: &[f64],
) -> Result<Vec<AttackSimResult>, SecurityError> {
    let mut results = Vec::with_capacity(alphas.len());
    for (i, &alpha) in alphas.iter().enumerate() {
        let cfg = AttackSimConfig {
            adversary_stake: alpha,
            rng_seed: template.rng_seed ^ i as u64,
            ..*template
        };
        results.push(simulate_attack(&cfg)?);
    }
    Ok(results)
}
