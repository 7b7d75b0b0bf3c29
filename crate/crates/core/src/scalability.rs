//! Throughput and latency statistics from transaction-count and block-time
//! frames.
//!
//! TPS is derived from daily counts divided by 86,400 seconds; the data
//! dictionary has no finer granularity. A chain without a recorded
//! block-time frame (Algorand's stays constant in the source records) can be
//! given an injected constant series so both sides of the comparison walk
//! the same code path.

use std::collections::BTreeMap;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{ChainDataset, FrameKind};
use crate::math::{mean, population_std};
use crate::series::{Chain, ObservationSeries, Point, Unit};

pub const SECONDS_PER_DAY: f64 = 86_400.0;

/// Default constant block time injected for Algorand when no frame exists.
pub const DEFAULT_ALGORAND_BLOCK_TIME: f64 = 3.5;

#[derive(Debug, Error, PartialEq)]
pub enum ScalabilityError {
    #[error("series is empty")]
    EmptySeries,
    #[error("non-positive block time {value} on {date}")]
    NonPositiveBlockTime { date: NaiveDate, value: f64 },
    #[error("frame `{frame}` missing from {chain} dataset")]
    FrameMissing { chain: Chain, frame: FrameKind },
}

/// Daily transaction throughput summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThroughputStats {
    pub mean_daily_tx: f64,
    pub peak_daily_tx: f64,
    pub peak_date: NaiveDate,
    pub mean_tps: f64,
    pub peak_tps: f64,
}

/// Block-time summary in seconds; `std` is the population standard deviation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatencyStats {
    pub mean_block_time: f64,
    pub std_block_time: f64,
    pub min_block_time: f64,
    pub max_block_time: f64,
}

/// Mean and peak over present days. Peak ties resolve to the earliest date.
pub fn throughput_stats(tx: &ObservationSeries) -> Result<ThroughputStats, ScalabilityError> {
    if tx.is_empty() {
        return Err(ScalabilityError::EmptySeries);
    }
    let values: Vec<f64> = tx.values().collect();
    let mean_daily = mean(&values);
    let mut peak = tx.points()[0];
    for p in tx.points() {
        if p.value > peak.value {
            peak = *p;
        }
    }
    Ok(ThroughputStats {
        mean_daily_tx: mean_daily,
        peak_daily_tx: peak.value,
        peak_date: peak.date,
        mean_tps: mean_daily / SECONDS_PER_DAY,
        peak_tps: peak.value / SECONDS_PER_DAY,
    })
}

/// Mean, deviation, and extremes of block time over present days.
pub fn latency_stats(bt: &ObservationSeries) -> Result<LatencyStats, ScalabilityError> {
    if bt.is_empty() {
        return Err(ScalabilityError::EmptySeries);
    }
    for p in bt.points() {
        if p.value <= 0.0 {
            return Err(ScalabilityError::NonPositiveBlockTime { date: p.date, value: p.value });
        }
    }
    let values: Vec<f64> = bt.values().collect();
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(LatencyStats {
        mean_block_time: mean(&values),
        std_block_time: population_std(&values),
        min_block_time: min,
        max_block_time: max,
    })
}

/// Outcome of a strict two-chain comparison; equal statistics are a tie.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Tie,
    #[serde(untagged)]
    Chain(Chain),
}

/// Per-chain scalability figures. Serializes flat: one object per chain
/// carrying the throughput and latency fields side by side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainScalability {
    #[serde(flatten)]
    pub throughput: ThroughputStats,
    #[serde(flatten)]
    pub latency: LatencyStats,
    /// Present when the block-time frame was absent and a constant was
    /// injected instead.
    pub injected_block_time: Option<f64>,
    /// `mean_block_time × mean network liveness` when a liveness frame is
    /// present. Informational only; verdicts never use it.
    pub mean_confirmation_time: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdicts {
    pub higher_peak_chain: Verdict,
    pub lower_latency_chain: Verdict,
}

/// Scalability comparison of two chains.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalabilityComparison {
    pub chains: BTreeMap<Chain, ChainScalability>,
    pub verdicts: Verdicts,
}

/// Configuration for [`compare_scalability`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalabilityConfig {
    /// Constant block time substituted when an Algorand dataset has no
    /// block-time frame.
    pub algorand_block_time: f64,
}

impl Default for ScalabilityConfig {
    fn default() -> Self {
        Self { algorand_block_time: DEFAULT_ALGORAND_BLOCK_TIME }
    }
}

/// Resolve a dataset's block-time series: the recorded frame when present,
/// otherwise (Algorand only) a constant series over the transaction dates.
pub fn block_time_series(
    ds: &ChainDataset,
    cfg: &ScalabilityConfig,
) -> Result<(ObservationSeries, Option<f64>), ScalabilityError> {
    if let Some(frame) = ds.frame(FrameKind::AvgBlockTime) {
        return Ok((frame.clone(), None));
    }
    if ds.chain() == Chain::Algorand {
        let tx = ds.frame(FrameKind::TransactionCount).ok_or(ScalabilityError::FrameMissing {
            chain: ds.chain(),
            frame: FrameKind::TransactionCount,
        })?;
        let constant = cfg.algorand_block_time;
        let points =
            tx.dates().map(|date| Point { date, value: constant }).collect::<Vec<_>>();
        let series =
            ObservationSeries::new(ds.chain(), "avg_block_time", Unit::Seconds, points)
                .expect("dates come from a valid series");
        return Ok((series, Some(constant)));
    }
    Err(ScalabilityError::FrameMissing { chain: ds.chain(), frame: FrameKind::AvgBlockTime })
}

fn chain_scalability(
    ds: &ChainDataset,
    cfg: &ScalabilityConfig,
) -> Result<ChainScalability, ScalabilityError> {
    let tx = ds.frame(FrameKind::TransactionCount).ok_or(ScalabilityError::FrameMissing {
        chain: ds.chain(),
        frame: FrameKind::TransactionCount,
    })?;
    let throughput = throughput_stats(tx)?;
    let (bt, injected) = block_time_series(ds, cfg)?;
    let latency = latency_stats(&bt)?;
    let mean_confirmation_time = ds
        .frame(FrameKind::NetworkLiveness)
        .filter(|s| !s.is_empty())
        .map(|s| latency.mean_block_time * mean(&s.values().collect::<Vec<_>>()));
    Ok(ChainScalability { throughput, latency, injected_block_time: injected, mean_confirmation_time })
}

/// Compare two chains on peak daily transactions and mean block time.
pub fn compare_scalability(
    a: &ChainDataset,
    b: &ChainDataset,
    cfg: &ScalabilityConfig,
) -> Result<ScalabilityComparison, ScalabilityError> {
    let stats_a = chain_scalability(a, cfg)?;
    let stats_b = chain_scalability(b, cfg)?;

    let higher_peak_chain = strict_winner(
        (a.chain(), stats_a.throughput.peak_daily_tx),
        (b.chain(), stats_b.throughput.peak_daily_tx),
        true,
    );
    let lower_latency_chain = strict_winner(
        (a.chain(), stats_a.latency.mean_block_time),
        (b.chain(), stats_b.latency.mean_block_time),
        false,
    );

    let mut chains = BTreeMap::new();
    chains.insert(a.chain(), stats_a);
    chains.insert(b.chain(), stats_b);
    Ok(ScalabilityComparison {
        chains,
        verdicts: Verdicts { higher_peak_chain, lower_latency_chain },
    })
}

fn strict_winner(a: (Chain, f64), b: (Chain, f64), higher_wins: bool) -> Verdict {
    if a.1 == b.1 {
        return Verdict::Tie;
    }
    let a_wins = if higher_wins { a.1 > b.1 } else { a.1 < b.1 };
    Verdict::Chain(if a_wins { a.0 } else { b.0 })
}
