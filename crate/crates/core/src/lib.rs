//! Analytics for the blockchain trilemma over per-day on-chain data:
//! decentralization indices, throughput/latency statistics, burned-fee
//! summaries, and a Monte Carlo 51%-attack simulator comparing two
//! consensus-randomness schemes.
//!
//! Data enters as per-day CSV frames in a fixed dictionary (see [`ingest`]),
//! becomes typed [`series::ObservationSeries`], and flows into pure,
//! stateless computations. Everything is deterministic given inputs and, for
//! simulations, the RNG seed.

pub mod cli;
pub mod decentralization;
pub mod ingest;
mod math;
pub mod report;
pub mod scalability;
pub mod security;
pub mod series;

pub use decentralization::{
    aggregate_indices, compute_indices, gini_coefficient, hhi, nakamoto_coefficient, normalize,
    rolling_index_series, shannon_entropy_index, IndexError, IndexKind, IndexRow, IndexValues,
    Layer, LayerSelector, WeightVector, DEFAULT_NAKAMOTO_THRESHOLD,
};
pub use ingest::{
    align_series, load_chain_dataset, load_frame, validate_dataset, write_frame_csv,
    ChainDataset, DatasetLoad, FrameKind, FrameSchema, IngestError, ValidationReport, Violation,
};
pub use report::TrilemmaReport;
pub use scalability::{
    compare_scalability, latency_stats, throughput_stats, LatencyStats, ScalabilityComparison,
    ScalabilityConfig, ScalabilityError, ThroughputStats, Verdict,
};
pub use security::{
    burned_fee_stats, fee_security_correlation, simulate_attack, sweep_attack, AttackSimConfig,
    AttackSimResult, FeeStats, Scheme, SecurityError,
};
pub use series::{Chain, ObservationSeries, Point, SeriesError, Unit};
