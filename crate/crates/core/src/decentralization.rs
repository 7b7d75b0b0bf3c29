//! Decentralization indices over a normalized weight vector.
//!
//! All four indices are functions of the share vector `p_i = v_i / Σ v_j`,
//! where each unit `v_i` is one day's value of the selected layer frame
//! (proposer or validator count for the consensus layer, transaction count
//! for the transaction layer). Zero-valued days carry no share and are
//! dropped before normalization.
//!
//! * entropy index: `exp(−Σ p_i ln p_i)` — the exponential of natural-log
//!   entropy (perplexity). Ranges from 1 (one unit holds everything) to N
//!   (uniform). Computed in log space; the literal product form underflows
//!   near N ~ 10^3.
//! * concentration (HHI): `Σ p_i²`.
//! * gini: `1 − Σ p_i²`, the Gini–Simpson diversity form. This is the exact
//!   complement of HHI by construction, not the Lorenz-curve Gini.
//! * nakamoto coefficient: the minimal number of largest units whose
//!   cumulative share strictly exceeds a threshold (default 0.51).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{ChainDataset, FrameKind};
use crate::math::{compensated_sum, CompensatedAccumulator};
use crate::series::{Chain, ObservationSeries, Point, Unit};

/// Default cumulative-share threshold for the nakamoto coefficient.
pub const DEFAULT_NAKAMOTO_THRESHOLD: f64 = 0.51;

#[derive(Debug, Error, PartialEq)]
pub enum IndexError {
    #[error("all values are zero; no weight vector exists")]
    AllZero,
    #[error("negative value {value} at position {index}")]
    NegativeValue { index: usize, value: f64 },
    #[error("non-finite value at position {0}")]
    NonFiniteValue(usize),
    #[error("threshold {0} outside (0, 1)")]
    ThresholdOutOfRange(f64),
    #[error("frame `{frame}` missing from {chain} dataset")]
    FrameMissing { chain: Chain, frame: FrameKind },
    #[error("window {window} exceeds series length {len}")]
    WindowTooLarge { window: usize, len: usize },
    #[error("window must be at least 2, got {0}")]
    WindowTooSmall(usize),
}

/// Normalized share vector. Shares are nonnegative, sum to 1, and preserve
/// the input order; `source_total` keeps the denominator so raw values can be
/// reconstructed as `share * source_total`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    source_total: f64,
}

impl WeightVector {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn source_total(&self) -> f64 {
        self.source_total
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn nonzero_count(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }

    /// Reconstruct the raw values the vector was built from (up to rounding).
    pub fn raw_values(&self) -> Vec<f64> {
        self.weights.iter().map(|w| w * self.source_total).collect()
    }
}

/// Turn raw nonnegative values into shares of their total.
pub fn normalize(values: &[f64]) -> Result<WeightVector, IndexError> {
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(IndexError::NonFiniteValue(i));
        }
        if v < 0.0 {
            return Err(IndexError::NegativeValue { index: i, value: v });
        }
    }
    let total = compensated_sum(values.iter().copied());
    if total <= 0.0 {
        return Err(IndexError::AllZero);
    }
    let weights = values.iter().map(|&v| v / total).collect();
    Ok(WeightVector { weights, source_total: total })
}

/// Entropy index `exp(−Σ p_i ln p_i)`. Zero shares contribute factor 1
/// (the 0⁰ → 1 convention).
pub fn shannon_entropy_index(w: &WeightVector) -> f64 {
    let neg_entropy =
        compensated_sum(w.weights.iter().filter(|&&p| p > 0.0).map(|&p| p * p.ln()));
    (-neg_entropy).exp()
}

fn share_concentration(w: &WeightVector) -> f64 {
    compensated_sum(w.weights.iter().map(|&p| p * p))
}

/// Gini–Simpson index `1 − Σ p_i²`; complementary to [`hhi`].
pub fn gini_coefficient(w: &WeightVector) -> f64 {
    1.0 - share_concentration(w)
}

/// Herfindahl–Hirschman concentration `Σ p_i²`.
pub fn hhi(w: &WeightVector) -> f64 {
    share_concentration(w)
}

/// Minimal number of largest units whose cumulative share strictly exceeds
/// `threshold`. Ties in share values may be taken in any order; the result is
/// order-independent.
pub fn nakamoto_coefficient(w: &WeightVector, threshold: f64) -> Result<u64, IndexError> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(IndexError::ThresholdOutOfRange(threshold));
    }
    let mut shares: Vec<f64> = w.weights.iter().copied().filter(|&p| p > 0.0).collect();
    shares.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut cumulative = CompensatedAccumulator::default();
    for (k, &p) in shares.iter().enumerate() {
        cumulative.add(p);
        if cumulative.value() > threshold {
            return Ok(k as u64 + 1);
        }
    }
    // The full mass is 1 > threshold; only float dust can land here.
    Ok(shares.len() as u64)
}

/// The two layers decentralization is measured on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    Consensus,
    Transaction,
}

impl Layer {
    pub fn as_str(self) -> &'static str {
        match self {
            Layer::Consensus => "consensus",
            Layer::Transaction => "transaction",
        }
    }
}

impl std::fmt::Display for Layer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Picks the frame measuring a layer on a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerSelector {
    pub chain: Chain,
    pub layer: Layer,
}

impl LayerSelector {
    /// The frame the selector maps to: proposer count (Algorand consensus),
    /// validator count (Ethereum 2.0 consensus), transaction count
    /// (transaction layer on either chain).
    pub fn frame(self) -> FrameKind {
        match (self.chain, self.layer) {
            (Chain::Algorand, Layer::Consensus) => FrameKind::ProposerCount,
            (Chain::Ethereum2, Layer::Consensus) => FrameKind::ValidatorCount,
            (_, Layer::Transaction) => FrameKind::TransactionCount,
        }
    }
}

/// Fetch the series a selector maps to.
pub fn layer_series(
    ds: &ChainDataset,
    sel: LayerSelector,
) -> Result<&ObservationSeries, IndexError> {
    let frame = sel.frame();
    ds.frame(frame).ok_or(IndexError::FrameMissing { chain: ds.chain(), frame })
}

/// One row of the decentralization report: all four indices for one
/// (chain, layer) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexRow {
    pub chain: Chain,
    pub layer: Layer,
    pub shannon_entropy: f64,
    pub gini: f64,
    pub nakamoto: u64,
    pub hhi: f64,
    /// Number of nonzero units the weight vector was built from.
    pub unit_count: u64,
}

/// The four index values over one population of units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IndexValues {
    pub shannon_entropy: f64,
    pub gini: f64,
    pub nakamoto: u64,
    pub hhi: f64,
    /// Number of nonzero units the weight vector was built from.
    pub unit_count: u64,
}

/// Compute all four indices from raw values: drop zero units, normalize
/// once, derive everything from that weight vector.
pub fn compute_indices(values: &[f64], threshold: f64) -> Result<IndexValues, IndexError> {
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(IndexError::NonFiniteValue(i));
        }
        if v < 0.0 {
            return Err(IndexError::NegativeValue { index: i, value: v });
        }
    }
    let positive: Vec<f64> = values.iter().copied().filter(|&v| v > 0.0).collect();
    if positive.is_empty() {
        return Err(IndexError::AllZero);
    }
    let w = normalize(&positive)?;
    let concentration = share_concentration(&w);
    Ok(IndexValues {
        shannon_entropy: shannon_entropy_index(&w),
        gini: 1.0 - concentration,
        nakamoto: nakamoto_coefficient(&w, threshold)?,
        hhi: concentration,
        unit_count: w.len() as u64,
    })
}

/// Compute all four indices over the whole layer series, treating each
/// positive day as one unit.
pub fn aggregate_indices(
    ds: &ChainDataset,
    sel: LayerSelector,
    threshold: f64,
) -> Result<IndexRow, IndexError> {
    let series = layer_series(ds, sel)?;
    let v = compute_indices(&series.values().collect::<Vec<_>>(), threshold)?;
    Ok(IndexRow {
        chain: sel.chain,
        layer: sel.layer,
        shannon_entropy: v.shannon_entropy,
        gini: v.gini,
        nakamoto: v.nakamoto,
        hhi: v.hhi,
        unit_count: v.unit_count,
    })
}

/// Which index a rolling series tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexKind {
    Shannon,
    Gini,
    Nakamoto,
    Hhi,
}

impl IndexKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IndexKind::Shannon => "shannon",
            IndexKind::Gini => "gini",
            IndexKind::Nakamoto => "nakamoto",
            IndexKind::Hhi => "hhi",
        }
    }

    pub const ALL: [IndexKind; 4] =
        [IndexKind::Shannon, IndexKind::Gini, IndexKind::Nakamoto, IndexKind::Hhi];
}

impl std::fmt::Display for IndexKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "shannon" | "shannon_entropy" | "entropy" => Ok(IndexKind::Shannon),
            "gini" => Ok(IndexKind::Gini),
            "nakamoto" => Ok(IndexKind::Nakamoto),
            "hhi" => Ok(IndexKind::Hhi),
            other => Err(format!("unknown index `{other}`")),
        }
    }
}

/// Rolling index over trailing windows of present days.
///
/// For each date with `window` present days ending at it (the window counts
/// points of the series, not calendar days), emit the index over those
/// values. Windows containing only zeros emit no point.
pub fn rolling_index_series(
    series: &ObservationSeries,
    window: usize,
    index: IndexKind,
    threshold: f64,
) -> Result<ObservationSeries, IndexError> {
    if window < 2 {
        return Err(IndexError::WindowTooSmall(window));
    }
    if series.len() < window {
        return Err(IndexError::WindowTooLarge { window, len: series.len() });
    }
    let points = series.points();
    let mut out = Vec::with_capacity(points.len() - window + 1);
    for end in (window - 1)..points.len() {
        let slice = &points[end + 1 - window..=end];
        let values: Vec<f64> = slice.iter().map(|p| p.value).collect();
        if !values.iter().any(|&v| v > 0.0) {
            continue;
        }
        let computed = compute_indices(&values, threshold)?;
        let value = match index {
            IndexKind::Shannon => computed.shannon_entropy,
            IndexKind::Gini => computed.gini,
            IndexKind::Nakamoto => computed.nakamoto as f64,
            IndexKind::Hhi => computed.hhi,
        };
        out.push(Point { date: points[end].date, value });
    }
    let name = format!("{}_{}_w{}", series.name(), index.as_str(), window);
    Ok(ObservationSeries::new(series.chain(), name, Unit::None, out)
        .expect("rolling points inherit the source's strict date order"))
}
