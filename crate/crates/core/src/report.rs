//! Combined report assembly and provenance.
//!
//! A report is self-describing: it echoes the configuration it was produced
//! with and carries a SHA-256 digest of every input file consumed, so
//! re-running with the recorded config reproduces it bit-identically apart
//! from the `generated_at` timestamp.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::decentralization::IndexRow;
use crate::scalability::ScalabilityComparison;
use crate::security::{AttackSimResult, FeeStats};
use crate::series::Chain;

/// One consumed input file and the digest of its bytes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InputRecord {
    pub path: String,
    pub sha256: String,
}

/// Where a report came from: tool version, configuration echo, inputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub tool_version: String,
    /// RFC 3339 creation time; the only field excluded from reproducibility.
    pub generated_at: String,
    pub config: serde_json::Value,
    pub inputs: Vec<InputRecord>,
}

/// Security section: per-chain fee statistics, per-chain fee/transaction
/// correlation, and the attack-simulation sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SecuritySection {
    pub fees: BTreeMap<Chain, FeeStats>,
    pub fee_tx_correlation: BTreeMap<Chain, f64>,
    pub simulations: Vec<AttackSimResult>,
}

/// The combined decentralization / scalability / security report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrilemmaReport {
    pub decentralization: Vec<IndexRow>,
    pub scalability: Option<ScalabilityComparison>,
    pub security: SecuritySection,
    /// Human-readable conditions encountered while assembling the report
    /// (absent optional frames, skipped files, per-row failures).
    pub notes: Vec<String>,
    pub provenance: Provenance,
}

/// SHA-256 of a file's bytes, hex-encoded.
pub fn sha256_file(path: &Path) -> std::io::Result<String> {
    let bytes = std::fs::read(path)?;
    let digest = Sha256::digest(&bytes);
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}

/// CSV for decentralization rows, mirroring the published table layout.
pub fn decentralization_csv(rows: &[IndexRow]) -> String {
    let mut out = String::from("chain,layer,shannon_entropy,gini,nakamoto,hhi,unit_count\r\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\r\n",
            r.chain, r.layer, r.shannon_entropy, r.gini, r.nakamoto, r.hhi, r.unit_count
        ));
    }
    out
}

/// CSV for simulation results.
pub fn simulations_csv(results: &[AttackSimResult]) -> String {
    let mut out = String::from(
        "scheme,alpha,grinding_bits,rounds,trials,adversary_share,bias,stderr,max_consecutive,rng_seed\r\n",
    );
    for r in results {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\r\n",
            r.config.scheme,
            r.config.adversary_stake,
            r.config.grinding_bits,
            r.config.rounds,
            r.config.trials,
            r.adversary_share,
            r.bias,
            r.stderr,
            r.max_consecutive_adversary,
            r.config.rng_seed
        ));
    }
    out
}

/// CSV for per-chain fee statistics and correlations.
pub fn fees_csv(
    fees: &BTreeMap<Chain, FeeStats>,
    correlations: &BTreeMap<Chain, f64>,
) -> String {
    let mut out = String::from("chain,daily_mean,total,std,days,fee_tx_correlation\r\n");
    for (chain, stats) in fees {
        let corr = correlations
            .get(chain)
            .map(|c| c.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\r\n",
            chain, stats.daily_mean, stats.total, stats.std, stats.days, corr
        ));
    }
    out
}

/// CSV flattening of a scalability comparison.
pub fn scalability_csv(cmp: &ScalabilityComparison) -> String {
    let mut out = String::from(
        "chain,mean_daily_tx,peak_daily_tx,peak_date,mean_tps,peak_tps,mean_block_time,std_block_time\r\n",
    );
    for (chain, stats) in &cmp.chains {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\r\n",
            chain,
            stats.throughput.mean_daily_tx,
            stats.throughput.peak_daily_tx,
            stats.throughput.peak_date.format("%Y-%m-%d"),
            stats.throughput.mean_tps,
            stats.throughput.peak_tps,
            stats.latency.mean_block_time,
            stats.latency.std_block_time
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decentralization::Layer;
    use crate::security::{AttackSimConfig, Scheme};

    #[test]
    fn sha256_of_known_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.csv");
        std::fs::write(&path, b"abc").unwrap();
        assert_eq!(
            sha256_file(&path).unwrap(),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn simulations_csv_has_contract_columns() {
        let header = simulations_csv(&[]);
        assert_eq!(
            header.trim_end(),
            "scheme,alpha,grinding_bits,rounds,trials,adversary_share,bias,stderr,max_consecutive,rng_seed"
        );
    }

    #[test]
    fn simulations_csv_renders_rows() {
        let result = AttackSimResult {
            config: AttackSimConfig {
                scheme: Scheme::XorAccumulator,
                adversary_stake: 0.3,
                honest_validators: 10,
                rounds: 100,
                trials: 2,
                grinding_bits: 1,
                rng_seed: 42,
            },
            adversary_share: 0.375,
            bias: 0.075,
            stderr: 0.01,
            max_consecutive_adversary: 5,
            ground_rounds: 70,
            ground_hits: 36,
        };
        let csv = simulations_csv(&[result]);
        let row = csv.lines().nth(1).unwrap().trim_end();
        assert_eq!(row, "xor_accumulator,0.3,1,100,2,0.375,0.075,0.01,5,42");
    }

    #[test]
    fn decentralization_csv_renders_rows() {
        let row = IndexRow {
            chain: Chain::Algorand,
            layer: Layer::Consensus,
            shannon_entropy: 10.0,
            gini: 0.9,
            nakamoto: 6,
            hhi: 0.1,
            unit_count: 10,
        };
        let csv = decentralization_csv(&[row]);
        assert_eq!(
            csv.lines().nth(1).unwrap().trim_end(),
            "algorand,consensus,10,0.9,6,0.1,10"
        );
    }

    #[test]
    fn fees_csv_blank_when_correlation_missing() {
        let mut fees = BTreeMap::new();
        fees.insert(
            Chain::Algorand,
            FeeStats { daily_mean: 15.0, total: 30.0, std: 5.0, days: 2 },
        );
        let csv = fees_csv(&fees, &BTreeMap::new());
        assert_eq!(csv.lines().nth(1).unwrap().trim_end(), "algorand,15,30,5,2,");
    }
}
