//! Synthetic data directories in the canonical CSV layout.
//!
//! Values default to in-dictionary ranges so a freshly written fixture
//! validates cleanly; tests that want violations write their own rows.

use std::path::Path;

/// Sequential ISO dates starting at 2023-01-01.
pub fn date(i: usize) -> String {
    let start = chrono::NaiveDate::from_ymd_opt(2023, 1, 1).unwrap();
    (start + chrono::Days::new(i as u64)).format("%Y-%m-%d").to_string()
}

/// Render a CSV with a `date` column plus the given value columns, one row
/// per day. All columns must have equal length.
pub fn frame_csv(columns: &[(&str, &[f64])]) -> String {
    let rows = columns.first().map(|(_, v)| v.len()).unwrap_or(0);
    for (name, values) in columns {
        assert_eq!(values.len(), rows, "column {name} length mismatch");
    }
    let mut out = String::from("date");
    for (name, _) in columns {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for i in 0..rows {
        out.push_str(&date(i));
        for (_, values) in columns {
            out.push(',');
            out.push_str(&values[i].to_string());
        }
        out.push('\n');
    }
    out
}

pub fn write_file(dir: &Path, name: &str, contents: &str) {
    std::fs::write(dir.join(name), contents).unwrap();
}

/// Minimal Algorand directory: proposer counts plus the two-column
/// transaction/fee file.
pub fn write_algorand_dir(dir: &Path, proposer: &[f64], tx: &[f64], fees: &[f64]) {
    write_file(
        dir,
        "al_block_data_proposercount_reward.csv",
        &frame_csv(&[("proposer_count", proposer)]),
    );
    write_file(
        dir,
        "al_transac_data_count_fee.csv",
        &frame_csv(&[("transaction_count", tx), ("burned_fees", fees)]),
    );
}

/// Minimal Ethereum 2.0 directory: validator counts, transactions, fees, and
/// block times.
pub fn write_ethereum_dir(
    dir: &Path,
    validators: &[f64],
    tx: &[f64],
    fees: &[f64],
    block_time: &[f64],
) {
    write_file(dir, "validator_data.csv", &frame_csv(&[("validator_count", validators)]));
    write_file(dir, "daily_transactions.csv", &frame_csv(&[("transaction_count", tx)]));
    write_file(dir, "burned_fees.csv", &frame_csv(&[("burned_fees", fees)]));
    write_file(dir, "avg_blk_time.csv", &frame_csv(&[("avg_block_time", block_time)]));
}

/// Every Algorand frame file the dictionary names, all values in range.
pub fn write_full_algorand_dir(dir: &Path, days: usize) {
    let proposer: Vec<f64> = (0..days).map(|i| 40.0 + (i % 20) as f64).collect();
    let tx: Vec<f64> = (0..days).map(|i| 1000.0 + 150.0 * i as f64).collect();
    let fees: Vec<f64> = (0..days).map(|i| 10.0 + 2.5 * i as f64).collect();
    let reward: Vec<f64> = (0..days).map(|i| 150.0 + i as f64).collect();
    let calls: Vec<f64> = (0..days).map(|i| 50.0 + 3.0 * i as f64).collect();
    let unique: Vec<f64> = (0..days).map(|i| 10.0 + i as f64).collect();

    write_algorand_dir(dir, &proposer, &tx, &fees);
    write_file(dir, "al_block_data_reward.csv", &frame_csv(&[("block_reward", &reward)]));
    write_file(
        dir,
        "al_contracts_calls_unique_calls.csv",
        &frame_csv(&[("contract_calls", &calls), ("unique_calls", &unique)]),
    );
    let mut block_info = String::from("timestamp,address,height\n");
    for i in 0..days {
        block_info.push_str(&format!("{}T00:00:00,addr{i},{}\n", date(i), 1000 + i));
    }
    write_file(dir, "al_block_data.csv", &block_info);
}

/// Every Ethereum 2.0 frame file the dictionary names, all values in range.
pub fn write_full_ethereum_dir(dir: &Path, days: usize) {
    let validators: Vec<f64> = (0..days).map(|i| 25_000.0 + 10.0 * i as f64).collect();
    let tx: Vec<f64> = (0..days).map(|i| 900_000.0 + 1000.0 * i as f64).collect();
    let fees: Vec<f64> = (0..days).map(|i| 4000.0 + 20.0 * i as f64).collect();
    let block_time: Vec<f64> = (0..days).map(|i| 14.0 + 0.01 * i as f64).collect();
    let blocks: Vec<f64> = (0..days).map(|i| 7000.0 + (i % 100) as f64).collect();
    let gas_used: Vec<f64> = (0..days).map(|i| 1_000_000.0 + 10.0 * i as f64).collect();
    let gas_limit: Vec<f64> = (0..days).map(|i| 29_000_000.0 + 10.0 * i as f64).collect();
    let balance: Vec<f64> = (0..days).map(|i| 32.5 + 0.001 * i as f64).collect();
    let participation: Vec<f64> = (0..days).map(|i| 0.95 + 0.0001 * i as f64).collect();
    let liveness: Vec<f64> = (0..days).map(|i| 2.0 + (i % 10) as f64).collect();

    write_ethereum_dir(dir, &validators, &tx, &fees, &block_time);
    write_file(dir, "daily_block_count.csv", &frame_csv(&[("daily_block_count", &blocks)]));
    write_file(dir, "gas_used_avg_by_blk.csv", &frame_csv(&[("avg_gas_used", &gas_used)]));
    write_file(dir, "gas_limit.csv", &frame_csv(&[("gas_limit", &gas_limit)]));
    write_file(
        dir,
        "validator_avg_balance.csv",
        &frame_csv(&[("avg_validator_balance", &balance)]),
    );
    write_file(
        dir,
        "participation_rate.csv",
        &frame_csv(&[("participation_rate", &participation)]),
    );
    write_file(dir, "network_Liveness.csv", &frame_csv(&[("network_liveness", &liveness)]));
}
