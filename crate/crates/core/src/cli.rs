//! Command-line front end wiring ingestion, indices, scalability, and
//! security into reproducible report files.
//!
//! Exit codes are a stable scripting contract: 0 success, 1 data or
//! validation failure, 2 usage, I/O, or input-parse failure. Every command
//! is deterministic given its inputs and flags (plus the seed for
//! simulations); the only non-reproducible output byte is the
//! `generated_at` timestamp in `report.json`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::decentralization::{
    aggregate_indices, layer_series, rolling_index_series, IndexKind, IndexRow, Layer,
    LayerSelector,
};
use crate::ingest::{
    load_chain_dataset, validate_dataset, write_frame_csv, DatasetLoad, FrameKind,
};
use crate::report::{
    decentralization_csv, fees_csv, scalability_csv, sha256_file, simulations_csv, InputRecord,
    Provenance, SecuritySection, TrilemmaReport,
};
use crate::scalability::{block_time_series, compare_scalability, ScalabilityConfig};
use crate::security::{
    burned_fee_stats, fee_security_correlation, simulate_attack, sweep_attack, AttackSimConfig,
    AttackSimResult, Scheme, SecurityError,
};
use crate::series::Chain;

#[derive(Debug, Parser)]
#[command(
    name = "trilemma",
    version,
    about = "Decentralization, scalability, and security analytics over daily on-chain data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn parse_chain(s: &str) -> Result<Chain, String> {
    s.parse()
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    match s.to_ascii_lowercase().as_str() {
        "seed-chain" | "seed_chain" => Ok(Scheme::SeedChain),
        "xor" | "xor-accumulator" | "xor_accumulator" => Ok(Scheme::XorAccumulator),
        other => Err(format!("unknown scheme `{other}` (expected seed-chain or xor)")),
    }
}

fn parse_index(s: &str) -> Result<IndexKind, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a chain's data directory against the dictionary ranges.
    ///
    /// Exit 0 when every point is in range, 1 when violations were found,
    /// 2 when the directory cannot be loaded.
    Validate {
        /// Directory of per-day CSV frames.
        data_dir: PathBuf,
        /// Chain the directory belongs to (algorand or ethereum2).
        #[arg(long, value_parser = parse_chain)]
        chain: Chain,
        /// Output directory for the JSON validation report.
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Decentralization indices per chain and layer, plus rolling series.
    Decentralization {
        /// Algorand data directory.
        algorand_dir: PathBuf,
        /// Ethereum 2.0 data directory.
        ethereum2_dir: PathBuf,
        /// Trailing window (in present days) for rolling index series.
        #[arg(long, default_value_t = 7)]
        window: usize,
        /// Cumulative-share threshold for the nakamoto coefficient.
        #[arg(long, default_value_t = 0.51)]
        threshold: f64,
        /// Rolling indices to emit (shannon, gini, nakamoto, hhi).
        #[arg(long, value_delimiter = ',', default_value = "shannon", value_parser = parse_index)]
        rolling_index: Vec<IndexKind>,
        /// Output directory.
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Throughput and latency comparison of two chains.
    Scalability {
        /// Algorand data directory.
        algorand_dir: PathBuf,
        /// Ethereum 2.0 data directory.
        ethereum2_dir: PathBuf,
        /// Constant block time injected when Algorand has no recorded frame.
        #[arg(long, default_value_t = 3.5)]
        algorand_block_time: f64,
        /// Output directory.
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Monte Carlo 51%-attack simulation over a randomness scheme.
    Simulate {
        /// Randomness scheme: seed-chain or xor.
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        /// Adversary stake fraction in [0, 1).
        #[arg(long)]
        alpha: Option<f64>,
        /// log2 of candidate reveals a grinding adversary may evaluate
        /// (xor scheme only).
        #[arg(long, default_value_t = 0)]
        grinding_bits: u32,
        /// Proposer selections per trial.
        #[arg(long, default_value_t = 10_000)]
        rounds: u64,
        /// Independent trials.
        #[arg(long, default_value_t = 10)]
        trials: u64,
        /// Honest validator count (stake granularity of the lottery).
        #[arg(long, default_value_t = 1000)]
        honest_validators: u32,
        /// RNG seed; identical seeds reproduce identical outputs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated stake levels to sweep; overrides --alpha and
        /// seeds entry i with seed XOR i.
        #[arg(long, value_delimiter = ',')]
        sweep: Option<Vec<f64>>,
        /// Output directory.
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Full report: decentralization, scalability, security, simulations,
    /// and provenance.
    Report {
        /// Algorand data directory.
        algorand_dir: PathBuf,
        /// Ethereum 2.0 data directory.
        ethereum2_dir: PathBuf,
        #[arg(long, default_value_t = 7)]
        window: usize,
        #[arg(long, default_value_t = 0.51)]
        threshold: f64,
        #[arg(long, default_value_t = 3.5)]
        algorand_block_time: f64,
        /// Stake levels for the simulation sweeps.
        #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.3, 0.51])]
        sim_alphas: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        sim_rounds: u64,
        #[arg(long, default_value_t = 10)]
        sim_trials: u64,
        /// Grinding bits for the xor-accumulator sweep.
        #[arg(long, default_value_t = 1)]
        grinding_bits: u32,
        #[arg(long, default_value_t = 1000)]
        honest_validators: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory.
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
}

/// Failure modes with their exit codes.
#[derive(Debug)]
enum CliError {
    /// Bad flags or invalid configuration: exit 2.
    Usage(String),
    /// Unreadable or unparsable inputs, unwritable outputs: exit 2.
    Io(String),
    /// Inputs loaded but the computation found problems: exit 1.
    Data(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Data(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Data(m) => f.write_str(m),
        }
    }
}

/// Run a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            if let CliError::Usage(_) = err {
                eprintln!("run `trilemma --help` for usage");
            }
            err.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Validate { data_dir, chain, out } => cmd_validate(&data_dir, chain, &out),
        Command::Decentralization {
            algorand_dir,
            ethereum2_dir,
            window,
            threshold,
            rolling_index,
            out,
        } => cmd_decentralization(
            &algorand_dir,
            &ethereum2_dir,
            window,
            threshold,
            &rolling_index,
            &out,
        ),
        Command::Scalability { algorand_dir, ethereum2_dir, algorand_block_time, out } => {
            cmd_scalability(&algorand_dir, &ethereum2_dir, algorand_block_time, &out)
        }
        Command::Simulate {
            scheme,
            alpha,
            grinding_bits,
            rounds,
            trials,
            honest_validators,
            seed,
            sweep,
            out,
        } => cmd_simulate(
            scheme,
            alpha,
            grinding_bits,
            rounds,
            trials,
            honest_validators,
            seed,
            sweep,
            &out,
        ),
        Command::Report {
            algorand_dir,
            ethereum2_dir,
            window,
            threshold,
            algorand_block_time,
            sim_alphas,
            sim_rounds,
            sim_trials,
            grinding_bits,
            honest_validators,
            seed,
            out,
        } => cmd_report(ReportArgs {
            algorand_dir,
            ethereum2_dir,
            window,
            threshold,
            algorand_block_time,
            sim_alphas,
            sim_rounds,
            sim_trials,
            grinding_bits,
            honest_validators,
            seed,
            out,
        }),
    }
}

fn load_inputs(dir: &Path, chain: Chain) -> Result<DatasetLoad, CliError> {
    load_chain_dataset(dir, chain).map_err(|e| CliError::Io(e.to_string()))
}

fn ensure_out_dir(out: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(out)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", out.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("cannot serialize {}: {e}", path.display())))?;
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn cmd_validate(data_dir: &Path, chain: Chain, out: &Path) -> Result<i32, CliError> {
    let load = load_inputs(data_dir, chain)?;
    let report = validate_dataset(&load.dataset);
    ensure_out_dir(out)?;
    let path = out.join(format!("validation_{chain}.json"));
    write_json(&path, &report)?;
    for skipped in &load.skipped_files {
        println!("note: skipped unrecognized file {skipped}");
    }
    println!(
        "validation {}: {} violation(s), report at {}",
        if report.pass { "PASS" } else { "FAIL" },
        report.violations.len(),
        path.display()
    );
    Ok(if report.pass { 0 } else { 1 })
}

const LAYER_ORDER: [Layer; 2] = [Layer::Consensus, Layer::Transaction];

fn cmd_decentralization(
    algorand_dir: &Path,
    ethereum2_dir: &Path,
    window: usize,
    threshold: f64,
    rolling: &[IndexKind],
    out: &Path,
) -> Result<i32, CliError> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(CliError::Usage(format!("--threshold {threshold} outside (0, 1)")));
    }
    if window < 2 {
        return Err(CliError::Usage(format!("--window must be at least 2, got {window}")));
    }
    let algorand = load_inputs(algorand_dir, Chain::Algorand)?;
    let ethereum = load_inputs(ethereum2_dir, Chain::Ethereum2)?;
    ensure_out_dir(out)?;

    let mut rows: Vec<IndexRow> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    let mut failures = false;
    for load in [&algorand, &ethereum] {
        for skipped in &load.skipped_files {
            notes.push(format!("{}: skipped unrecognized file {skipped}", load.dataset.chain()));
        }
    }

    for load in [&algorand, &ethereum] {
        let ds = &load.dataset;
        for layer in LAYER_ORDER {
            let sel = LayerSelector { chain: ds.chain(), layer };
            match aggregate_indices(ds, sel, threshold) {
                Ok(row) => rows.push(row),
                Err(e) => {
                    failures = true;
                    notes.push(format!("{} {layer}: {e}", ds.chain()));
                }
            }
            for &index in rolling {
                let series = match layer_series(ds, sel) {
                    Ok(s) => s,
                    // Already noted by the aggregate failure above.
                    Err(_) => continue,
                };
                match rolling_index_series(series, window, index, threshold) {
                    Ok(rolled) => {
                        let path = out.join(format!(
                            "rolling_{}_{layer}_{index}.csv",
                            ds.chain()
                        ));
                        write_frame_csv(&rolled, &path)
                            .map_err(|e| CliError::Io(e.to_string()))?;
                    }
                    Err(e) => {
                        failures = true;
                        notes.push(format!("{} {layer} rolling {index}: {e}", ds.chain()));
                    }
                }
            }
        }
    }

    let payload = json!({
        "config": { "window": window, "threshold": threshold },
        "rows": rows,
        "notes": notes,
    });
    write_json(&out.join("decentralization.json"), &payload)?;
    write_text(&out.join("decentralization.csv"), &decentralization_csv(&rows))?;
    for note in &notes {
        println!("note: {note}");
    }
    println!("decentralization: {} of 4 rows computed, output in {}", rows.len(), out.display());
    Ok(if failures { 1 } else { 0 })
}

fn cmd_scalability(
    algorand_dir: &Path,
    ethereum2_dir: &Path,
    algorand_block_time: f64,
    out: &Path,
) -> Result<i32, CliError> {
    if !algorand_block_time.is_finite() || algorand_block_time <= 0.0 {
        return Err(CliError::Usage(format!(
            "--algorand-block-time must be positive, got {algorand_block_time}"
        )));
    }
    let algorand = load_inputs(algorand_dir, Chain::Algorand)?;
    let ethereum = load_inputs(ethereum2_dir, Chain::Ethereum2)?;
    ensure_out_dir(out)?;
    let cfg = ScalabilityConfig { algorand_block_time };

    let comparison = compare_scalability(&algorand.dataset, &ethereum.dataset, &cfg)
        .map_err(|e| CliError::Data(e.to_string()))?;
    write_json(&out.join("scalability.json"), &comparison)?;
    write_text(&out.join("scalability.csv"), &scalability_csv(&comparison))?;

    // Plot files carry exactly the points the statistics were computed from.
    for load in [&algorand, &ethereum] {
        let ds = &load.dataset;
        if let Some(tx) = ds.frame(FrameKind::TransactionCount) {
            let path = out.join(format!("plot_{}_daily_transactions.csv", ds.chain()));
            write_frame_csv(tx, &path).map_err(|e| CliError::Io(e.to_string()))?;
        }
        let (bt, _) = block_time_series(ds, &cfg).map_err(|e| CliError::Data(e.to_string()))?;
        let path = out.join(format!("plot_{}_daily_block_time.csv", ds.chain()));
        write_frame_csv(&bt, &path).map_err(|e| CliError::Io(e.to_string()))?;
    }

    println!(
        "scalability: higher peak = {}, lower latency = {}, output in {}",
        verdict_text(comparison.verdicts.higher_peak_chain),
        verdict_text(comparison.verdicts.lower_latency_chain),
        out.display()
    );
    Ok(0)
}

fn verdict_text(v: crate::scalability::Verdict) -> String {
    match v {
        crate::scalability::Verdict::Chain(c) => c.to_string(),
        crate::scalability::Verdict::Tie => "tie".to_string(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    scheme: Scheme,
    alpha: Option<f64>,
    grinding_bits: u32,
    rounds: u64,
    trials: u64,
    honest_validators: u32,
    seed: u64,
    sweep: Option<Vec<f64>>,
    out: &Path,
) -> Result<i32, CliError> {
    let template = AttackSimConfig {
        scheme,
        adversary_stake: 0.0,
        honest_validators,
        rounds,
        trials,
        grinding_bits,
        rng_seed: seed,
    };
    let results = match (sweep, alpha) {
        (Some(alphas), _) => sweep_attack(&template, &alphas).map_err(usage_from_security)?,
        (None, Some(alpha)) => {
            let cfg = AttackSimConfig { adversary_stake: alpha, ..template };
            vec![simulate_attack(&cfg).map_err(usage_from_security)?]
        }
        (None, None) => {
            return Err(CliError::Usage("either --alpha or --sweep is required".into()));
        }
    };
    ensure_out_dir(out)?;
    write_json(&out.join("simulation.json"), &results)?;
    write_text(&out.join("simulation.csv"), &simulations_csv(&results))?;
    for r in &results {
        println!(
            "{} alpha={} g={}: share={:.6} bias={:+.6} stderr={:.6}",
            r.config.scheme,
            r.config.adversary_stake,
            r.config.grinding_bits,
            r.adversary_share,
            r.bias,
            r.stderr
        );
    }
    println!("simulation output in {}", out.display());
    Ok(0)
}

fn usage_from_security(e: SecurityError) -> CliError {
    match e {
        SecurityError::InvalidConfig(msg) => CliError::Usage(msg),
        other => CliError::Data(other.to_string()),
    }
}

struct ReportArgs {
    algorand_dir: PathBuf,
    ethereum2_dir: PathBuf,
    window: usize,
    threshold: f64,
    algorand_block_time: f64,
    sim_alphas: Vec<f64>,
    sim_rounds: u64,
    sim_trials: u64,
    grinding_bits: u32,
    honest_validators: u32,
    seed: u64,
    out: PathBuf,
}

fn cmd_report(args: ReportArgs) -> Result<i32, CliError> {
    if !(args.threshold > 0.0 && args.threshold < 1.0) {
        return Err(CliError::Usage(format!("--threshold {} outside (0, 1)", args.threshold)));
    }
    let algorand = load_inputs(&args.algorand_dir, Chain::Algorand)?;
    let ethereum = load_inputs(&args.ethereum2_dir, Chain::Ethereum2)?;
    ensure_out_dir(&args.out)?;

    let mut notes: Vec<String> = Vec::new();
    let mut failures = false;
    for load in [&algorand, &ethereum] {
        for skipped in &load.skipped_files {
            notes.push(format!("{}: skipped unrecognized file {skipped}", load.dataset.chain()));
        }
    }

    // Decentralization rows.
    let mut rows = Vec::new();
    for load in [&algorand, &ethereum] {
        for layer in LAYER_ORDER {
            let sel = LayerSelector { chain: load.dataset.chain(), layer };
            match aggregate_indices(&load.dataset, sel, args.threshold) {
                Ok(row) => rows.push(row),
                Err(e) => {
                    failures = true;
                    notes.push(format!("{} {layer}: {e}", load.dataset.chain()));
                }
            }
        }
    }

    // Scalability comparison.
    let cfg = ScalabilityConfig { algorand_block_time: args.algorand_block_time };
    let scalability = match compare_scalability(&algorand.dataset, &ethereum.dataset, &cfg) {
        Ok(cmp) => Some(cmp),
        Err(e) => {
            failures = true;
            notes.push(format!("scalability: {e}"));
            None
        }
    };

    // Security: fee statistics and fee/transaction correlation per chain.
    let mut fees = BTreeMap::new();
    let mut correlations = BTreeMap::new();
    for load in [&algorand, &ethereum] {
        let ds = &load.dataset;
        match ds.frame(FrameKind::BurnedFees) {
            Some(fee_frame) => {
                match burned_fee_stats(fee_frame) {
                    Ok(stats) => {
                        fees.insert(ds.chain(), stats);
                    }
                    Err(e) => {
                        failures = true;
                        notes.push(format!("{} burned fees: {e}", ds.chain()));
                    }
                }
                // An undefined correlation (constant series, too little
                // overlap) is a property of the data; report it as a note
                // and leave the statistic absent.
                match ds.frame(FrameKind::TransactionCount) {
                    Some(tx) => match fee_security_correlation(fee_frame, tx) {
                        Ok(corr) => {
                            correlations.insert(ds.chain(), corr);
                        }
                        Err(e) => {
                            notes.push(format!("{} fee/tx correlation: {e}", ds.chain()));
                        }
                    },
                    None => {
                        notes.push(format!(
                            "{} fee/tx correlation: frame `transaction_count` missing",
                            ds.chain()
                        ));
                    }
                }
            }
            None => {
                failures = true;
                notes.push(format!("{}: frame `burned_fees` missing", ds.chain()));
            }
        }
    }

    // Optional frames that feed no section: absence is a note, not a failure.
    for (load, optional) in [
        (&algorand, &[FrameKind::ContractCalls, FrameKind::UniqueCalls, FrameKind::BlockReward][..]),
        (&ethereum, &[FrameKind::GasLimit, FrameKind::AvgGasUsed, FrameKind::NetworkLiveness][..]),
    ] {
        for &kind in optional {
            if load.dataset.frame(kind).is_none() {
                notes.push(format!(
                    "{}: optional frame `{kind}` absent",
                    load.dataset.chain()
                ));
            }
        }
    }

    // Attack simulations: an unbiased baseline sweep and a grinding sweep.
    let mut simulations: Vec<AttackSimResult> = Vec::new();
    for (scheme, grinding_bits) in
        [(Scheme::SeedChain, 0), (Scheme::XorAccumulator, args.grinding_bits)]
    {
        let template = AttackSimConfig {
            scheme,
            adversary_stake: 0.0,
            honest_validators: args.honest_validators,
            rounds: args.sim_rounds,
            trials: args.sim_trials,
            grinding_bits,
            rng_seed: args.seed,
        };
        match sweep_attack(&template, &args.sim_alphas) {
            Ok(results) => simulations.extend(results),
            Err(e) => return Err(usage_from_security(e)),
        }
    }

    // Provenance: digest every file the loaders consumed.
    let mut inputs = Vec::new();
    for load in [&algorand, &ethereum] {
        for path in &load.loaded_files {
            let sha256 = sha256_file(path)
                .map_err(|e| CliError::Io(format!("cannot digest {}: {e}", path.display())))?;
            inputs.push(InputRecord { path: path.display().to_string(), sha256 });
        }
    }
    inputs.sort();

    let config_echo = json!({
        "algorand_dir": args.algorand_dir.display().to_string(),
        "ethereum2_dir": args.ethereum2_dir.display().to_string(),
        "window": args.window,
        "threshold": args.threshold,
        "algorand_block_time": args.algorand_block_time,
        "sim_alphas": args.sim_alphas,
        "sim_rounds": args.sim_rounds,
        "sim_trials": args.sim_trials,
        "grinding_bits": args.grinding_bits,
        "honest_validators": args.honest_validators,
        "seed": args.seed,
    });

    let report = TrilemmaReport {
        decentralization: rows,
        scalability,
        security: SecuritySection { fees, fee_tx_correlation: correlations, simulations },
        notes,
        provenance: Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            generated_at: chrono::Utc::now().to_rfc3339(),
            config: config_echo,
            inputs,
        },
    };

    write_json(&args.out.join("report.json"), &report)?;
    write_text(
        &args.out.join("decentralization.csv"),
        &decentralization_csv(&report.decentralization),
    )?;
    write_text(&args.out.join("simulations.csv"), &simulations_csv(&report.security.simulations))?;
    write_text(
        &args.out.join("fees.csv"),
        &fees_csv(&report.security.fees, &report.security.fee_tx_correlation),
    )?;
    if let Some(cmp) = &report.scalability {
        write_text(&args.out.join("scalability.csv"), &scalability_csv(cmp))?;
    }

    for note in &report.notes {
        println!("note: {note}");
    }
    println!("report written to {}", args.out.join("report.json").display());
    Ok(if failures { 1 } else { 0 })
}

/// Apply the optional `TRILEMMA_THREADS` cap to the global thread pool.
/// Call once at process start, before any parallel work.
pub fn init_thread_pool_from_env() {
    if let Ok(value) = std::env::var("TRILEMMA_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring invalid TRILEMMA_THREADS value `{value}`"),
        }
    }
}
