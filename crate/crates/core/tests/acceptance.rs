//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Criteria 4 and the published-data halves of 5 and 6 are diagnostics that
//! need the original datasets; point `TRILEMMA_REFERENCE_DATA` at a directory
//! with `algorand/` and `ethereum2/` subdirectories to run them. Without it
//! they print SKIP and the hard synthetic checks still run.

mod common;

use std::path::PathBuf;
use std::sync::{Mutex, MutexGuard};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::{fixtures, oracle};
use trilemma::decentralization::{compute_indices, IndexValues};
use trilemma::ingest::{load_chain_dataset, FrameKind, FrameSchema};
use trilemma::scalability::{compare_scalability, ScalabilityConfig, Verdict};
use trilemma::security::{burned_fee_stats, simulate_attack, AttackSimConfig, Scheme};
use trilemma::series::{Chain, ObservationSeries, Point, Unit};

const THRESHOLD: f64 = 0.51;

/// Criteria carry their own runtime budgets, so they must not compete for
/// cores; each test holds this lock for its whole body.
static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn pass(criterion: u32, name: &str, started: Instant) {
    println!(
        "[acceptance] criterion {criterion:02} ({name}): PASS in {:.2?}",
        started.elapsed()
    );
}

fn skip(criterion: u32, name: &str, why: &str) {
    println!("[acceptance] criterion {criterion:02} ({name}): SKIP — {why}");
}

fn assert_runtime(criterion: u32, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its runtime budget: {elapsed:.2?} > {budget:?}"
    );
}

/// The 1,000 shared random vectors for criteria 2 and 3: lengths spread
/// log-uniformly over 1..=10^4 (with 1, 2, and 10^4 pinned), magnitudes
/// spanning nine decades, and a sprinkle of exact zeros.
fn random_vectors() -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0001);
    let mut vectors = Vec::with_capacity(1000);
    for i in 0..1000usize {
        let len = match i {
            0 => 1,
            1 => 2,
            2 => 10_000,
            _ => {
                let u: f64 = rng.gen();
                ((u * (1.0e4f64).ln()).exp().floor() as usize).clamp(1, 10_000)
            }
        };
        let scale = 10f64.powi(rng.gen_range(-3..=6));
        let mut v: Vec<f64> =
            (0..len).map(|_| if rng.gen_bool(0.05) { 0.0 } else { rng.gen::<f64>() * scale }).collect();
        if !v.iter().any(|&x| x > 0.0) {
            v[rng.gen_range(0..len)] = scale;
        }
        vectors.push(v);
    }
    vectors
}

#[test]
fn criterion_01_uniform_closed_forms() {
    let _guard = serial();
    let started = Instant::now();
    for n in [2usize, 4, 10, 100, 1000] {
        let values = vec![7.0; n];
        let v = compute_indices(&values, THRESHOLD).unwrap();
        let nf = n as f64;
        assert!(
            (v.shannon_entropy - nf).abs() / nf <= 1e-9,
            "shannon for uniform {n}: {}",
            v.shannon_entropy
        );
        assert!(
            (v.hhi - 1.0 / nf).abs() <= 1e-12 * (1.0 / nf).max(1.0),
            "hhi for uniform {n}: {}",
            v.hhi
        );
        assert!(
            (v.gini - (1.0 - 1.0 / nf)).abs() <= 1e-12,
            "gini for uniform {n}: {}",
            v.gini
        );
        let expected_nakamoto = (THRESHOLD * nf).floor() as u64 + 1;
        assert_eq!(v.nakamoto, expected_nakamoto, "nakamoto for uniform {n}");
        assert_eq!(v.unit_count, n as u64);
    }
    assert_runtime(1, started, Duration::from_secs(1));
    pass(1, "uniform closed forms", started);
}

fn assert_close(criterion: u32, what: &str, a: &IndexValues, b: &IndexValues) {
    let shannon_tol = 1e-12 * a.shannon_entropy.max(1.0);
    assert!(
        (a.shannon_entropy - b.shannon_entropy).abs() <= shannon_tol,
        "criterion {criterion} {what}: shannon {} vs {}",
        a.shannon_entropy,
        b.shannon_entropy
    );
    assert!(
        (a.gini - b.gini).abs() <= 1e-12,
        "criterion {criterion} {what}: gini {} vs {}",
        a.gini,
        b.gini
    );
    assert!(
        (a.hhi - b.hhi).abs() <= 1e-12,
        "criterion {criterion} {what}: hhi {} vs {}",
        a.hhi,
        b.hhi
    );
    assert_eq!(a.nakamoto, b.nakamoto, "criterion {criterion} {what}: nakamoto");
    assert_eq!(a.unit_count, b.unit_count, "criterion {criterion} {what}: unit count");
}

#[test]
fn criterion_02_complementarity_and_invariance() {
    let _guard = serial();
    let started = Instant::now();
    let vectors = random_vectors();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0002);
    for values in &vectors {
        let base = compute_indices(values, THRESHOLD).unwrap();
        assert!(
            (base.gini + base.hhi - 1.0).abs() <= 1e-12,
            "gini + hhi = {} for len {}",
            base.gini + base.hhi,
            values.len()
        );

        // Scale invariance: multiply by a constant spanning twelve decades.
        let c = 10f64.powf(rng.gen_range(-6.0..6.0));
        let scaled: Vec<f64> = values.iter().map(|&v| v * c).collect();
        let scaled_idx = compute_indices(&scaled, THRESHOLD).unwrap();
        assert_close(2, "scale", &base, &scaled_idx);

        // Permutation invariance: Fisher–Yates with the shared rng.
        let mut permuted = values.clone();
        for i in (1..permuted.len()).rev() {
            permuted.swap(i, rng.gen_range(0..=i));
        }
        let permuted_idx = compute_indices(&permuted, THRESHOLD).unwrap();
        assert_close(2, "permutation", &base, &permuted_idx);
    }
    assert_runtime(2, started, Duration::from_secs(10));
    pass(2, "complementarity, scale and permutation invariance", started);
}

#[test]
fn criterion_03_oracle_equivalence() {
    let _guard = serial();
    let started = Instant::now();
    let vectors = random_vectors();
    vectors.par_iter().for_each(|values| {
        let fast = compute_indices(values, THRESHOLD).unwrap();

        // Entropy: 192-bit recomputation; the literal product form for
        // populations small enough not to underflow it.
        let oracle_entropy = if fast.unit_count <= 64 {
            oracle::entropy_product(values)
        } else {
            oracle::entropy_summation(values)
        };
        assert!(
            (fast.shannon_entropy - oracle_entropy).abs() / oracle_entropy <= 1e-9,
            "entropy {} vs oracle {} (len {})",
            fast.shannon_entropy,
            oracle_entropy,
            values.len()
        );

        // Concentration: exact rationals.
        let tol = oracle::tol_1e12();
        let hhi_exact = oracle::hhi_exact(values);
        assert!(
            oracle::abs_error(fast.hhi, &hhi_exact) <= tol,
            "hhi {} off exact rational (len {})",
            fast.hhi,
            values.len()
        );
        let gini_exact = oracle::gini_exact(values);
        assert!(
            oracle::abs_error(fast.gini, &gini_exact) <= tol,
            "gini {} off exact rational (len {})",
            fast.gini,
            values.len()
        );

        // Nakamoto: exact prefix scan must agree exactly.
        assert_eq!(
            fast.nakamoto,
            oracle::nakamoto_exact(values, THRESHOLD),
            "nakamoto mismatch (len {})",
            values.len()
        );
    });
    assert_runtime(3, started, Duration::from_secs(120));
    pass(3, "high-precision oracle equivalence", started);
}

fn reference_data_dirs() -> Option<(PathBuf, PathBuf)> {
    let root = PathBuf::from(std::env::var_os("TRILEMMA_REFERENCE_DATA")?);
    let algorand = root.join("algorand");
    let ethereum = root.join("ethereum2");
    (algorand.is_dir() && ethereum.is_dir()).then_some((algorand, ethereum))
}

#[test]
fn criterion_04_published_indices_diagnostic() {
    let _guard = serial();
    let started = Instant::now();
    let Some((algorand_dir, ethereum_dir)) = reference_data_dirs() else {
        skip(4, "published indices diagnostic", "TRILEMMA_REFERENCE_DATA not set");
        return;
    };
    // Reference values reported for the published datasets, per
    // (chain, layer): shannon, gini, nakamoto, hhi.
    let published = [
        (Chain::Algorand, "consensus", 1364.34, 0.155, 821u64, 0.0005),
        (Chain::Algorand, "transaction", 920.192, 0.155, 931, 0.00015),
        (Chain::Ethereum2, "consensus", 866.759, 0.301, 705, 0.0021),
        (Chain::Ethereum2, "transaction", 2252.60, 0.301, 2067, 0.0004),
    ];
    for (chain, dir) in [(Chain::Algorand, &algorand_dir), (Chain::Ethereum2, &ethereum_dir)] {
        let load = load_chain_dataset(dir, chain).expect("published dataset loads");
        for layer in [
            trilemma::decentralization::Layer::Consensus,
            trilemma::decentralization::Layer::Transaction,
        ] {
            let sel = trilemma::decentralization::LayerSelector { chain, layer };
            let row = match trilemma::decentralization::aggregate_indices(
                &load.dataset,
                sel,
                THRESHOLD,
            ) {
                Ok(row) => row,
                Err(e) => {
                    println!("  {chain} {layer}: not computable ({e})");
                    continue;
                }
            };
            let reference = published
                .iter()
                .find(|(c, l, ..)| *c == chain && *l == layer.as_str());
            if let Some((_, _, shannon, gini, nakamoto, hhi)) = reference {
                println!(
                    "  {chain} {layer}: shannon {:.3} (published {shannon}, deviation {:+.3})",
                    row.shannon_entropy,
                    row.shannon_entropy - shannon
                );
                println!(
                    "  {chain} {layer}: gini {:.6} (published {gini}, deviation {:+.6})",
                    row.gini,
                    row.gini - gini
                );
                println!(
                    "  {chain} {layer}: nakamoto {} (published {nakamoto}, deviation {:+})",
                    row.nakamoto,
                    row.nakamoto as i64 - *nakamoto as i64
                );
                println!(
                    "  {chain} {layer}: hhi {:.6} (published {hhi}, deviation {:+.6})",
                    row.hhi,
                    row.hhi - hhi
                );
            }
        }
    }
    pass(4, "published indices diagnostic", started);
}

#[test]
fn criterion_05_scalability_fixture_suite() {
    let _guard = serial();
    let started = Instant::now();
    let algorand_dir = tempfile::tempdir().unwrap();
    let ethereum_dir = tempfile::tempdir().unwrap();
    fixtures::write_algorand_dir(
        algorand_dir.path(),
        &[40.0, 41.0, 42.0],
        &[86_400.0, 172_800.0, 259_200.0],
        &[10.0, 20.0, 30.0],
    );
    fixtures::write_ethereum_dir(
        ethereum_dir.path(),
        &[25_000.0, 25_000.0],
        &[43_200.0, 86_400.0],
        &[100.0, 200.0],
        &[10.0, 20.0],
    );
    let algorand = load_chain_dataset(algorand_dir.path(), Chain::Algorand).unwrap();
    let ethereum = load_chain_dataset(ethereum_dir.path(), Chain::Ethereum2).unwrap();
    let cmp = compare_scalability(
        &algorand.dataset,
        &ethereum.dataset,
        &ScalabilityConfig::default(),
    )
    .unwrap();

    let algo = &cmp.chains[&Chain::Algorand];
    assert_eq!(algo.throughput.mean_daily_tx, 172_800.0);
    assert_eq!(algo.throughput.mean_tps, 2.0);
    assert_eq!(algo.throughput.peak_daily_tx, 259_200.0);
    assert_eq!(algo.throughput.peak_tps, 3.0);
    assert_eq!(algo.throughput.peak_date, "2023-01-03".parse().unwrap());
    assert_eq!(algo.latency.mean_block_time, 3.5);
    assert_eq!(algo.latency.std_block_time, 0.0);
    assert_eq!(algo.injected_block_time, Some(3.5));

    let eth = &cmp.chains[&Chain::Ethereum2];
    assert_eq!(eth.throughput.mean_daily_tx, 64_800.0);
    assert_eq!(eth.throughput.mean_tps, 0.75);
    assert_eq!(eth.throughput.peak_tps, 1.0);
    assert_eq!(eth.latency.mean_block_time, 15.0);
    assert_eq!(eth.latency.std_block_time, 5.0);

    assert_eq!(cmp.verdicts.higher_peak_chain, Verdict::Chain(Chain::Algorand));
    assert_eq!(cmp.verdicts.lower_latency_chain, Verdict::Chain(Chain::Algorand));

    if let Some((algorand_dir, ethereum_dir)) = reference_data_dirs() {
        let algorand = load_chain_dataset(&algorand_dir, Chain::Algorand).unwrap();
        let ethereum = load_chain_dataset(&ethereum_dir, Chain::Ethereum2).unwrap();
        match compare_scalability(&algorand.dataset, &ethereum.dataset, &ScalabilityConfig::default())
        {
            Ok(cmp) => {
                let algo_bt = cmp.chains[&Chain::Algorand].latency.mean_block_time;
                let eth_bt = cmp.chains[&Chain::Ethereum2].latency.mean_block_time;
                println!("  published data: algorand mean block time {algo_bt} s (expected 3.5)");
                println!(
                    "  published data: ethereum2 mean block time {eth_bt:.3} s (expected ≈14.42, deviation {:+.3})",
                    eth_bt - 14.42
                );
            }
            Err(e) => println!("  published data: comparison not computable ({e})"),
        }
    } else {
        println!("  published-data block-time diagnostic skipped (TRILEMMA_REFERENCE_DATA not set)");
    }
    pass(5, "scalability fixture suite", started);
}

#[test]
fn criterion_06_burned_fee_statistics() {
    let _guard = serial();
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    fixtures::write_algorand_dir(
        dir.path(),
        &[40.0, 41.0],
        &[1000.0, 2000.0],
        &[10.0, 20.0],
    );
    let load = load_chain_dataset(dir.path(), Chain::Algorand).unwrap();
    let stats = burned_fee_stats(load.dataset.frame(FrameKind::BurnedFees).unwrap()).unwrap();
    assert_eq!(stats.daily_mean, 15.0);
    assert_eq!(stats.total, 30.0);
    assert_eq!(stats.std, 5.0);
    assert_eq!(stats.days, 2);

    let single = ObservationSeries::new(
        Chain::Algorand,
        "burned_fees",
        Unit::Algo,
        vec![Point { date: "2023-01-01".parse().unwrap(), value: 7.0 }],
    )
    .unwrap();
    let stats = burned_fee_stats(&single).unwrap();
    assert_eq!((stats.daily_mean, stats.total, stats.std, stats.days), (7.0, 7.0, 0.0, 1));

    if let Some((algorand_dir, ethereum_dir)) = reference_data_dirs() {
        for (chain, dir, expected) in [
            (Chain::Algorand, &algorand_dir, 3401.82f64),
            (Chain::Ethereum2, &ethereum_dir, 4690.36),
        ] {
            let load = load_chain_dataset(dir, chain).unwrap();
            match load.dataset.frame(FrameKind::BurnedFees) {
                Some(frame) => {
                    let stats = burned_fee_stats(frame).unwrap();
                    let deviation = (stats.daily_mean - expected) / expected;
                    println!(
                        "  published data: {chain} daily mean {:.2} (expected ≈{expected}, deviation {:+.2}%)",
                        stats.daily_mean,
                        deviation * 100.0
                    );
                }
                None => println!("  published data: {chain} has no burned_fees frame"),
            }
        }
    } else {
        println!("  published-data fee diagnostic skipped (TRILEMMA_REFERENCE_DATA not set)");
    }
    pass(6, "burned-fee statistics", started);
}

#[test]
fn criterion_07_seed_chain_unbiasedness() {
    let _guard = serial();
    let started = Instant::now();
    for alpha in [0.1, 0.3, 0.51] {
        let cfg = AttackSimConfig {
            scheme: Scheme::SeedChain,
            adversary_stake: alpha,
            honest_validators: 1000,
            rounds: 10_000,
            trials: 10,
            grinding_bits: 0,
            rng_seed: 7,
        };
        let result = simulate_attack(&cfg).unwrap();
        assert!(
            (result.adversary_share - alpha).abs() <= 3.0 * result.stderr,
            "alpha {alpha}: share {} stderr {}",
            result.adversary_share,
            result.stderr
        );
    }
    assert_runtime(7, started, Duration::from_secs(60));
    pass(7, "seed-chain unbiasedness", started);
}

#[test]
fn criterion_08_grinding_bias() {
    let _guard = serial();
    let started = Instant::now();
    let base = AttackSimConfig {
        scheme: Scheme::XorAccumulator,
        adversary_stake: 0.3,
        honest_validators: 5,
        rounds: 10_000,
        trials: 10,
        grinding_bits: 1,
        rng_seed: 7,
    };
    let ground = simulate_attack(&base).unwrap();
    let baseline = simulate_attack(&AttackSimConfig { grinding_bits: 0, ..base }).unwrap();

    // Conditional next-round adversary probability on ground rounds, checked
    // against the exhaustive enumeration over the (1 + honest) outcome space
    // for two candidate draws.
    let expected = oracle::grinding_success_by_enumeration(0.3, base.honest_validators, 2);
    assert!((expected - 0.51).abs() < 1e-12, "enumeration should give 1 − 0.7² = 0.51");
    let measured = ground.conditional_ground_success().expect("grinding rounds occurred");
    let se = (expected * (1.0 - expected) / ground.ground_rounds as f64).sqrt();
    assert!(
        (measured - expected).abs() <= 3.0 * se,
        "conditional ground success {measured} vs {expected} (se {se}, ground rounds {})",
        ground.ground_rounds
    );

    // bias(g=1) > bias(g=0) at 99% one-sided confidence.
    let se_diff = (ground.stderr.powi(2) + baseline.stderr.powi(2)).sqrt();
    let z = (ground.bias - baseline.bias) / se_diff;
    assert!(
        z > 2.326,
        "grinding bias not significant: bias(g=1) {} vs bias(g=0) {} (z = {z:.2})",
        ground.bias,
        baseline.bias
    );
    assert_runtime(8, started, Duration::from_secs(120));
    pass(8, "grinding bias", started);
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_trilemma")
}

fn read_dir_files(dir: &std::path::Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    files.sort();
    files
}

/// Byte-compare two output directories, masking the generated_at timestamp
/// inside any report.json.
fn assert_identical_payloads(a: &std::path::Path, b: &std::path::Path) {
    let fa = read_dir_files(a);
    let fb = read_dir_files(b);
    assert_eq!(
        fa.iter().map(|(n, _)| n).collect::<Vec<_>>(),
        fb.iter().map(|(n, _)| n).collect::<Vec<_>>(),
        "output file sets differ"
    );
    for ((name, bytes_a), (_, bytes_b)) in fa.iter().zip(fb.iter()) {
        if name == "report.json" {
            let mut ja: serde_json::Value = serde_json::from_slice(bytes_a).unwrap();
            let mut jb: serde_json::Value = serde_json::from_slice(bytes_b).unwrap();
            for j in [&mut ja, &mut jb] {
                j.get_mut("provenance")
                    .and_then(|p| p.as_object_mut())
                    .and_then(|p| p.insert("generated_at".into(), serde_json::Value::Null));
            }
            assert_eq!(ja, jb, "report.json differs beyond the timestamp");
        } else {
            assert_eq!(bytes_a, bytes_b, "{name} differs between runs");
        }
    }
}

#[test]
fn criterion_09_cli_determinism() {
    let _guard = serial();
    let started = Instant::now();
    let algorand_dir = tempfile::tempdir().unwrap();
    let ethereum_dir = tempfile::tempdir().unwrap();
    fixtures::write_full_algorand_dir(algorand_dir.path(), 12);
    fixtures::write_full_ethereum_dir(ethereum_dir.path(), 12);
    let algo = algorand_dir.path().to_str().unwrap();
    let eth = ethereum_dir.path().to_str().unwrap();

    let scratch = tempfile::tempdir().unwrap();
    let out = |name: &str| scratch.path().join(name).to_str().unwrap().to_string();

    let command_sets: Vec<Vec<String>> = vec![
        vec![
            "validate".into(), algo.into(), "--chain".into(), "algorand".into(),
        ],
        vec![
            "decentralization".into(), algo.into(), eth.into(),
            "--window".into(), "5".into(), "--rolling-index".into(), "shannon,hhi".into(),
        ],
        vec!["scalability".into(), algo.into(), eth.into()],
        vec![
            "simulate".into(), "--scheme".into(), "xor".into(), "--alpha".into(), "0.3".into(),
            "--grinding-bits".into(), "1".into(), "--rounds".into(), "1000".into(),
            "--trials".into(), "100".into(), "--seed".into(), "42".into(),
        ],
        vec![
            "report".into(), algo.into(), eth.into(),
            "--sim-rounds".into(), "500".into(), "--sim-trials".into(), "4".into(),
            "--seed".into(), "9".into(),
        ],
    ];

    for (i, args) in command_sets.iter().enumerate() {
        let out_a = out(&format!("{i}_a"));
        let out_b = out(&format!("{i}_b"));
        for out_dir in [&out_a, &out_b] {
            let mut full: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
            full.push("--out");
            full.push(out_dir);
            let output = std::process::Command::new(bin())
                .args(&full)
                .env("TRILEMMA_THREADS", if out_dir == &out_a { "1" } else { "2" })
                .output()
                .expect("binary runs");
            assert!(
                output.status.success(),
                "command {args:?} failed: {}",
                String::from_utf8_lossy(&output.stderr)
            );
        }
        assert_identical_payloads(std::path::Path::new(&out_a), std::path::Path::new(&out_b));
    }
    pass(9, "CLI determinism", started);
}

#[test]
fn criterion_10_csv_round_trip() {
    let _guard = serial();
    let started = Instant::now();
    let algorand_dir = tempfile::tempdir().unwrap();
    let ethereum_dir = tempfile::tempdir().unwrap();
    fixtures::write_full_algorand_dir(algorand_dir.path(), 9);
    fixtures::write_full_ethereum_dir(ethereum_dir.path(), 9);

    let scratch = tempfile::tempdir().unwrap();
    for (chain, dir) in
        [(Chain::Algorand, algorand_dir.path()), (Chain::Ethereum2, ethereum_dir.path())]
    {
        let load = load_chain_dataset(dir, chain).unwrap();
        for (kind, series) in load.dataset.frames() {
            let path = scratch.path().join(format!("{chain}_{kind}.csv"));
            trilemma::ingest::write_frame_csv(series, &path).unwrap();
            let reloaded =
                trilemma::ingest::load_frame(&path, &FrameSchema::canonical(chain, kind)).unwrap();
            assert_eq!(series, &reloaded, "{chain} {kind} round trip");
        }
    }

    // Values with no short decimal form survive because the writer emits the
    // shortest representation that parses back to the same bits.
    let nasty = ObservationSeries::new(
        Chain::Ethereum2,
        "burned_fees",
        Unit::Eth,
        vec![
            Point { date: "2023-01-01".parse().unwrap(), value: 1.0 / 3.0 },
            Point { date: "2023-01-02".parse().unwrap(), value: 0.1 + 0.2 },
            Point { date: "2023-01-03".parse().unwrap(), value: std::f64::consts::PI },
            Point { date: "2023-01-04".parse().unwrap(), value: 5e-324 },
            Point { date: "2023-01-05".parse().unwrap(), value: 1.7976931348623157e308 },
        ],
    )
    .unwrap();
    let path = scratch.path().join("nasty.csv");
    trilemma::ingest::write_frame_csv(&nasty, &path).unwrap();
    let reloaded = trilemma::ingest::load_frame(
        &path,
        &FrameSchema::canonical(Chain::Ethereum2, FrameKind::BurnedFees),
    )
    .unwrap();
    assert_eq!(nasty, reloaded);
    pass(10, "CSV round trip", started);
}
