//! C ABI for the trilemma analytics library.
//!
//! Other languages bind against `include/trilemma.h`, generated at build
//! time by cbindgen. The surface follows the usual C conventions: every
//! fallible call returns a [`TrilemmaStatus`] code and writes its result
//! through an out-pointer; datasets are opaque handles created by
//! [`trilemma_dataset_load`] and released by [`trilemma_dataset_free`].
//! Panics never cross the boundary.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use trilemma::decentralization::{compute_indices, Layer, LayerSelector};
use trilemma::ingest::{load_chain_dataset, validate_dataset, ChainDataset};
use trilemma::security::{simulate_attack, AttackSimConfig, Scheme};
use trilemma::series::Chain;

/// Result code of a C API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrilemmaStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was outside its documented domain.
    InvalidArgument = 2,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 3,
    /// The data directory could not be loaded.
    LoadFailed = 4,
    /// The computation failed on the loaded data.
    ComputeFailed = 5,
    /// An internal panic was caught; this is a bug worth reporting.
    Internal = 6,
}

/// Opaque handle to a loaded chain dataset.
pub struct TrilemmaDataset {
    inner: ChainDataset,
}

/// The four decentralization indices over one population of units.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TrilemmaIndices {
    /// exp(−Σ p ln p), between 1 and the unit count.
    pub shannon_entropy: f64,
    /// 1 − Σ p² (Gini–Simpson form).
    pub gini: f64,
    /// Σ p².
    pub hhi: f64,
    /// Minimal number of largest units strictly exceeding the threshold.
    pub nakamoto: u64,
    /// Number of nonzero units.
    pub unit_count: u64,
}

/// Randomness scheme selector for the attack simulation.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrilemmaScheme {
    /// Fresh, participant-independent randomness every round.
    SeedChain = 0,
    /// Running XOR of reveals; the last revealer can grind.
    XorAccumulator = 1,
}

/// Parameters of one attack-simulation run.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TrilemmaAttackConfig {
    pub scheme: TrilemmaScheme,
    /// Adversary stake fraction in [0, 1).
    pub adversary_stake: f64,
    /// Honest validator count (must be at least 1).
    pub honest_validators: u32,
    /// log2 of candidate reveals a grinding adversary may evaluate;
    /// must be 0 under the seed-chain scheme.
    pub grinding_bits: u32,
    /// Proposer selections per trial (at least 1).
    pub rounds: u64,
    /// Independent trials (at least 1).
    pub trials: u64,
    /// RNG seed; identical configs produce identical results.
    pub rng_seed: u64,
}

/// Measured outcome of an attack-simulation run.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TrilemmaAttackResult {
    /// Fraction of all rounds the adversary proposed.
    pub adversary_share: f64,
    /// adversary_share − adversary_stake.
    pub bias: f64,
    /// Binomial standard error over rounds × trials.
    pub stderr: f64,
    /// Longest run of consecutive adversary proposals in any trial.
    pub max_consecutive: u64,
    /// Rounds in which the adversary held the final reveal and ground.
    pub ground_rounds: u64,
    /// Ground rounds whose next round selected the adversary.
    pub ground_hits: u64,
}

/// Library version as a static, NUL-terminated string. Never freed.
#[no_mangle]
pub extern "C" fn trilemma_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static name of a status code. Never freed.
#[no_mangle]
pub extern "C" fn trilemma_status_name(status: TrilemmaStatus) -> *const c_char {
    let name: &'static str = match status {
        TrilemmaStatus::Ok => "ok\0",
        TrilemmaStatus::NullPointer => "null pointer\0",
        TrilemmaStatus::InvalidArgument => "invalid argument\0",
        TrilemmaStatus::InvalidUtf8 => "invalid utf-8\0",
        TrilemmaStatus::LoadFailed => "load failed\0",
        TrilemmaStatus::ComputeFailed => "compute failed\0",
        TrilemmaStatus::Internal => "internal error\0",
    };
    name.as_ptr() as *const c_char
}

fn guard(body: impl FnOnce() -> TrilemmaStatus) -> TrilemmaStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(TrilemmaStatus::Internal)
}

unsafe fn cstr_arg<'a>(ptr: *const c_char) -> Result<&'a str, TrilemmaStatus> {
    if ptr.is_null() {
        return Err(TrilemmaStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| TrilemmaStatus::InvalidUtf8)
}

/// Compute the four decentralization indices over raw nonnegative values.
///
/// Zero values carry no share and are dropped; `threshold` is the cumulative
/// share the nakamoto coefficient must strictly exceed (use 0.51 for the
/// conventional definition).
///
/// # Safety
/// `values` must point to `len` readable doubles and `out` to writable
/// memory for one `TrilemmaIndices`, both valid for the duration of the
/// call.
#[no_mangle]
pub unsafe extern "C" fn trilemma_indices_from_values(
    values: *const f64,
    len: usize,
    threshold: f64,
    out: *mut TrilemmaIndices,
) -> TrilemmaStatus {
    if values.is_null() || out.is_null() {
        return TrilemmaStatus::NullPointer;
    }
    let slice = std::slice::from_raw_parts(values, len);
    guard(|| match compute_indices(slice, threshold) {
        Ok(v) => {
            *out = TrilemmaIndices {
                shannon_entropy: v.shannon_entropy,
                gini: v.gini,
                hhi: v.hhi,
                nakamoto: v.nakamoto,
                unit_count: v.unit_count,
            };
            TrilemmaStatus::Ok
        }
        Err(_) => TrilemmaStatus::InvalidArgument,
    })
}

/// Load a chain's data directory into an opaque dataset handle.
///
/// `chain` is `"algorand"` or `"ethereum2"`. On success writes a handle the
/// caller must release with [`trilemma_dataset_free`].
///
/// # Safety
/// `dir` and `chain` must be NUL-terminated strings and `out` writable for
/// one pointer, all valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn trilemma_dataset_load(
    dir: *const c_char,
    chain: *const c_char,
    out: *mut *mut TrilemmaDataset,
) -> TrilemmaStatus {
    if out.is_null() {
        return TrilemmaStatus::NullPointer;
    }
    let dir = match cstr_arg(dir) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let chain: Chain = match cstr_arg(chain).map(|s| s.parse()) {
        Ok(Ok(chain)) => chain,
        Ok(Err(_)) => return TrilemmaStatus::InvalidArgument,
        Err(status) => return status,
    };
    guard(|| match load_chain_dataset(Path::new(dir), chain) {
        Ok(load) => {
            let handle = Box::new(TrilemmaDataset { inner: load.dataset });
            *out = Box::into_raw(handle);
            TrilemmaStatus::Ok
        }
        Err(_) => TrilemmaStatus::LoadFailed,
    })
}

/// Release a dataset handle. Null is a no-op.
///
/// # Safety
/// `ds` must be a handle returned by [`trilemma_dataset_load`] that has not
/// already been freed.
#[no_mangle]
pub unsafe extern "C" fn trilemma_dataset_free(ds: *mut TrilemmaDataset) {
    if !ds.is_null() {
        drop(Box::from_raw(ds));
    }
}

/// Number of dictionary-range violations in the dataset.
///
/// # Safety
/// `ds` must be a live handle from [`trilemma_dataset_load`]; `out` must be
/// writable for one `usize`.
#[no_mangle]
pub unsafe extern "C" fn trilemma_dataset_violation_count(
    ds: *const TrilemmaDataset,
    out: *mut usize,
) -> TrilemmaStatus {
    if ds.is_null() || out.is_null() {
        return TrilemmaStatus::NullPointer;
    }
    let dataset = &(*ds).inner;
    guard(|| {
        *out = validate_dataset(dataset).violations.len();
        TrilemmaStatus::Ok
    })
}

/// Decentralization indices for one layer of a loaded dataset.
///
/// `layer` is `"consensus"` or `"transaction"`.
///
/// # Safety
/// `ds` must be a live handle from [`trilemma_dataset_load`]; `layer` a
/// NUL-terminated string; `out` writable for one `TrilemmaIndices`.
#[no_mangle]
pub unsafe extern "C" fn trilemma_dataset_layer_indices(
    ds: *const TrilemmaDataset,
    layer: *const c_char,
    threshold: f64,
    out: *mut TrilemmaIndices,
) -> TrilemmaStatus {
    if ds.is_null() || out.is_null() {
        return TrilemmaStatus::NullPointer;
    }
    let layer = match cstr_arg(layer) {
        Ok("consensus") => Layer::Consensus,
        Ok("transaction") => Layer::Transaction,
        Ok(_) => return TrilemmaStatus::InvalidArgument,
        Err(status) => return status,
    };
    let dataset = &(*ds).inner;
    guard(|| {
        let sel = LayerSelector { chain: dataset.chain(), layer };
        match trilemma::decentralization::aggregate_indices(dataset, sel, threshold) {
            Ok(row) => {
                *out = TrilemmaIndices {
                    shannon_entropy: row.shannon_entropy,
                    gini: row.gini,
                    hhi: row.hhi,
                    nakamoto: row.nakamoto,
                    unit_count: row.unit_count,
                };
                TrilemmaStatus::Ok
            }
            Err(_) => TrilemmaStatus::ComputeFailed,
        }
    })
}

/// Run the Monte Carlo 51%-attack simulation.
///
/// Deterministic given the config, including `rng_seed`.
///
/// # Safety
/// `cfg` must be readable for one `TrilemmaAttackConfig` and `out` writable
/// for one `TrilemmaAttackResult`.
#[no_mangle]
pub unsafe extern "C" fn trilemma_attack_simulate(
    cfg: *const TrilemmaAttackConfig,
    out: *mut TrilemmaAttackResult,
) -> TrilemmaStatus {
    if cfg.is_null() || out.is_null() {
        return TrilemmaStatus::NullPointer;
    }
    let cfg = *cfg;
    let config = AttackSimConfig {
        scheme: match cfg.scheme {
            TrilemmaScheme::SeedChain => Scheme::SeedChain,
            TrilemmaScheme::XorAccumulator => Scheme::XorAccumulator,
        },
        adversary_stake: cfg.adversary_stake,
        honest_validators: cfg.honest_validators,
        rounds: cfg.rounds,
        trials: cfg.trials,
        grinding_bits: cfg.grinding_bits,
        rng_seed: cfg.rng_seed,
    };
    guard(|| match simulate_attack(&config) {
        Ok(result) => {
            *out = TrilemmaAttackResult {
                adversary_share: result.adversary_share,
                bias: result.bias,
                stderr: result.stderr,
                max_consecutive: result.max_consecutive_adversary,
                ground_rounds: result.ground_rounds,
                ground_hits: result.ground_hits,
            };
            TrilemmaStatus::Ok
        }
        Err(_) => TrilemmaStatus::InvalidArgument,
    })
}
