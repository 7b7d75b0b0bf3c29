#ifndef TRILEMMA_H
#define TRILEMMA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of a C API call.
 */
typedef enum TrilemmaStatus {
  /**
   * The call succeeded.
   */
  TrilemmaStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  TrilemmaStatus_NullPointer = 1,
  /**
   * An argument was outside its documented domain.
   */
  TrilemmaStatus_InvalidArgument = 2,
  /**
   * A string argument was not valid UTF-8.
   */
  TrilemmaStatus_InvalidUtf8 = 3,
  /**
   * The data directory could not be loaded.
   */
  TrilemmaStatus_LoadFailed = 4,
  /**
   * The computation failed on the loaded data.
   */
  TrilemmaStatus_ComputeFailed = 5,
  /**
   * An internal panic was caught; this is a bug worth reporting.
   */
  TrilemmaStatus_Internal = 6,
} TrilemmaStatus;

/**
 * Randomness scheme selector for the attack simulation.
 */
typedef enum TrilemmaScheme {
  /**
   * Fresh, participant-independent randomness every round.
   */
  TrilemmaScheme_SeedChain = 0,
  /**
   * Running XOR of reveals; the last revealer can grind.
   */
  TrilemmaScheme_XorAccumulator = 1,
} TrilemmaScheme;

/**
 * Opaque handle to a loaded chain dataset.
 */
typedef struct TrilemmaDataset TrilemmaDataset;

/**
 * The four decentralization indices over one population of units.
 */
typedef struct TrilemmaIndices {
  /**
   * exp(−Σ p ln p), between 1 and the unit count.
   */
  double shannon_entropy;
  /**
   * 1 − Σ p² (Gini–Simpson form).
   */
  double gini;
  /**
   * Σ p².
   */
  double hhi;
  /**
   * Minimal number of largest units strictly exceeding the threshold.
   */
  uint64_t nakamoto;
  /**
   * Number of nonzero units.
   */
  uint64_t unit_count;
} TrilemmaIndices;

/**
 * Parameters of one attack-simulation run.
 */
typedef struct TrilemmaAttackConfig {
  enum TrilemmaScheme scheme;
  /**
   * Adversary stake fraction in [0, 1).
   */
  double adversary_stake;
  /**
   * Honest validator count (must be at least 1).
   */
  uint32_t honest_validators;
  /**
   * log2 of candidate reveals a grinding adversary may evaluate;
   * must be 0 under the seed-chain scheme.
   */
  uint32_t grinding_bits;
  /**
   * Proposer selections per trial (at least 1).
   */
  uint64_t rounds;
  /**
   * Independent trials (at least 1).
   */
  uint64_t trials;
  /**
   * RNG seed; identical configs produce identical results.
   */
  uint64_t rng_seed;
} TrilemmaAttackConfig;

/**
 * Measured outcome of an attack-simulation run.
 */
typedef struct TrilemmaAttackResult {
  /**
   * Fraction of all rounds the adversary proposed.
   */
  double adversary_share;
  /**
   * adversary_share − adversary_stake.
   */
  double bias;
  /**
   * Binomial standard error over rounds × trials.
   */
  double stderr;
  /**
   * Longest run of consecutive adversary proposals in any trial.
   */
  uint64_t max_consecutive;
  /**
   * Rounds in which the adversary held the final reveal and ground.
   */
  uint64_t ground_rounds;
  /**
   * Ground rounds whose next round selected the adversary.
   */
  uint64_t ground_hits;
} TrilemmaAttackResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static, NUL-terminated string. Never freed.
 */
const char *trilemma_version(void);

/**
 * Static name of a status code. Never freed.
 */
const char *trilemma_status_name(enum TrilemmaStatus status);

/**
 * Compute the four decentralization indices over raw nonnegative values.
 *
 * Zero values carry no share and are dropped; `threshold` is the cumulative
 * share the nakamoto coefficient must strictly exceed (use 0.51 for the
 * conventional definition).
 *
 * # Safety
 * `values` must point to `len` readable doubles and `out` to writable
 * memory for one `TrilemmaIndices`, both valid for the duration of the
 * call.
 */
enum TrilemmaStatus trilemma_indices_from_values(const double *values,
                                                 uintptr_t len,
                                                 double threshold,
                                                 struct TrilemmaIndices *out);

/**
 * Load a chain's data directory into an opaque dataset handle.
 *
 * `chain` is `"algorand"` or `"ethereum2"`. On success writes a handle the
 * caller must release with [`trilemma_dataset_free`].
 *
 * # Safety
 * `dir` and `chain` must be NUL-terminated strings and `out` writable for
 * one pointer, all valid for the duration of the call.
 */
enum TrilemmaStatus trilemma_dataset_load(const char *dir,
                                          const char *chain,
                                          struct TrilemmaDataset **out);

/**
 * Release a dataset handle. Null is a no-op.
 *
 * # Safety
 * `ds` must be a handle returned by [`trilemma_dataset_load`] that has not
 * already been freed.
 */
void trilemma_dataset_free(struct TrilemmaDataset *ds);

/**
 * Number of dictionary-range violations in the dataset.
 *
 * # Safety
 * `ds` must be a live handle from [`trilemma_dataset_load`]; `out` must be
 * writable for one `usize`.
 */
enum TrilemmaStatus trilemma_dataset_violation_count(const struct TrilemmaDataset *ds,
                                                     uintptr_t *out);

/**
 * Decentralization indices for one layer of a loaded dataset.
 *
 * `layer` is `"consensus"` or `"transaction"`.
 *
 * # Safety
 * `ds` must be a live handle from [`trilemma_dataset_load`]; `layer` a
 * NUL-terminated string; `out` writable for one `TrilemmaIndices`.
 */
enum TrilemmaStatus trilemma_dataset_layer_indices(const struct TrilemmaDataset *ds,
                                                   const char *layer,
                                                   double threshold,
                                                   struct TrilemmaIndices *out);

/**
 * Run the Monte Carlo 51%-attack simulation.
 *
 * Deterministic given the config, including `rng_seed`.
 *
 * # Safety
 * `cfg` must be readable for one `TrilemmaAttackConfig` and `out` writable
 * for one `TrilemmaAttackResult`.
 */
enum TrilemmaStatus trilemma_attack_simulate(const struct TrilemmaAttackConfig *cfg,
                                             struct TrilemmaAttackResult *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRILEMMA_H */
