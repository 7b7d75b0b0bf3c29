//! Independent oracles the fast paths are checked against.
//!
//! These deliberately avoid the library's implementation choices: entropy is
//! recomputed with 192-bit arithmetic (≈ 57 decimal digits), concentration
//! sums with exact rationals, the nakamoto coefficient with an exact
//! prefix scan, and grinding success probabilities by exhaustive enumeration
//! of the candidate-draw outcome space.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const PRECISION: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

fn to_f64(x: &BigFloat) -> f64 {
    format!("{x}").parse::<f64>().expect("BigFloat renders a parsable number")
}

/// Entropy index via high-precision summation: `exp(−Σ p ln p)` with
/// `p_i = v_i / Σ v_j` evaluated at 192 bits. Zero values carry no share.
pub fn entropy_summation(values: &[f64]) -> f64 {
    let mut consts = Consts::new().unwrap();
    let total = values
        .iter()
        .filter(|&&v| v > 0.0)
        .fold(BigFloat::from_f64(0.0, PRECISION), |acc, &v| {
            acc.add(&BigFloat::from_f64(v, PRECISION), PRECISION, RM)
        });
    let mut neg_entropy = BigFloat::from_f64(0.0, PRECISION);
    for &v in values.iter().filter(|&&v| v > 0.0) {
        let p = BigFloat::from_f64(v, PRECISION).div(&total, PRECISION, RM);
        let term = p.mul(&p.ln(PRECISION, RM, &mut consts), PRECISION, RM);
        neg_entropy = neg_entropy.add(&term, PRECISION, RM);
    }
    to_f64(&neg_entropy.neg().exp(PRECISION, RM, &mut consts))
}

/// Entropy index in the literal product form `Π p_i^(−p_i)`, one factor per
/// unit. Only sensible for small unit counts; callers keep it under 64.
pub fn entropy_product(values: &[f64]) -> f64 {
    let nonzero = values.iter().filter(|&&v| v > 0.0).count();
    assert!(nonzero <= 64, "product form oracle is for small populations");
    let mut consts = Consts::new().unwrap();
    let total = values
        .iter()
        .filter(|&&v| v > 0.0)
        .fold(BigFloat::from_f64(0.0, PRECISION), |acc, &v| {
            acc.add(&BigFloat::from_f64(v, PRECISION), PRECISION, RM)
        });
    let mut product = BigFloat::from_f64(1.0, PRECISION);
    for &v in values.iter().filter(|&&v| v > 0.0) {
        let p = BigFloat::from_f64(v, PRECISION).div(&total, PRECISION, RM);
        // p^(−p) as exp(−p ln p), one factor at a time.
        let factor = p
            .mul(&p.ln(PRECISION, RM, &mut consts), PRECISION, RM)
            .neg()
            .exp(PRECISION, RM, &mut consts);
        product = product.mul(&factor, PRECISION, RM);
    }
    to_f64(&product)
}

fn rational(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite f64 converts exactly")
}

/// Exact `Σ p²` as a rational: `Σ v² / (Σ v)²`.
pub fn hhi_exact(values: &[f64]) -> BigRational {
    let total: BigRational = values.iter().filter(|&&v| v > 0.0).map(|&v| rational(v)).sum();
    assert!(total.is_positive(), "oracle needs at least one positive value");
    let sum_sq: BigRational = values
        .iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| {
            let r = rational(v);
            &r * &r
        })
        .sum();
    sum_sq / (&total * &total)
}

/// Exact `1 − Σ p²`.
pub fn gini_exact(values: &[f64]) -> BigRational {
    BigRational::one() - hhi_exact(values)
}

/// Exact nakamoto coefficient: sort descending, prefix-scan in rationals,
/// return the first k whose raw prefix strictly exceeds `threshold × total`.
pub fn nakamoto_exact(values: &[f64], threshold: f64) -> u64 {
    let mut positive: Vec<f64> = values.iter().copied().filter(|&v| v > 0.0).collect();
    assert!(!positive.is_empty());
    positive.sort_unstable_by(|a, b| b.total_cmp(a));
    let total: BigRational = positive.iter().map(|&v| rational(v)).sum();
    let target = rational(threshold) * &total;
    let mut prefix = BigRational::zero();
    for (k, &v) in positive.iter().enumerate() {
        prefix += rational(v);
        if prefix > target {
            return k as u64 + 1;
        }
    }
    positive.len() as u64
}

/// Absolute difference between an `f64` and an exact rational, as a rational.
pub fn abs_error(approx: f64, exact: &BigRational) -> BigRational {
    (rational(approx) - exact).abs()
}

/// `1 / 10^12`, the tolerance used for rational comparisons.
pub fn tol_1e12() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// Probability that at least one of `candidates` independent stake-lottery
/// draws selects the adversary, by exhaustive enumeration of the discrete
/// outcome space (adversary plus `honest` equally staked validators).
pub fn grinding_success_by_enumeration(alpha: f64, honest: u32, candidates: u32) -> f64 {
    let outcomes = honest as u64 + 1; // outcome 0 = adversary, 1..=honest
    let tuples = outcomes.pow(candidates);
    let honest_each = (1.0 - alpha) / honest as f64;
    let mut success = 0.0;
    for code in 0..tuples {
        let mut rest = code;
        let mut prob = 1.0;
        let mut any_adversary = false;
        for _ in 0..candidates {
            let outcome = rest % outcomes;
            rest /= outcomes;
            if outcome == 0 {
                any_adversary = true;
                prob *= alpha;
            } else {
                prob *= honest_each;
            }
        }
        if any_adversary {
            success += prob;
        }
    }
    success
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn enumeration_matches_complement_formula() {
        for honest in [1u32, 3, 7] {
            for candidates in [1u32, 2, 3] {
                let enumerated = grinding_success_by_enumeration(0.3, honest, candidates);
                let closed = 1.0 - (1.0 - 0.3f64).powi(candidates as i32);
                assert!(
                    (enumerated - closed).abs() < 1e-12,
                    "honest={honest} candidates={candidates}: {enumerated} vs {closed}"
                );
            }
        }
    }
}
