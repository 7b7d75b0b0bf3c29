//! Small numeric helpers shared across modules.

/// Neumaier-compensated summation. Keeps cumulative rounding error below one
/// ulp of the true sum, which matters for weight vectors of ~10^4 entries and
/// for threshold comparisons against cumulative shares.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Running compensated accumulator for prefix sums.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedAccumulator {
    sum: f64,
    comp: f64,
}

impl CompensatedAccumulator {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) fn mean(values: &[f64]) -> f64 {
    compensated_sum(values.iter().copied()) / values.len() as f64
}

/// Population variance (divides by N).
pub(crate) fn population_variance(values: &[f64]) -> f64 {
    let m = mean(values);
    compensated_sum(values.iter().map(|v| (v - m) * (v - m))) / values.len() as f64
}

pub(crate) fn population_std(values: &[f64]) -> f64 {
    population_variance(values).sqrt()
}
